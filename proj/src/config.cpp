#include "tdswt/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tdswt/io.hpp"
#include "tdswt/units.hpp"

namespace tdswt {

TransmonParams TransmonConfig::build() const {
    return TransmonParams::from_frequency(frequency_at_bias_ghz, charging_energy_mhz * 1e-3,
                                          anharmonicity_mhz * 1e-3, coupling_g0_mhz * 1e-3,
                                          flux_bias_mphi0 * 1e-3);
}

PulseSpec PulseConfig::build(double phi_bias) const {
    PulseSpec s;
    s.kind = kind;
    s.phi_bias = phi_bias;
    s.t_g = gate_time_ns;
    if (kind == PulseKind::Tangential) {
        s.b = tangential_b_rad;
        s.c = tangential_c_per_ns;
        const double u = s.b * std::erf(s.c * s.t_g / 2.0);
        s.amplitude = amplitude_mphi0 * 1e-3 / std::tan(u);
    } else {
        s.nu = sinusoidal_auto ? 1.0 / (2.0 * gate_time_ns) : sinusoidal_frequency_per_ns;
        s.phase = sinusoidal_phase_rad;
        s.amplitude = amplitude_mphi0 * 1e-3;
    }
    s.validate();
    return s;
}

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig c;
    c.q1 = {7.00, -300.0, 300.0, 27.0, 0.0};
    c.q2 = {6.76, -300.0, 300.0, 27.0, 0.0};
    return c;
}

double ExperimentConfig::omega_r() const { return units::ghz(resonator_frequency_ghz); }

PulseSpec ExperimentConfig::pulse_spec() const { return pulse.build(q2.flux_bias_mphi0 * 1e-3); }

std::vector<TransmonParams> ExperimentConfig::transmons() const {
    return {q1.build(), q2.build()};
}

SystemSpec ExperimentConfig::system_spec() const {
    SystemSpec s;
    s.cavity_cutoff = cavity_cutoff;
    s.levels = {levels_per_transmon, levels_per_transmon};
    s.omega_r = omega_r();
    return s;
}

void ExperimentConfig::validate() const {
    for (const TransmonParams& p : transmons()) p.validate();
    pulse_spec().validate();
    system_spec().validate();
    if (n_steps < 64 || n_steps % 2 != 0)
        throw ConfigError("config: n_steps must be even and >= 64 (quadrature grid)");
    if (n_targets < 1) throw ConfigError("config: n_targets must be >= 1");
    if (threads < 1) throw ConfigError("config: threads must be >= 1");
    if (histogram_bins < 1) throw ConfigError("config: histogram_bins must be >= 1");
    if (angle_grid < 2) throw ConfigError("config: angle_grid must be >= 2");
    if (variants.empty()) throw ConfigError("config: variant list is empty");
}

namespace {

struct Parser {
    std::string section;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
    }

    double number(const std::string& value, const std::string& expected_unit) const {
        std::istringstream ss(value);
        double v;
        std::string unit;
        if (!(ss >> v)) fail("expected a number, got '" + value + "'");
        ss >> unit;
        if (!expected_unit.empty() && !unit.empty() && unit != expected_unit)
            fail("expected unit '" + expected_unit + "', got '" + unit + "'");
        if (!expected_unit.empty() && unit.empty())
            fail("missing unit suffix (expected '" + expected_unit + "')");
        return v;
    }

    long long integer(const std::string& value) const {
        std::istringstream ss(value);
        long long v;
        if (!(ss >> v)) fail("expected an integer, got '" + value + "'");
        return v;
    }
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<ModelVariant> parse_variants(const std::string& value, const Parser& p) {
    std::vector<ModelVariant> out;
    std::istringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok == "full")
            out.push_back(ModelVariant::Full);
        else if (tok == "no-sdot")
            out.push_back(ModelVariant::NoSdot);
        else if (tok == "constant")
            out.push_back(ModelVariant::ConstantMean);
        else
            p.fail("unknown variant '" + tok + "' (full|no-sdot|constant)");
    }
    return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg = ExperimentConfig::defaults();
    Parser p;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++p.line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') p.fail("unterminated section header");
            p.section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) p.fail("empty key or value");

        TransmonConfig* q = nullptr;
        if (p.section == "transmon.1") q = &cfg.q1;
        if (p.section == "transmon.2") q = &cfg.q2;

        if (p.section == "resonator") {
            if (key == "frequency")
                cfg.resonator_frequency_ghz = p.number(value, "ghz");
            else
                p.fail("unknown key '" + key + "' in [resonator]");
        } else if (q != nullptr) {
            if (key == "frequency_at_bias")
                q->frequency_at_bias_ghz = p.number(value, "ghz");
            else if (key == "anharmonicity")
                q->anharmonicity_mhz = p.number(value, "mhz");
            else if (key == "charging_energy")
                q->charging_energy_mhz = p.number(value, "mhz");
            else if (key == "coupling_g0")
                q->coupling_g0_mhz = p.number(value, "mhz");
            else if (key == "flux_bias")
                q->flux_bias_mphi0 = p.number(value, "mphi0");
            else
                p.fail("unknown key '" + key + "' in [" + p.section + "]");
        } else if (p.section == "pulse") {
            if (key == "kind") {
                if (value == "tan")
                    cfg.pulse.kind = PulseKind::Tangential;
                else if (value == "sin")
                    cfg.pulse.kind = PulseKind::Sinusoidal;
                else
                    p.fail("pulse kind must be 'tan' or 'sin'");
            } else if (key == "amplitude")
                cfg.pulse.amplitude_mphi0 = p.number(value, "mphi0");
            else if (key == "gate_time")
                cfg.pulse.gate_time_ns = p.number(value, "ns");
            else if (key == "tangential_b")
                cfg.pulse.tangential_b_rad = p.number(value, "rad");
            else if (key == "tangential_c")
                cfg.pulse.tangential_c_per_ns = p.number(value, "per_ns");
            else if (key == "sinusoidal_frequency") {
                cfg.pulse.sinusoidal_auto = false;
                cfg.pulse.sinusoidal_frequency_per_ns = p.number(value, "per_ns");
            } else if (key == "sinusoidal_phase")
                cfg.pulse.sinusoidal_phase_rad = p.number(value, "rad");
            else
                p.fail("unknown key '" + key + "' in [pulse]");
        } else if (p.section == "simulation") {
            if (key == "n_steps")
                cfg.n_steps = static_cast<int>(p.integer(value));
            else if (key == "n_targets")
                cfg.n_targets = static_cast<int>(p.integer(value));
            else if (key == "seed")
                cfg.seed = static_cast<std::uint64_t>(p.integer(value));
            else if (key == "threads")
                cfg.threads = static_cast<int>(p.integer(value));
            else if (key == "cavity_cutoff")
                cfg.cavity_cutoff = static_cast<int>(p.integer(value));
            else if (key == "levels_per_transmon")
                cfg.levels_per_transmon = static_cast<int>(p.integer(value));
            else if (key == "histogram_bins")
                cfg.histogram_bins = static_cast<int>(p.integer(value));
            else if (key == "angle_grid")
                cfg.angle_grid = static_cast<int>(p.integer(value));
            else if (key == "output_dir")
                cfg.output_dir = value;
            else if (key == "variants")
                cfg.variants = parse_variants(value, p);
            else
                p.fail("unknown key '" + key + "' in [simulation]");
        } else {
            p.fail("key outside a known section");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig& c) {
    std::ostringstream out;
    auto num = [](double v) { return format_double(v); };
    out << "# tdswt experiment configuration\n";
    out << "\n[resonator]\n";
    out << "frequency = " << num(c.resonator_frequency_ghz) << " ghz\n";
    const TransmonConfig* qs[2] = {&c.q1, &c.q2};
    for (int i = 0; i < 2; ++i) {
        out << "\n[transmon." << (i + 1) << "]\n";
        out << "frequency_at_bias = " << num(qs[i]->frequency_at_bias_ghz) << " ghz\n";
        out << "anharmonicity = " << num(qs[i]->anharmonicity_mhz) << " mhz\n";
        out << "charging_energy = " << num(qs[i]->charging_energy_mhz) << " mhz\n";
        out << "coupling_g0 = " << num(qs[i]->coupling_g0_mhz) << " mhz\n";
        out << "flux_bias = " << num(qs[i]->flux_bias_mphi0) << " mphi0\n";
    }
    out << "\n[pulse]\n";
    out << "kind = " << (c.pulse.kind == PulseKind::Tangential ? "tan" : "sin") << "\n";
    out << "amplitude = " << num(c.pulse.amplitude_mphi0) << " mphi0\n";
    out << "gate_time = " << num(c.pulse.gate_time_ns) << " ns\n";
    out << "tangential_b = " << num(c.pulse.tangential_b_rad) << " rad\n";
    out << "tangential_c = " << num(c.pulse.tangential_c_per_ns) << " per_ns\n";
    if (!c.pulse.sinusoidal_auto)
        out << "sinusoidal_frequency = " << num(c.pulse.sinusoidal_frequency_per_ns) << " per_ns\n";
    out << "sinusoidal_phase = " << num(c.pulse.sinusoidal_phase_rad) << " rad\n";
    out << "\n[simulation]\n";
    out << "n_steps = " << c.n_steps << "\n";
    out << "n_targets = " << c.n_targets << "\n";
    out << "seed = " << c.seed << "\n";
    out << "threads = " << c.threads << "\n";
    out << "cavity_cutoff = " << c.cavity_cutoff << "\n";
    out << "levels_per_transmon = " << c.levels_per_transmon << "\n";
    out << "histogram_bins = " << c.histogram_bins << "\n";
    out << "angle_grid = " << c.angle_grid << "\n";
    out << "output_dir = " << c.output_dir << "\n";
    out << "variants = ";
    for (std::size_t i = 0; i < c.variants.size(); ++i)
        out << (i ? "," : "") << variant_name(c.variants[i]);
    out << "\n";
    return out.str();
}

}  // namespace tdswt
