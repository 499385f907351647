#include "tdswt/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tdswt {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

namespace {
constexpr const char* kEol = "\r\n";  // RFC-4180
}

std::string gate_stats_csv(const std::vector<GateStatsRecord>& records) {
    std::ostringstream out;
    out << "phi1,phi2,theta,F1,F2,F3,dF12,dF13" << kEol;
    for (const auto& r : records) {
        out << format_double(r.angles.phi1) << ',' << format_double(r.angles.phi2) << ','
            << format_double(r.angles.theta) << ',' << format_double(r.f1) << ','
            << format_double(r.f2) << ',' << format_double(r.f3) << ','
            << format_double(r.df12) << ',' << format_double(r.df13) << kEol;
    }
    return out.str();
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream out;
    out << "bin_left,bin_right,density" << kEol;
    for (std::size_t i = 0; i < h.density.size(); ++i)
        out << format_double(h.edges[i]) << ',' << format_double(h.edges[i + 1]) << ','
            << format_double(h.density[i]) << kEol;
    return out.str();
}

std::string trace_csv(const ControlTrace& trace) {
    std::ostringstream out;
    out << "t,phi,phi_dot";
    const int n_sys = trace.systems();
    const auto pairs = [&](int m) {
        return static_cast<int>(trace.entries[0][static_cast<std::size_t>(m)].size());
    };
    for (int m = 0; m < n_sys; ++m)
        for (int j = 0; j < pairs(m); ++j) {
            const std::string tag = "_q" + std::to_string(m + 1) + "_j" + std::to_string(j);
            out << ",delta" << tag << ",lambda" << tag << ",lambda_dot" << tag << ",chi" << tag
                << ",g" << tag;
        }
    out << kEol;
    for (int k = 0; k < trace.samples(); ++k) {
        out << format_double(trace.times[static_cast<std::size_t>(k)]) << ','
            << format_double(trace.phi[static_cast<std::size_t>(k)]) << ','
            << format_double(trace.phi_dot[static_cast<std::size_t>(k)]);
        for (int m = 0; m < n_sys; ++m)
            for (int j = 0; j < pairs(m); ++j) {
                const auto& e =
                    trace.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]
                                 [static_cast<std::size_t>(j)];
                out << ',' << format_double(e.delta) << ',' << format_double(e.lambda) << ','
                    << format_double(e.lambda_dot) << ',' << format_double(e.chi) << ','
                    << format_double(e.g);
            }
        out << kEol;
    }
    return out.str();
}

std::string magnus_summary_json(const MagnusSummary& s, double mean_df) {
    nlohmann::ordered_json j;
    j["omega_bar"] = s.omega_bar;
    j["gr_bar"] = s.gr_bar;
    j["gi_bar"] = s.gi_bar;
    j["d_wgr"] = s.d_wgr;
    j["d_wgi"] = s.d_wgi;
    j["d_gigr"] = s.d_gigr;
    j["k1"] = s.k1;
    j["k2"] = s.k2;
    j["mean_dF"] = mean_df;
    j["log10_mean_dF"] = std::log10(mean_df);
    return j.dump(2) + "\n";
}

}  // namespace tdswt
