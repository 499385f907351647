// config.hpp — experiment configuration file (INI-style, explicit units)

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdswt/dispersive.hpp"
#include "tdswt/pulse.hpp"
#include "tdswt/transmon.hpp"

namespace tdswt {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One transmon block as written in the file (GHz / mPhi0 units).
struct TransmonConfig {
    double frequency_at_bias_ghz = 0.0;
    double anharmonicity_mhz = 0.0;
    double charging_energy_mhz = 0.0;
    double coupling_g0_mhz = 0.0;
    double flux_bias_mphi0 = 0.0;

    TransmonParams build() const;
};

struct PulseConfig {
    PulseKind kind = PulseKind::Tangential;
    double amplitude_mphi0 = 60.0;      // peak excursion target
    double gate_time_ns = 30.0;
    double tangential_b_rad = 1.0;
    double tangential_c_per_ns = 0.25;
    bool sinusoidal_auto = true;        // nu = 1/(2 t_g) when true
    double sinusoidal_frequency_per_ns = 0.0;
    double sinusoidal_phase_rad = -1.5707963267948966;

    PulseSpec build(double phi_bias) const;
};

struct ExperimentConfig {
    double resonator_frequency_ghz = 7.15;
    TransmonConfig q1;
    TransmonConfig q2;
    PulseConfig pulse;
    int n_steps = 4096;
    int n_targets = 10000;
    std::uint64_t seed = 20240901;
    int threads = 1;
    int cavity_cutoff = 5;
    int levels_per_transmon = 3;
    int histogram_bins = 60;
    int angle_grid = 64;
    std::string output_dir = "out";
    std::vector<ModelVariant> variants = {ModelVariant::Full, ModelVariant::NoSdot,
                                          ModelVariant::ConstantMean};

    static ExperimentConfig defaults();

    double omega_r() const;
    PulseSpec pulse_spec() const;            // driven transmon's bias
    std::vector<TransmonParams> transmons() const;
    SystemSpec system_spec() const;
    void validate() const;
};

/// Parse the INI-style config text; errors carry 1-based line numbers.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical serialization; parse(dump(c)) reproduces c exactly.
std::string dump_config(const ExperimentConfig& c);

}  // namespace tdswt
