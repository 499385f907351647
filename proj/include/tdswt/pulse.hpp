// pulse.hpp — flux control waveforms and the sampled control trace

#pragma once

#include <stdexcept>
#include <vector>

#include "tdswt/transmon.hpp"

namespace tdswt {

enum class PulseKind { Sinusoidal, Tangential };

struct TangentPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Flux amplitudes in Phi0, times in ns.  The peak excursion from the bias
/// is checked against the 60 mPhi0 guard on validate().
struct PulseSpec {
    PulseKind kind = PulseKind::Tangential;
    double phi_bias = 0.0;
    double amplitude = 0.0;   // A
    double nu = 0.0;          // 1/ns (sinusoidal)
    double phase = 0.0;       // rad (sinusoidal)
    double b = 0.0;           // rad (tangential)
    double c = 0.0;           // 1/ns (tangential)
    double t_g = 0.0;

    double peak_excursion() const;   // max_t |Phi(t) - Phi_bias|, analytic
    void validate() const;

    /// nu = 1/(2 t_g), phase = -pi/2, A = 60 mPhi0
    static PulseSpec sinusoidal_default(double phi_bias, double t_g = 30.0);
    /// B = 1 rad, C = 0.25 /ns, A chosen so the peak excursion is 60 mPhi0
    static PulseSpec tangential_default(double phi_bias, double t_g = 30.0);
};

double flux(const PulseSpec& spec, double t);
double flux_dot(const PulseSpec& spec, double t);

/// Uniform time grid with flux and all per-level dispersive quantities.
/// entries[k][m][j] holds system m, level pair (j, j+1) at sample k.
struct ControlTrace {
    double t_g = 0.0;
    double omega_r = 0.0;
    int driven = 0;                 // index of the flux-driven system
    std::vector<double> times;
    std::vector<double> phi;        // driven-system flux
    std::vector<double> phi_dot;
    std::vector<std::vector<std::vector<DispersiveEntry>>> entries;

    int samples() const { return static_cast<int>(times.size()); }
    int systems() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

/// t_k = k t_g / n_steps, k = 0..n_steps.  Systems other than `driven` sit at
/// their bias flux; `level_pairs` sets how many (j, j+1) pairs are derived
/// per system.  Requires n_steps >= 16.
ControlTrace sample(const PulseSpec& spec, int n_steps,
                    const std::vector<TransmonParams>& params,
                    double omega_r, int driven = 1, int level_pairs = 3);

}  // namespace tdswt
