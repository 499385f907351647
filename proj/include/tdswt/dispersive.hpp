// dispersive.hpp — dispersive Hamiltonians on the truncated product space and
// the reduced {|11>,|20>} two-level model
//
// The cross-coupling groups carry the 1/2 produced by the hierarchy term
// 1/2 [H2, S1] (the two-detuning-averaged exchange coupling); the diagonal
// chi shifts come out of the same commutator.  The reduced off-diagonal is
// <11|H|20> = g_r - i g_i with g_i = -Im<11|H|20>.

#pragma once

#include <cstdint>
#include <vector>

#include "tdswt/operators.hpp"
#include "tdswt/pulse.hpp"

namespace tdswt {

enum class ModelVariant { Full, NoSdot, ConstantMean, FullJc };

const char* variant_name(ModelVariant v);

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Jaynes-Cummings H0 (cavity + bare levels) and coupling H2 at given fluxes.
struct JcParts {
    Matrix h0;
    Matrix h2;
};
JcParts jc_hamiltonian(const SystemSpec& spec,
                       const std::vector<TransmonParams>& params,
                       const std::vector<double>& fluxes);

/// Dispersive Hamiltonian (state-dependent cavity shift, chi-shifted levels,
/// exchange couplings and their lambda-dot partners) at trace sample k.
Matrix full_dispersive_hamiltonian(const SystemSpec& spec, const ControlTrace& trace, int t_index);

/// Reduced {|11>,|20>} quantities sampled on the control grid.
struct ReducedEntries {
    double t_g = 0.0;
    std::vector<double> times;
    std::vector<double> omega;      // diagonal half-splitting, rad/ns
    std::vector<double> g_r;        // rad/ns
    std::vector<double> g_i;        // rad/ns
    std::vector<double> diag_mean;  // (E11 + E20)/2, rad/ns (frame alignment)
    // constant-mean composition (time-averaged g, chi, Delta, then composed);
    // valid only when the grid has an even interval count
    bool has_const = false;
    double omega_const = 0.0;
    double gr_const = 0.0;

    int samples() const { return static_cast<int>(times.size()); }
};

/// Two-transmon reduction of the dispersive Hamiltonian; system 0 provides
/// levels (0,1,2), system 1 the (0,1) pair.
ReducedEntries extract_reduced_entries(const ControlTrace& trace);

/// FULL:     [[w, gr - i gi], [gr + i gi, -w]] at sample k
/// NO_SDOT:  same with gi = 0
/// CONSTANT_MEAN: [[w_c, g_c], [g_c, -w_c]] from the averaged primitives
Eigen::Matrix2cd reduced_hamiltonian(const ReducedEntries& entries, ModelVariant variant, int t_index);

struct AdiabaticityReport {
    double max_lambda = 0.0;
    double max_lambda_dot_over_delta = 0.0;
    bool ok = false;   // both maxima below 0.3
};
AdiabaticityReport adiabaticity_report(const ControlTrace& trace);

/// Pointwise reduced model for evolution at arbitrary times.  Transmon 0 is
/// static at its bias, transmon 1 follows the pulse.
class ReducedModel {
  public:
    ReducedModel(TransmonParams q1, TransmonParams q2, double omega_r,
                 PulseSpec pulse, int n_mean = 4096);

    struct Point {
        double omega, g_r, g_i, diag_mean;
    };
    Point at(double t) const;

    /// Traceless reduced Hamiltonian for the given variant.
    Eigen::Matrix2cd hamiltonian(double t, ModelVariant variant) const;
    /// Same plus the diagonal mean times identity (lab-comparable phases).
    Eigen::Matrix2cd hamiltonian_with_mean(double t, ModelVariant variant) const;

    double t_g() const { return pulse_.t_g; }
    const PulseSpec& pulse() const { return pulse_; }
    double omega_const() const { return omega_const_; }
    double gr_const() const { return gr_const_; }

  private:
    TransmonParams q1_, q2_;
    double omega_r_;
    PulseSpec pulse_;
    double omega_const_, gr_const_;
};

}  // namespace tdswt
