// transmon.hpp — flux-dependent transmon spectrum and dispersive quantities
//
// Symmetric junctions only (d = 0): E_J(Phi) = E_Jsigma |cos(pi Phi/Phi0)|,
// omega_j = j sqrt(8 Ec E_J) + alpha_j with the Duffing ladder
// alpha_j = j(j-1)/2 alpha_2, and couplings g_{j,j+1} proportional to
// sqrt(j+1) E_J^{1/4}, normalized so g_{0,1}(Phi_bias) = g0.

#pragma once

#include <stdexcept>

namespace tdswt {

struct FluxDomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TransmonParams {
    double ej_sigma = 0.0;   // rad/ns
    double ec = 0.0;         // rad/ns
    double d = 0.0;          // junction asymmetry, fixed 0
    double g0 = 0.0;         // rad/ns, g_{0,1} at the bias flux
    double phi_bias = 0.0;   // Phi0 units
    double alpha2 = 0.0;     // rad/ns, negative for transmons

    void validate() const;   // transmon regime: EJ/Ec > 20, d == 0

    /// Device view: fix E_Jsigma from the 0-1 frequency at the bias flux.
    /// All inputs in GHz (f/2pi) except the bias (Phi0 units).
    static TransmonParams from_frequency(double f01_ghz, double ec_ghz,
                                         double alpha2_ghz, double g0_ghz,
                                         double phi_bias);
};

/// E_J(Phi); domain |Phi/Phi0| < 0.5 (throws FluxDomainError outside).
double josephson_energy(double phi, const TransmonParams& p);

double anharmonicity(int j, const TransmonParams& p);
double level_frequency(int j, double phi, const TransmonParams& p);

/// g_{j,j+1}(Phi) = g0 sqrt(j+1) (E_J(Phi)/E_J(Phi_bias))^{1/4}
double coupling(int j, double phi, const TransmonParams& p);

struct DispersiveEntry {
    double delta = 0.0;        // rad/ns
    double lambda = 0.0;       // dimensionless
    double lambda_dot = 0.0;   // 1/ns
    double chi = 0.0;          // rad/ns
    double g = 0.0;            // rad/ns
};

/// d lambda_j / d Phi by 4th-order central difference, step 1e-5 Phi0.
double dlambda_dphi(int j, double phi, double omega_r, const TransmonParams& p);

/// Delta, lambda, lambda_dot, chi, g for level pair (j, j+1).
/// Throws ResonanceError when |Delta_j| <= 1e-3 rad/ns.
DispersiveEntry dispersive_quantities(int j, double phi, double phi_dot,
                                      double omega_r, const TransmonParams& p);

}  // namespace tdswt
