#include "tdswt/transmon.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tdswt/units.hpp"

namespace tdswt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFluxStep = 1e-5;       // Phi0, for dlambda/dPhi
constexpr double kMinDetuning = 1e-3;    // rad/ns
}  // namespace

void TransmonParams::validate() const {
    if (ec <= 0.0) throw std::invalid_argument("transmon: Ec must be positive");
    if (ej_sigma <= 0.0) throw std::invalid_argument("transmon: EJ_sigma must be positive");
    if (ej_sigma / ec <= 20.0)
        throw std::invalid_argument("transmon: EJ/Ec = " + std::to_string(ej_sigma / ec) +
                                    " outside the transmon regime (need > 20)");
    if (d != 0.0) throw std::invalid_argument("transmon: only symmetric junctions (d = 0) supported");
}

TransmonParams TransmonParams::from_frequency(double f01_ghz, double ec_ghz, double alpha2_ghz,
                                              double g0_ghz, double phi_bias) {
    TransmonParams p;
    p.ec = units::ghz(ec_ghz);
    p.alpha2 = units::ghz(alpha2_ghz);
    p.g0 = units::ghz(g0_ghz);
    p.phi_bias = phi_bias;
    const double w1 = units::ghz(f01_ghz);
    // omega_1 = sqrt(8 Ec EJ(phi_bias))
    p.ej_sigma = w1 * w1 / (8.0 * p.ec * std::cos(kPi * phi_bias));
    p.validate();
    return p;
}

double josephson_energy(double phi, const TransmonParams& p) {
    if (std::abs(phi) >= 0.5)
        throw FluxDomainError("josephson_energy: |Phi/Phi0| = " + std::to_string(std::abs(phi)) +
                              " >= 0.5 leaves the transmon regime");
    return p.ej_sigma * std::abs(std::cos(kPi * phi));
}

double anharmonicity(int j, const TransmonParams& p) {
    if (j < 0) throw std::invalid_argument("anharmonicity: j must be >= 0");
    return 0.5 * double(j) * double(j - 1) * p.alpha2;
}

double level_frequency(int j, double phi, const TransmonParams& p) {
    if (j < 0) throw std::invalid_argument("level_frequency: j must be >= 0");
    return double(j) * std::sqrt(8.0 * p.ec * josephson_energy(phi, p)) + anharmonicity(j, p);
}

double coupling(int j, double phi, const TransmonParams& p) {
    if (j < 0) throw std::invalid_argument("coupling: j must be >= 0");
    const double ratio = josephson_energy(phi, p) / josephson_energy(p.phi_bias, p);
    return p.g0 * std::sqrt(double(j + 1)) * std::pow(ratio, 0.25);
}

namespace {

double detuning(int j, double phi, double omega_r, const TransmonParams& p) {
    return level_frequency(j + 1, phi, p) - level_frequency(j, phi, p) - omega_r;
}

double lambda_at(int j, double phi, double omega_r, const TransmonParams& p) {
    return coupling(j, phi, p) / detuning(j, phi, omega_r, p);
}

}  // namespace

double dlambda_dphi(int j, double phi, double omega_r, const TransmonParams& p) {
    const double h = kFluxStep;
    return (-lambda_at(j, phi + 2 * h, omega_r, p) + 8.0 * lambda_at(j, phi + h, omega_r, p) -
            8.0 * lambda_at(j, phi - h, omega_r, p) + lambda_at(j, phi - 2 * h, omega_r, p)) /
           (12.0 * h);
}

DispersiveEntry dispersive_quantities(int j, double phi, double phi_dot, double omega_r,
                                      const TransmonParams& p) {
    DispersiveEntry e;
    e.delta = detuning(j, phi, omega_r, p);
    if (std::abs(e.delta) <= kMinDetuning)
        throw ResonanceError("dispersive_quantities: |Delta_" + std::to_string(j) + "| = " +
                             std::to_string(std::abs(e.delta)) +
                             " rad/ns is near-resonant (dispersive regime violated)");
    e.g = coupling(j, phi, p);
    e.lambda = e.g / e.delta;
    e.chi = e.g * e.g / e.delta;
    e.lambda_dot = phi_dot == 0.0 ? 0.0 : dlambda_dphi(j, phi, omega_r, p) * phi_dot;
    return e;
}

}  // namespace tdswt
