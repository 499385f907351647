#include "tdswt/magnus.hpp"

#include <cmath>

#include "tdswt/units.hpp"

namespace tdswt {

double simpson_mean(std::span<const double> y, double t_g) {
    const std::size_t n = y.size();
    if (n < 3 || (n - 1) % 2 != 0)
        throw QuadratureError("simpson_mean: need an even number of uniform intervals");
    // compensated summation keeps constant inputs exact on long grids
    double sum = 0.0, carry = 0.0;
    auto add = [&](double v) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    };
    add(y[0]);
    add(y[n - 1]);
    for (std::size_t k = 1; k + 1 < n; ++k) add((k % 2 == 1 ? 4.0 : 2.0) * y[k]);
    const double h = t_g / static_cast<double>(n - 1);
    return (h / 3.0) * (sum + carry) / t_g;
}

std::vector<double> cumulative_integral(std::span<const double> y, double dt) {
    const std::size_t n = y.size();
    if (n < 4) throw QuadratureError("cumulative_integral: need at least 4 samples");
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        double inc;
        // integrate the local cubic through four neighboring samples
        if (k == 0)
            inc = (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]) / 24.0;
        else if (k == n - 2)
            inc = (9.0 * y[n - 1] + 19.0 * y[n - 2] - 5.0 * y[n - 3] + y[n - 4]) / 24.0;
        else
            inc = (-y[k - 1] + 13.0 * y[k] + 13.0 * y[k + 1] - y[k + 2]) / 24.0;
        out[k + 1] = out[k] + dt * inc;
    }
    return out;
}

double delta_integral(std::span<const double> a, std::span<const double> b, double dt,
                      double t_g) {
    if (a.size() != b.size()) throw QuadratureError("delta_integral: length mismatch");
    const std::vector<double> ca = cumulative_integral(a, dt);
    const std::vector<double> cb = cumulative_integral(b, dt);
    std::vector<double> integrand(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) integrand[k] = a[k] * cb[k] - b[k] * ca[k];
    return simpson_mean(integrand, t_g) * t_g;
}

std::array<double, 3> averaged_h(const ReducedEntries& e) {
    return {simpson_mean(e.omega, e.t_g), simpson_mean(e.g_r, e.t_g), simpson_mean(e.g_i, e.t_g)};
}

std::array<double, 3> delta_integrals(const ReducedEntries& e) {
    const double dt = e.t_g / static_cast<double>(e.samples() - 1);
    return {delta_integral(e.omega, e.g_r, dt, e.t_g), delta_integral(e.omega, e.g_i, dt, e.t_g),
            delta_integral(e.g_i, e.g_r, dt, e.t_g)};
}

std::pair<double, double> k_constants(double omega_bar, double gr_bar, double gi_bar, double d_wgr,
                                      double d_wgi, double d_gigr, double t_g) {
    const double az1 = t_g * omega_bar - d_gigr;
    const double ax1 = t_g * gr_bar - d_wgi;
    const double ay1 = t_g * gi_bar + d_wgr;
    const double az2 = t_g * omega_bar;
    const double ax2 = t_g * gr_bar;
    const double ay2 = d_wgr;
    return {std::sqrt(az1 * az1 + ax1 * ax1 + ay1 * ay1),
            std::sqrt(az2 * az2 + ax2 * ax2 + ay2 * ay2)};
}

MagnusSummary magnus_summary(const ReducedEntries& entries) {
    MagnusSummary s;
    s.t_g = entries.t_g;
    const auto means = averaged_h(entries);
    s.omega_bar = means[0];
    s.gr_bar = means[1];
    s.gi_bar = means[2];
    const auto deltas = delta_integrals(entries);
    s.d_wgr = deltas[0];
    s.d_wgi = deltas[1];
    s.d_gigr = deltas[2];
    std::tie(s.k1, s.k2) = k_constants(s.omega_bar, s.gr_bar, s.gi_bar, s.d_wgr, s.d_wgi, s.d_gigr,
                                       s.t_g);
    return s;
}

std::array<double, 3> magnus_exponent_u1(const MagnusSummary& s) {
    return {s.t_g * s.omega_bar - s.d_gigr, s.t_g * s.gr_bar - s.d_wgi,
            s.t_g * s.gi_bar + s.d_wgr};
}

std::array<double, 3> magnus_exponent_u2(const MagnusSummary& s) {
    return {s.t_g * s.omega_bar, s.t_g * s.gr_bar, s.d_wgr};
}

namespace {

Eigen::Matrix2cd pauli_exp(const std::array<double, 3>& zxy) {
    // exp(-i (az sz + ax sx + ay sy))
    const double az = zxy[0], ax = zxy[1], ay = zxy[2];
    const double k = std::sqrt(az * az + ax * ax + ay * ay);
    Eigen::Matrix2cd u;
    if (k < 1e-300) return Eigen::Matrix2cd::Identity();
    const double s = std::sin(k) / k;
    const double c = std::cos(k);
    u << Complex(c, -s * az), Complex(-s * ay, -s * ax), Complex(s * ay, -s * ax),
        Complex(c, s * az);
    return u;
}

}  // namespace

Eigen::Matrix2cd magnus_unitary_u1(const MagnusSummary& s) {
    return pauli_exp(magnus_exponent_u1(s));
}

Eigen::Matrix2cd magnus_unitary_u2(const MagnusSummary& s) {
    return pauli_exp(magnus_exponent_u2(s));
}

double f_function(double k, double a1, double a2, double a3, const TargetAngles& angles) {
    const double c1 = std::cos(angles.phi1), s1 = std::sin(angles.phi1);
    const double c2 = std::cos(angles.phi2), s2 = std::sin(angles.phi2);
    const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
    const double proj = a1 * ct * s1 + a2 * c2 * st + a3 * s2 * st;
    if (k <= 1e-12) {
        // k -> 0 limit: sin(k)/k -> 1, cos(k) -> 1
        const double v = c1 * ct - proj;
        return 4.0 * v * v;
    }
    const double v = k * c1 * std::cos(k) * ct - std::sin(k) * proj;
    return 4.0 / (k * k) * v * v;
}

double analytic_delta_f(const MagnusSummary& s, const TargetAngles& angles) {
    const auto a = magnus_exponent_u1(s);
    const auto b = magnus_exponent_u2(s);
    // f argument order (a1, a2, a3) = (sigma_z, sigma_y, sigma_x) components;
    // f evaluates |Tr|^2, fidelities divide by 4
    const double f1 = f_function(s.k1, a[0], a[2], a[1], angles);
    const double f2 = f_function(s.k2, b[0], b[2], b[1], angles);
    return (f1 - f2) / 4.0;
}

double mean_delta_f(const MagnusSummary& s, int grid_per_axis) {
    if (grid_per_axis < 2) throw std::invalid_argument("mean_delta_f: grid too small");
    const double step = units::two_pi / grid_per_axis;
    double sum = 0.0;
    TargetAngles a;
    for (int i = 0; i < grid_per_axis; ++i) {
        a.phi1 = (i + 0.5) * step;
        for (int j = 0; j < grid_per_axis; ++j) {
            a.phi2 = (j + 0.5) * step;
            for (int k = 0; k < grid_per_axis; ++k) {
                a.theta = (k + 0.5) * step;
                sum += std::abs(analytic_delta_f(s, a));
            }
        }
    }
    const double cells = static_cast<double>(grid_per_axis);
    return sum / (cells * cells * cells);
}

double mean_delta_f_mc(const MagnusSummary& s, int n_samples, std::uint64_t seed) {
    const auto angles = sample_angles(seed, n_samples);
    double sum = 0.0;
    for (const auto& a : angles) sum += std::abs(analytic_delta_f(s, a));
    return sum / static_cast<double>(n_samples);
}

}  // namespace tdswt
