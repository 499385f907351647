#include "tdswt/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tdswt/units.hpp"

namespace tdswt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMaxExcursion = 0.060;  // Phi0
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

double PulseSpec::peak_excursion() const {
    switch (kind) {
        case PulseKind::Sinusoidal: {
            // max over [0, t_g] of |A sin(2 pi nu t + phase)|
            double peak = std::max(std::abs(std::sin(phase)),
                                   std::abs(std::sin(2.0 * kPi * nu * t_g + phase)));
            // interior extrema where the argument hits +-pi/2 + k pi
            const double a0 = phase, a1 = 2.0 * kPi * nu * t_g + phase;
            const double lo = std::min(a0, a1), hi = std::max(a0, a1);
            for (double arg = std::ceil((lo - kPi / 2.0) / kPi) * kPi + kPi / 2.0; arg <= hi;
                 arg += kPi)
                peak = 1.0;
            return std::abs(amplitude) * peak;
        }
        case PulseKind::Tangential: {
            const double u = std::abs(b) * std::erf(c * t_g / 2.0);
            if (u >= kPi / 2.0)
                throw TangentPoleError("pulse: |B erf(C t_g/2)| reaches the tangent pole");
            return std::abs(amplitude) * std::tan(u);
        }
    }
    throw std::invalid_argument("pulse: unknown kind");
}

void PulseSpec::validate() const {
    if (t_g <= 0.0) throw std::invalid_argument("pulse: t_g must be positive");
    const double peak = peak_excursion();
    if (peak > kMaxExcursion + 1e-12)
        throw std::invalid_argument("pulse: peak flux excursion " + std::to_string(peak * 1e3) +
                                    " mPhi0 exceeds the 60 mPhi0 guard");
}

PulseSpec PulseSpec::sinusoidal_default(double phi_bias, double t_g) {
    PulseSpec s;
    s.kind = PulseKind::Sinusoidal;
    s.phi_bias = phi_bias;
    s.t_g = t_g;
    s.nu = 1.0 / (2.0 * t_g);
    s.phase = -kPi / 2.0;
    s.amplitude = kMaxExcursion;
    s.validate();
    return s;
}

PulseSpec PulseSpec::tangential_default(double phi_bias, double t_g) {
    PulseSpec s;
    s.kind = PulseKind::Tangential;
    s.phi_bias = phi_bias;
    s.t_g = t_g;
    s.b = 1.0;
    s.c = 0.25;
    s.amplitude = kMaxExcursion / std::tan(s.b * std::erf(s.c * t_g / 2.0));
    s.validate();
    return s;
}

double flux(const PulseSpec& spec, double t) {
    switch (spec.kind) {
        case PulseKind::Sinusoidal:
            return spec.phi_bias + spec.amplitude * std::sin(2.0 * kPi * spec.nu * t + spec.phase);
        case PulseKind::Tangential: {
            const double u = spec.b * std::erf(spec.c * (t - spec.t_g / 2.0));
            if (std::abs(u) >= kPi / 2.0) throw TangentPoleError("flux: tangent pole reached");
            return spec.phi_bias + spec.amplitude * std::tan(u);
        }
    }
    throw std::invalid_argument("flux: unknown pulse kind");
}

double flux_dot(const PulseSpec& spec, double t) {
    switch (spec.kind) {
        case PulseKind::Sinusoidal:
            return spec.amplitude * 2.0 * kPi * spec.nu *
                   std::cos(2.0 * kPi * spec.nu * t + spec.phase);
        case PulseKind::Tangential: {
            const double x = spec.c * (t - spec.t_g / 2.0);
            const double u = spec.b * std::erf(x);
            if (std::abs(u) >= kPi / 2.0) throw TangentPoleError("flux_dot: tangent pole reached");
            const double sec = 1.0 / std::cos(u);
            return spec.amplitude * spec.b * (2.0 * spec.c / kSqrtPi) * std::exp(-x * x) * sec * sec;
        }
    }
    throw std::invalid_argument("flux_dot: unknown pulse kind");
}

ControlTrace sample(const PulseSpec& spec, int n_steps, const std::vector<TransmonParams>& params,
                    double omega_r, int driven, int level_pairs) {
    if (n_steps < 16) throw std::invalid_argument("sample: n_steps must be >= 16");
    if (driven < 0 || driven >= static_cast<int>(params.size()))
        throw std::invalid_argument("sample: driven system index out of range");
    if (level_pairs < 1) throw std::invalid_argument("sample: level_pairs must be >= 1");
    spec.validate();

    ControlTrace trace;
    trace.t_g = spec.t_g;
    trace.omega_r = omega_r;
    trace.driven = driven;
    const int n = n_steps + 1;
    trace.times.resize(static_cast<std::size_t>(n));
    trace.phi.resize(static_cast<std::size_t>(n));
    trace.phi_dot.resize(static_cast<std::size_t>(n));
    trace.entries.resize(static_cast<std::size_t>(n));

    const double dt = spec.t_g / n_steps;
    for (int k = 0; k < n; ++k) {
        const double t = dt * k;
        trace.times[static_cast<std::size_t>(k)] = t;
        trace.phi[static_cast<std::size_t>(k)] = flux(spec, t);
        trace.phi_dot[static_cast<std::size_t>(k)] = flux_dot(spec, t);

        auto& row = trace.entries[static_cast<std::size_t>(k)];
        row.resize(params.size());
        for (std::size_t m = 0; m < params.size(); ++m) {
            const bool is_driven = static_cast<int>(m) == driven;
            const double phi = is_driven ? trace.phi[static_cast<std::size_t>(k)]
                                         : params[m].phi_bias;
            const double phid = is_driven ? trace.phi_dot[static_cast<std::size_t>(k)] : 0.0;
            row[m].resize(static_cast<std::size_t>(level_pairs));
            for (int j = 0; j < level_pairs; ++j)
                row[m][static_cast<std::size_t>(j)] =
                    dispersive_quantities(j, phi, phid, omega_r, params[m]);
        }
    }
    return trace;
}

}  // namespace tdswt
