#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tdswt/config.hpp"
#include "tdswt/pulse.hpp"
#include "tdswt/units.hpp"

using namespace tdswt;

TEST_CASE("zero-amplitude pulses are constant") {
    for (PulseKind kind : {PulseKind::Sinusoidal, PulseKind::Tangential}) {
        PulseSpec s = kind == PulseKind::Sinusoidal ? PulseSpec::sinusoidal_default(0.01)
                                                    : PulseSpec::tangential_default(0.01);
        s.amplitude = 0.0;
        s.validate();
        for (double t : {0.0, 7.3, 15.0, 30.0}) {
            CHECK(flux(s, t) == doctest::Approx(0.01));
            CHECK(flux_dot(s, t) == 0.0);
        }
    }
}

TEST_CASE("tangential midpoint symmetry") {
    const PulseSpec s = PulseSpec::tangential_default(0.02);
    CHECK(flux(s, s.t_g / 2) == doctest::Approx(0.02).epsilon(1e-14));
    // antisymmetry about t_g/2
    for (double tau : {1.0, 4.5, 9.0, 13.0})
        CHECK(flux(s, s.t_g / 2 + tau) - 0.02 ==
              doctest::Approx(-(flux(s, s.t_g / 2 - tau) - 0.02)).epsilon(1e-12));
}

TEST_CASE("flux_dot matches finite differences") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.01, 29.99);
    const double h = 1e-5;
    for (PulseKind kind : {PulseKind::Sinusoidal, PulseKind::Tangential}) {
        const PulseSpec s = kind == PulseKind::Sinusoidal ? PulseSpec::sinusoidal_default(0.0)
                                                          : PulseSpec::tangential_default(0.0);
        double peak = 0.0;
        for (int i = 0; i <= 300; ++i) peak = std::max(peak, std::abs(flux_dot(s, 0.1 * i)));
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = dist(rng);
            const double fd = (flux(s, t + h) - flux(s, t - h)) / (2.0 * h);
            // relative to the pulse scale: near the tangential tails the flux
            // difference underflows double cancellation long before 1e-8
            worst = std::max(worst, std::abs(flux_dot(s, t) - fd) / peak);
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("amplitude guard and tangent pole") {
    PulseSpec s = PulseSpec::sinusoidal_default(0.0);
    s.amplitude = 0.061;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    PulseSpec t = PulseSpec::tangential_default(0.0);
    CHECK(t.peak_excursion() == doctest::Approx(0.060).epsilon(1e-12));

    t.b = 2.0;  // B erf(C t_g/2) > pi/2
    CHECK_THROWS_AS(t.peak_excursion(), TangentPoleError);
}

TEST_CASE("sampling") {
    const auto cfg = ExperimentConfig::defaults();
    const auto params = cfg.transmons();

    SUBCASE("n_steps floor") {
        CHECK_THROWS_AS(sample(cfg.pulse_spec(), 8, params, cfg.omega_r()), std::invalid_argument);
    }

    SUBCASE("constant pulse gives identical samples") {
        PulseSpec s = PulseSpec::tangential_default(0.0);
        s.amplitude = 0.0;
        const ControlTrace trace = sample(s, 16, params, cfg.omega_r());
        for (int k = 1; k < trace.samples(); ++k) {
            CHECK(trace.phi[static_cast<std::size_t>(k)] == trace.phi[0]);
            for (int m = 0; m < 2; ++m)
                for (int j = 0; j < 3; ++j) {
                    const auto& a =
                        trace.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]
                                     [static_cast<std::size_t>(j)];
                    const auto& b = trace.entries[0][static_cast<std::size_t>(m)]
                                                 [static_cast<std::size_t>(j)];
                    CHECK(a.lambda == b.lambda);
                    CHECK(a.chi == b.chi);
                }
        }
    }

    SUBCASE("trace excursion matches the analytic envelope") {
        const PulseSpec s = PulseSpec::tangential_default(0.0);
        const ControlTrace trace = sample(s, 512, params, cfg.omega_r());
        double max_exc = 0.0;
        for (double v : trace.phi) max_exc = std::max(max_exc, std::abs(v));
        CHECK(max_exc == doctest::Approx(s.peak_excursion()).epsilon(1e-12));
    }

    SUBCASE("static systems stay at their bias") {
        const ControlTrace trace = sample(cfg.pulse_spec(), 32, params, cfg.omega_r(), 1);
        for (int k = 0; k < trace.samples(); ++k) {
            const auto& q1_entry = trace.entries[static_cast<std::size_t>(k)][0][0];
            CHECK(q1_entry.lambda == trace.entries[0][0][0].lambda);
            CHECK(q1_entry.lambda_dot == 0.0);
        }
    }
}
