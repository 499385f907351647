#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tdswt/config.hpp"
#include "tdswt/pulse.hpp"
#include "tdswt/transmon.hpp"
#include "tdswt/units.hpp"

using namespace tdswt;

namespace {
TransmonParams default_q1() { return ExperimentConfig::defaults().q1.build(); }
}  // namespace

TEST_CASE("josephson energy") {
    const TransmonParams p = default_q1();
    CHECK(josephson_energy(0.0, p) == doctest::Approx(p.ej_sigma));
    CHECK(josephson_energy(1.0 / 3.0, p) == doctest::Approx(p.ej_sigma / 2.0));
    CHECK_NOTHROW(josephson_energy(0.49, p));
    CHECK_THROWS_AS(josephson_energy(0.5, p), FluxDomainError);
    CHECK_THROWS_AS(josephson_energy(-0.6, p), FluxDomainError);

    // strictly decreasing on (0, 0.5)
    double prev = josephson_energy(1e-3, p);
    for (double phi = 0.05; phi < 0.5; phi += 0.05) {
        const double cur = josephson_energy(phi, p);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("level frequencies and anharmonicities") {
    const TransmonParams p = default_q1();
    CHECK(level_frequency(0, 0.1, p) == 0.0);
    CHECK(anharmonicity(0, p) == 0.0);
    CHECK(anharmonicity(1, p) == 0.0);
    CHECK(anharmonicity(3, p) == doctest::Approx(3.0 * p.alpha2));

    // default Q1 sits at omega_1/2pi = 7 GHz
    CHECK(level_frequency(1, p.phi_bias, p) == doctest::Approx(units::ghz(7.0)).epsilon(1e-12));

    // scaling: Ec -> s^2 Ec, EJ -> s EJ rescales omega_1 by s^(3/2)
    TransmonParams scaled = p;
    scaled.ec *= 16.0;
    scaled.ej_sigma *= 4.0;
    CHECK(level_frequency(1, 0.2, scaled) ==
          doctest::Approx(8.0 * level_frequency(1, 0.2, p)).epsilon(1e-13));
}

TEST_CASE("couplings") {
    const TransmonParams p = default_q1();
    CHECK(coupling(0, p.phi_bias, p) == doctest::Approx(p.g0));
    CHECK(coupling(1, 0.21, p) / coupling(0, 0.21, p) == doctest::Approx(std::sqrt(2.0)));
    const double g_mhz = units::to_mhz(p.g0);
    CHECK(g_mhz >= 25.0);
    CHECK(g_mhz <= 30.0);
}

TEST_CASE("dispersive quantities") {
    // lambda and chi exactly as computed from g and Delta
    TransmonParams p = TransmonParams::from_frequency(7.0, 0.3, -0.3, 0.025, 0.0);
    const double omega_r = level_frequency(1, 0.0, p) - units::ghz(0.5);
    const auto e = dispersive_quantities(0, 0.0, 0.0, omega_r, p);
    CHECK(e.delta == doctest::Approx(units::ghz(0.5)).epsilon(1e-12));
    CHECK(e.lambda == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(e.chi == doctest::Approx(units::ghz(1.25e-3)).epsilon(1e-12));
    CHECK(e.lambda_dot == 0.0);

    // near-resonant detuning is rejected
    const double omega_res = level_frequency(1, 0.0, p) - 5e-4;
    CHECK_THROWS_AS(dispersive_quantities(0, 0.0, 0.0, omega_res, p), ResonanceError);
}

TEST_CASE("lambda_dot matches the time-difference oracle") {
    const auto cfg = ExperimentConfig::defaults();
    const TransmonParams p = cfg.q2.build();
    const double omega_r = cfg.omega_r();
    const PulseSpec pulse = PulseSpec::tangential_default(p.phi_bias);

    double worst = 0.0;
    const double h = 1e-4;
    for (double t : {3.0, 9.0, 14.5, 18.0, 26.0}) {
        const auto e = dispersive_quantities(0, flux(pulse, t), flux_dot(pulse, t), omega_r, p);
        auto lam = [&](double tt) {
            return dispersive_quantities(0, flux(pulse, tt), 0.0, omega_r, p).lambda;
        };
        const double fd = (lam(t + h) - lam(t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(e.lambda_dot - fd) / std::abs(fd));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("parameter validation") {
    TransmonParams p = default_q1();
    p.ej_sigma = 10.0 * p.ec;  // below the transmon regime
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = default_q1();
    p.d = 0.05;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = default_q1();
    p.ec = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
