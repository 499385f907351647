#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tdswt/config.hpp"
#include "tdswt/propagator.hpp"
#include "tdswt/units.hpp"

using namespace tdswt;

namespace {

Eigen::Matrix2cd pauli_rotation(double az, double ax, double tau) {
    // exp(-i (az sz + ax sx) tau), closed form
    const double k = std::sqrt(az * az + ax * ax) * tau;
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    if (k == 0.0) return u;
    const double s = std::sin(k) / (k / tau);
    u << Complex(std::cos(k), -s * az), Complex(0, -s * ax), Complex(0, -s * ax),
        Complex(std::cos(k), s * az);
    return u;
}

}  // namespace

TEST_CASE("unitarity defect") {
    CHECK(unitarity_defect(Matrix::Identity(3, 3)) == 0.0);
    CHECK(unitarity_defect(Matrix(2.0 * Matrix::Identity(2, 2))) == doctest::Approx(3.0));
}

TEST_CASE("evolve basics") {
    const Matrix zero = Matrix::Zero(2, 2);
    auto zero_h = [&](double) { return zero; };
    const EvolutionResult id = evolve(zero_h, 10.0, 64);
    CHECK(max_abs(Matrix(id.u - Matrix::Identity(2, 2))) < 1e-14);

    Matrix h(2, 2);
    h << 0.3, Complex(0.1, -0.05), Complex(0.1, 0.05), -0.2;
    auto const_h = [&](double) { return h; };
    const EvolutionResult r = evolve(const_h, 7.0, 64);
    CHECK(max_abs(Matrix(r.u - expm_skew(h, 7.0))) < 1e-12);
    CHECK(r.defect < 1e-12);
    CHECK(r.converged);

    CHECK_THROWS_AS(evolve(zero_h, 10.0, 32), std::invalid_argument);

    Matrix nh = Matrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    auto bad_h = [&](double) { return nh; };
    CHECK_THROWS_AS(evolve(bad_h, 1.0, 64), std::invalid_argument);
}

TEST_CASE("piecewise-constant oracle") {
    // H = (w/2) sz + g(t) sx with g switching at t_g/2
    const double w = 0.8, g1 = 0.12, g2 = -0.07, t_g = 12.0;
    auto h_at = [&](double t) {
        Matrix h(2, 2);
        const double g = t < t_g / 2 ? g1 : g2;
        h << w / 2, g, g, -w / 2;
        return h;
    };
    const EvolutionResult r = evolve(h_at, t_g, 1024);
    const Eigen::Matrix2cd ref =
        pauli_rotation(w / 2, g2, t_g / 2) * pauli_rotation(w / 2, g1, t_g / 2);
    CHECK(max_abs(Matrix(r.u - ref)) < 1e-10);
}

TEST_CASE("composition over half intervals") {
    const auto cfg = ExperimentConfig::defaults();
    const auto params = cfg.transmons();
    const ReducedModel model(params[0], params[1], cfg.omega_r(), cfg.pulse_spec(), 1024);
    auto h_at = [&](double t) { return Matrix(model.hamiltonian(t, ModelVariant::Full)); };
    const double t_g = model.t_g();
    const EvolutionResult whole = evolve(h_at, t_g, 1024);
    const EvolutionResult first = evolve(h_at, t_g / 2, 512);
    const EvolutionResult second = evolve(h_at, t_g / 2, 512, ModelVariant::Full, t_g / 2);
    CHECK(max_abs(Matrix(whole.u - second.u * first.u)) < 1e-10);
}

TEST_CASE("Richardson consistency: error scales as dt^2") {
    const auto cfg = ExperimentConfig::defaults();
    const auto params = cfg.transmons();
    const ReducedModel model(params[0], params[1], cfg.omega_r(), cfg.pulse_spec(), 1024);
    auto h_at = [&](double t) { return Matrix(model.hamiltonian(t, ModelVariant::Full)); };
    const Matrix ref = evolve(h_at, model.t_g(), 4096).u;
    const double e1 = max_abs(Matrix(evolve(h_at, model.t_g(), 256).u - ref));
    const double e2 = max_abs(Matrix(evolve(h_at, model.t_g(), 512).u - ref));
    const double exponent = std::log2(e1 / e2);
    CHECK(exponent > 1.8);
    CHECK(exponent < 2.2);
}

TEST_CASE("grid refinement leaves the unitary unchanged") {
    const auto cfg = ExperimentConfig::defaults();
    const auto params = cfg.transmons();
    const ReducedModel model(params[0], params[1], cfg.omega_r(), cfg.pulse_spec(), cfg.n_steps);
    const EvolutionResult r = evolve_reduced(model, ModelVariant::Full, 4096);
    CHECK(r.convergence < 1e-6);
    CHECK(r.converged);
    CHECK(r.defect < 1e-9);
    // the metric shrinks as dt^2; denser grids pass 1e-8 and then 1e-9
    const EvolutionResult fine = evolve_reduced(model, ModelVariant::Full, 16384);
    CHECK(fine.convergence < 1e-8);
    CHECK(fine.convergence < 0.3 * r.convergence);
    const EvolutionResult finest = evolve_reduced(model, ModelVariant::Full, 32768);
    CHECK(finest.convergence < 1e-9);
}

TEST_CASE("full Jaynes-Cummings evolution") {
    SystemSpec spec;
    spec.cavity_cutoff = 4;
    spec.levels = {3, 3};
    spec.omega_r = units::ghz(6.0);
    const std::vector<TransmonParams> params = {
        TransmonParams::from_frequency(7.0, 0.3, -0.3, 0.025, 0.0),
        TransmonParams::from_frequency(6.9, 0.3, -0.3, 0.025, 0.0)};
    const PulseSpec pulse = PulseSpec::tangential_default(0.0);

    SUBCASE("decoupled systems accumulate bare phases") {
        std::vector<TransmonParams> uncoupled = params;
        uncoupled[0].g0 = 0.0;
        uncoupled[1].g0 = 0.0;
        const EvolutionResult r = evolve_full_jc(spec, uncoupled, pulse, 512);
        // diagonal with phases -int omega dt; check the driven transmon's level 1
        const int i01 = 0 * 9 + 0 * 3 + 1;  // |0 ph, q1=0, q2=1>
        // Simpson quadrature of omega_1(Phi(t)) as an independent oracle
        const int nq = 2048;
        double sum = 0.0;
        for (int k = 0; k <= nq; ++k) {
            const double t = pulse.t_g * k / nq;
            const double w = level_frequency(1, flux(pulse, t), uncoupled[1]);
            sum += (k == 0 || k == nq) ? w : (k % 2 == 1 ? 4.0 * w : 2.0 * w);
        }
        const double integral = sum * (pulse.t_g / nq) / 3.0;
        CHECK(std::abs(r.u(i01, i01)) == doctest::Approx(1.0).epsilon(1e-10));
        const double phase = std::arg(r.u(i01, i01));
        const double expected = std::remainder(-integral, 2 * std::numbers::pi);
        CHECK(std::abs(std::remainder(phase - expected, 2 * std::numbers::pi)) < 1e-8);
    }

    SUBCASE("total excitation number is conserved") {
        const EvolutionResult r = evolve_full_jc(spec, params, pulse, 1024);
        const Matrix a = annihilation(spec.cavity_cutoff);
        Matrix n_tot = embed(Matrix(a.adjoint() * a), 0, spec);
        for (int m = 0; m < 2; ++m)
            for (int j = 1; j < 3; ++j)
                n_tot += double(j) * embed(level_projector(3, j), m + 1, spec);
        CHECK(max_abs(commutator(r.u, n_tot)) < 1e-9);
        CHECK(r.defect < 1e-9);
    }

    SUBCASE("cutoff floor") {
        SystemSpec tiny = spec;
        tiny.cavity_cutoff = 2;
        CHECK_THROWS_AS(evolve_full_jc(tiny, params, pulse, 512), std::invalid_argument);
    }
}
