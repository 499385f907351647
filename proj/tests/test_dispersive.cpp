#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tdswt/config.hpp"
#include "tdswt/dispersive.hpp"
#include "tdswt/units.hpp"

using namespace tdswt;

namespace {

// basis index for |n photons, j1, j2> with levels L per transmon
int idx(const SystemSpec& spec, int n, int j1, int j2) {
    const int l1 = spec.levels[0], l2 = spec.levels[1];
    return (n * l1 + j1) * l2 + j2;
}

struct TestSystem {
    SystemSpec spec;
    std::vector<TransmonParams> params;
    PulseSpec pulse;
};

TestSystem lambda05_system() {
    TestSystem s;
    s.spec.cavity_cutoff = 5;
    s.spec.levels = {3, 3};
    s.spec.omega_r = units::ghz(6.0);
    s.params = {TransmonParams::from_frequency(7.0, 0.3, -0.3, 0.025, 0.0),
                TransmonParams::from_frequency(6.9, 0.3, -0.3, 0.025, 0.0)};
    s.pulse = PulseSpec::tangential_default(0.0);
    return s;
}

}  // namespace

TEST_CASE("full dispersive Hamiltonian structure") {
    const TestSystem sys = lambda05_system();

    SUBCASE("static trace gives purely real entries") {
        PulseSpec constant = sys.pulse;
        constant.amplitude = 0.0;
        const ControlTrace trace = sample(constant, 16, sys.params, sys.spec.omega_r);
        const Matrix h = full_dispersive_hamiltonian(sys.spec, trace, 0);
        CHECK(max_abs(Matrix(h.imag().cast<Complex>())) < 1e-14 * max_abs(h));
        CHECK(is_hermitian(h, 1e-14));
    }

    SUBCASE("single system has no cross couplings") {
        SystemSpec one;
        one.cavity_cutoff = 4;
        one.levels = {3};
        one.omega_r = sys.spec.omega_r;
        PulseSpec constant = sys.pulse;
        const ControlTrace trace = sample(constant, 16, {sys.params[0]}, one.omega_r, 0);
        const Matrix h = full_dispersive_hamiltonian(one, trace, 5);
        // with the cross sums empty the whole matrix is diagonal
        CHECK(max_abs(Matrix(h - h.diagonal().asDiagonal().toDenseMatrix())) < 1e-14 * max_abs(h));
    }

    SUBCASE("static eigenvalues track the exact Jaynes-Cummings spectrum") {
        PulseSpec constant = sys.pulse;
        constant.amplitude = 0.0;
        const ControlTrace trace = sample(constant, 16, sys.params, sys.spec.omega_r);
        const Matrix h_disp = full_dispersive_hamiltonian(sys.spec, trace, 0);
        const JcParts jc = jc_hamiltonian(sys.spec, sys.params, {0.0, 0.0});
        const Matrix h_exact = jc.h0 + jc.h2;

        Eigen::SelfAdjointEigenSolver<Matrix> ed(h_disp), ee(h_exact);
        // compare the lowest 10 states (0-2 excitation ladder)
        const double budget = 5e-4 * units::ghz(0.7);
        for (int i = 0; i < 10; ++i)
            CHECK(std::abs(ed.eigenvalues()(i) - ee.eigenvalues()(i)) < budget);
    }
}

TEST_CASE("reduced entries and projection consistency") {
    const TestSystem sys = lambda05_system();
    const ControlTrace trace = sample(sys.pulse, 64, sys.params, sys.spec.omega_r);
    const ReducedEntries entries = extract_reduced_entries(trace);

    SUBCASE("projection onto {|11>,|20>} reproduces the reduced entries") {
        for (int k : {0, 16, 32, 48, 64}) {
            const Matrix h = full_dispersive_hamiltonian(sys.spec, trace, k);
            const int i11 = idx(sys.spec, 0, 1, 1);
            const int i20 = idx(sys.spec, 0, 2, 0);
            const Complex offdiag = h(i11, i20);
            const double w = 0.5 * (h(i11, i11).real() - h(i20, i20).real());
            const double mean = 0.5 * (h(i11, i11).real() + h(i20, i20).real());
            const std::size_t kk = static_cast<std::size_t>(k);
            CHECK(std::abs(offdiag - Complex(entries.g_r[kk], -entries.g_i[kk])) < 1e-10);
            CHECK(std::abs(w - entries.omega[kk]) < 1e-10);
            CHECK(std::abs(mean - entries.diag_mean[kk]) < 1e-10);
        }
    }

    SUBCASE("static pulse gives g_i = 0 and coinciding variants") {
        PulseSpec constant = sys.pulse;
        constant.amplitude = 0.0;
        const ControlTrace st = sample(constant, 64, sys.params, sys.spec.omega_r);
        const ReducedEntries se = extract_reduced_entries(st);
        for (double gi : se.g_i) CHECK(std::abs(gi) < 1e-15);
        const Eigen::Matrix2cd h1 = reduced_hamiltonian(se, ModelVariant::Full, 10);
        const Eigen::Matrix2cd h2 = reduced_hamiltonian(se, ModelVariant::NoSdot, 10);
        const Eigen::Matrix2cd h3 = reduced_hamiltonian(se, ModelVariant::ConstantMean, 10);
        CHECK(max_abs(Matrix(h1 - h2)) == 0.0);
        CHECK(max_abs(Matrix(h1 - h3)) < 1e-12 * max_abs(Matrix(h1)));
    }

    SUBCASE("reduced Hamiltonian is traceless and Hermitian") {
        for (ModelVariant v : {ModelVariant::Full, ModelVariant::NoSdot, ModelVariant::ConstantMean}) {
            const Eigen::Matrix2cd h = reduced_hamiltonian(entries, v, 32);
            CHECK(std::abs(h.trace()) < 1e-14);
            CHECK(max_abs(Matrix(h - h.adjoint())) < 1e-14);
        }
    }

    SUBCASE("g_r is positive when couplings and detunings are positive") {
        // resonator below both qubits: all Deltas positive
        TestSystem below = lambda05_system();
        const ControlTrace tr = sample(below.pulse, 32, below.params, below.spec.omega_r);
        const ReducedEntries re = extract_reduced_entries(tr);
        for (double gr : re.g_r) CHECK(gr > 0.0);
    }
}

TEST_CASE("full variant equals no-sdot when g_i vanishes") {
    const TestSystem sys = lambda05_system();
    const ControlTrace trace = sample(sys.pulse, 64, sys.params, sys.spec.omega_r);
    ReducedEntries entries = extract_reduced_entries(trace);
    std::fill(entries.g_i.begin(), entries.g_i.end(), 0.0);
    for (int k : {0, 20, 40, 64})
        CHECK(max_abs(Matrix(reduced_hamiltonian(entries, ModelVariant::Full, k) -
                             reduced_hamiltonian(entries, ModelVariant::NoSdot, k))) == 0.0);
}

TEST_CASE("static dispersive formula agreement") {
    // independent static construction: standard dispersive Hamiltonian with
    // lambda_dot = 0, coded directly from chi and lambda
    const TestSystem sys = lambda05_system();
    PulseSpec constant = sys.pulse;
    constant.amplitude = 0.0;
    const ControlTrace trace = sample(constant, 16, sys.params, sys.spec.omega_r);
    const Matrix h = full_dispersive_hamiltonian(sys.spec, trace, 3);

    const Matrix a = annihilation(sys.spec.cavity_cutoff);
    Matrix ref = sys.spec.omega_r * embed(Matrix(a.adjoint() * a), 0, sys.spec);
    for (int m = 0; m < 2; ++m) {
        const int dim = 3;
        for (int j = 0; j < dim; ++j) {
            const double w = level_frequency(j, 0.0, sys.params[static_cast<std::size_t>(m)]);
            const double chi_b =
                j >= 1 ? dispersive_quantities(j - 1, 0.0, 0.0, sys.spec.omega_r,
                                               sys.params[static_cast<std::size_t>(m)]).chi
                       : 0.0;
            const double chi_a =
                j < dim - 1 ? dispersive_quantities(j, 0.0, 0.0, sys.spec.omega_r,
                                                    sys.params[static_cast<std::size_t>(m)]).chi
                            : 0.0;
            const Matrix proj = embed(level_projector(dim, j), m + 1, sys.spec);
            ref += (w + chi_b) * proj +
                   (chi_b - chi_a) * proj * embed(Matrix(a.adjoint() * a), 0, sys.spec);
        }
    }
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
            if (m == n) continue;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const auto em = dispersive_quantities(j, 0.0, 0.0, sys.spec.omega_r,
                                                          sys.params[static_cast<std::size_t>(m)]);
                    const auto en = dispersive_quantities(k, 0.0, 0.0, sys.spec.omega_r,
                                                          sys.params[static_cast<std::size_t>(n)]);
                    const Matrix op = embed(lower_op(3, j), m + 1, sys.spec) *
                                      embed(raise_op(3, k), n + 1, sys.spec);
                    ref += 0.5 * em.g * en.lambda * (op + op.adjoint());
                }
        }
    CHECK(max_abs(Matrix(h - ref)) < 1e-12 * max_abs(h));
}

TEST_CASE("adiabaticity report") {
    SUBCASE("harmonic ladder: max lambda is the level-1 coupling") {
        // alpha2 = 0 makes Delta_1 = Delta_0, so lambda_1 = sqrt(2) lambda_0
        TransmonParams p = TransmonParams::from_frequency(7.0, 0.3, 0.0, 0.025, 0.0);
        const double omega_r = level_frequency(1, 0.0, p) - units::ghz(0.5);
        PulseSpec constant = PulseSpec::tangential_default(0.0);
        constant.amplitude = 0.0;
        const ControlTrace trace = sample(constant, 16, {p}, omega_r, 0, 2);
        const AdiabaticityReport rep = adiabaticity_report(trace);
        CHECK(rep.max_lambda == doctest::Approx(0.05 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(rep.max_lambda_dot_over_delta == 0.0);
        CHECK(rep.ok);
    }

    SUBCASE("doubling the drive frequency doubles the adiabaticity parameter") {
        const auto cfg = ExperimentConfig::defaults();
        PulseSpec slow = PulseSpec::sinusoidal_default(0.0);
        slow.amplitude = 1e-3;
        PulseSpec fast = slow;
        fast.nu *= 2.0;
        const auto params = cfg.transmons();
        const auto rep_slow = adiabaticity_report(sample(slow, 512, params, cfg.omega_r()));
        const auto rep_fast = adiabaticity_report(sample(fast, 512, params, cfg.omega_r()));
        CHECK(rep_fast.max_lambda_dot_over_delta / rep_slow.max_lambda_dot_over_delta ==
              doctest::Approx(2.0).epsilon(1e-3));
    }
}
