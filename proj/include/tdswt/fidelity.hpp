// fidelity.hpp — random target unitaries, gate overlap fidelity, DF statistics

#pragma once

#include <cstdint>
#include <vector>

#include "tdswt/dispersive.hpp"
#include "tdswt/operators.hpp"

namespace tdswt {

struct TargetAngles {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double theta = 0.0;
};

/// [[e^{i phi1} cos th, e^{i phi2} sin th], [-e^{-i phi2} sin th, e^{-i phi1} cos th]]
Eigen::Matrix2cd target_unitary(const TargetAngles& a);

/// i.i.d. uniform angles on [0, 2pi).  Deterministic: std::mt19937_64 with
/// the 53-bit mapping u = (x >> 11) * 2^-53, drawn in order phi1, phi2, theta
/// per target.
std::vector<TargetAngles> sample_angles(std::uint64_t seed, int count);

/// |Tr(U^dag U_ideal)|^2 / 4; both arguments must be 2x2.
double gate_fidelity(const Matrix& u, const Matrix& u_ideal);

struct GateStatsRecord {
    TargetAngles angles;
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;
    double df12 = 0.0, df13 = 0.0;
};

/// Per-target fidelities of the three shared unitaries.  The target loop is
/// parallelized; records are ordered by target index regardless of threads.
std::vector<GateStatsRecord> run_statistics(const Matrix& u1, const Matrix& u2,
                                            const Matrix& u3,
                                            const std::vector<TargetAngles>& targets,
                                            int threads = 1);

struct Histogram {
    std::vector<double> edges;     // n_bins + 1
    std::vector<double> density;   // normalized to unit area
};

/// Histogram over the finite entries of `values`.
Histogram histogram(const std::vector<double>& values, int n_bins);

double median(std::vector<double> values);

}  // namespace tdswt
