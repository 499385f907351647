// swt.hpp — time-dependent Schrieffer-Wolff machinery
//
// Solves the generator hierarchy [H0,S1] = -H2, [H0,S2] = ..., assembles the
// effective Hamiltonian terms, and evaluates the block-offdiagonal residual
// of the transformed Hamiltonian.  The hierarchy equations are implemented as
// the order-by-order elimination of the block-offdiagonal part, which for
// two-block partitions reduces to the familiar closed forms; for finer
// partitions (e.g. one block per cavity Fock level) the products of
// offdiagonal operators acquire offdiagonal parts of their own and the
// right-hand sides pick up the corresponding projected corrections.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdswt/operators.hpp"

namespace tdswt {

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Block structure: one label per basis index.
struct BlockPartition {
    std::vector<int> labels;

    int dim() const { return static_cast<int>(labels.size()); }
    Matrix block_diag(const Matrix& m) const;
    Matrix block_offdiag(const Matrix& m) const;
    bool is_block_diagonal(const Matrix& m, double rel_tol = 1e-9) const;

    /// One block per cavity Fock level.
    static BlockPartition cavity_sectors(const SystemSpec& spec);
    /// Two blocks: even / odd cavity Fock parity.
    static BlockPartition cavity_parity(const SystemSpec& spec);
    /// Two blocks from an explicit membership mask.
    static BlockPartition two_block(const std::vector<int>& first_block, int dim);
};

/// Solve [H0, S] = RHS entrywise in the H0 eigenbasis:
/// S_mn = RHS_mn / (E_m - E_n) on inter-block pairs, 0 otherwise.
/// H0 must be Hermitian and block-diagonal, RHS block-offdiagonal.
/// Throws DegeneracyError when a nonzero RHS entry connects levels closer
/// than 1e-9 rad/ns.
Matrix solve_generator(const Matrix& h0, const Matrix& rhs, const BlockPartition& partition);

struct GeneratorSeries {
    std::vector<double> times;
    std::vector<Matrix> s1, s2, s3;
    int samples() const { return static_cast<int>(times.size()); }
};

/// Generators S1..S3 on a uniform time grid.  Time derivatives are taken by
/// 2nd-order central differences (one-sided at the ends).
GeneratorSeries build_hierarchy(const std::vector<Matrix>& h0,
                                const std::vector<Matrix>& h1,
                                const std::vector<Matrix>& h2,
                                const BlockPartition& partition,
                                double dt);

/// [H0, H1, 1/2[H2,S1], 1/2[H2,S2], 1/2[H2,S3] - 1/24 [H2,S1]_3]
std::array<Matrix, 5> effective_hamiltonian_terms(const Matrix& h0,
                                                  const Matrix& h1,
                                                  const Matrix& h2,
                                                  const Matrix& s1,
                                                  const Matrix& s2,
                                                  const Matrix& s3);

/// Per-sample spectral norm of the block-offdiagonal part of
/// e^{-S} H e^{S} - i sum_j [Sdot, S]_j / (j+1)!  (series truncated when a
/// term drops below 1e-14 in max-norm).
std::vector<double> offdiagonal_residual(const std::vector<Matrix>& h_full,
                                         const std::vector<Matrix>& s_total,
                                         const BlockPartition& partition,
                                         double dt);

/// 2nd-order finite difference of a matrix series on a uniform grid.
Matrix series_derivative(const std::vector<Matrix>& series, int k, double dt);

}  // namespace tdswt
