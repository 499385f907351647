// operators.hpp — truncated-Hilbert-space operator algebra
//
// Dense complex matrices (Eigen::MatrixXcd) carry every operator in the
// library.  Tensor slot ordering is fixed as cavity (slot 0) followed by the
// multilevel systems in order, i.e. basis index = ((n*L1 + j1)*L2 + j2)...
// for cavity Fock index n and system levels j_m.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tdswt {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Cavity + multilevel-system Hilbert space layout.
struct SystemSpec {
    int cavity_cutoff = 0;          // Fock truncation for a, a^dag
    std::vector<int> levels;        // levels per multilevel system
    double omega_r = 0.0;           // cavity frequency, rad/ns

    int systems() const { return static_cast<int>(levels.size()); }
    int slot_dim(int slot) const;   // slot 0 = cavity, slot m = system m
    int total_dim() const;
    void validate() const;          // throws std::invalid_argument
};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol = 1e-12);

/// Bosonic annihilation operator, (a)_{j,j+1} = sqrt(j+1).
Matrix annihilation(int cutoff);

Matrix level_projector(int dim, int j);   // |j><j|
Matrix raise_op(int dim, int j);          // |j+1><j|
Matrix lower_op(int dim, int j);          // |j><j+1|

Matrix kron(const Matrix& a, const Matrix& b);

/// I x ... x local x ... x I with `local` in the given slot.
Matrix embed(const Matrix& local, int slot, const SystemSpec& spec);

Matrix commutator(const Matrix& a, const Matrix& b);

/// [A,B]_n with [A,B]_0 = A and [A,B]_n = [[A,B]_{n-1}, B].
Matrix nested_commutator(const Matrix& a, const Matrix& b, int n);

/// exp(-i H tau) for Hermitian H, via eigendecomposition.
Matrix expm_skew(const Matrix& h, double tau);

/// exp(S) for anti-Hermitian S (unitary result).
Matrix expm_antihermitian(const Matrix& s);

}  // namespace tdswt
