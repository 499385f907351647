#include "tdswt/operators.hpp"

#include <stdexcept>
#include <string>

namespace tdswt {

int SystemSpec::slot_dim(int slot) const {
    if (slot == 0) return cavity_cutoff;
    if (slot < 1 || slot > systems()) throw std::invalid_argument("slot out of range");
    return levels[static_cast<std::size_t>(slot - 1)];
}

int SystemSpec::total_dim() const {
    int d = cavity_cutoff;
    for (int l : levels) d *= l;
    return d;
}

void SystemSpec::validate() const {
    if (cavity_cutoff < 2) throw std::invalid_argument("cavity_cutoff must be >= 2");
    if (levels.empty()) throw std::invalid_argument("at least one multilevel system required");
    for (int l : levels)
        if (l < 2) throw std::invalid_argument("each system needs >= 2 levels");
    if (total_dim() < 4) throw std::invalid_argument("total dimension must be >= 4");
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs(Matrix(m - m.adjoint())) < rel_tol * scale;
}

Matrix annihilation(int cutoff) {
    if (cutoff < 2) throw std::invalid_argument("annihilation: cutoff must be >= 2");
    Matrix a = Matrix::Zero(cutoff, cutoff);
    for (int j = 0; j + 1 < cutoff; ++j) a(j, j + 1) = std::sqrt(double(j + 1));
    return a;
}

Matrix level_projector(int dim, int j) {
    if (j < 0 || j >= dim) throw std::invalid_argument("level_projector: index out of range");
    Matrix p = Matrix::Zero(dim, dim);
    p(j, j) = 1.0;
    return p;
}

Matrix raise_op(int dim, int j) {
    if (j < 0 || j >= dim - 1) throw std::invalid_argument("raise_op: index out of range");
    Matrix s = Matrix::Zero(dim, dim);
    s(j + 1, j) = 1.0;
    return s;
}

Matrix lower_op(int dim, int j) {
    if (j < 0 || j >= dim - 1) throw std::invalid_argument("lower_op: index out of range");
    Matrix s = Matrix::Zero(dim, dim);
    s(j, j + 1) = 1.0;
    return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix embed(const Matrix& local, int slot, const SystemSpec& spec) {
    spec.validate();
    const int n_slots = spec.systems() + 1;
    if (slot < 0 || slot >= n_slots) throw std::invalid_argument("embed: slot out of range");
    if (local.rows() != local.cols() || local.rows() != spec.slot_dim(slot))
        throw std::invalid_argument("embed: operator does not match slot dimension");
    Matrix out = slot == 0 ? local : Matrix(Matrix::Identity(spec.slot_dim(0), spec.slot_dim(0)));
    for (int s = 1; s < n_slots; ++s) {
        if (s == slot)
            out = kron(out, local);
        else
            out = kron(out, Matrix::Identity(spec.slot_dim(s), spec.slot_dim(s)));
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("commutator: dimension mismatch");
    return a * b - b * a;
}

Matrix nested_commutator(const Matrix& a, const Matrix& b, int n) {
    if (n < 0) throw std::invalid_argument("nested_commutator: n must be >= 0");
    Matrix out = a;
    for (int i = 0; i < n; ++i) out = commutator(out, b);
    return out;
}

Matrix expm_skew(const Matrix& h, double tau) {
    if (h.rows() != h.cols()) throw std::invalid_argument("expm_skew: matrix must be square");
    if (!is_hermitian(h)) throw std::invalid_argument("expm_skew: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("expm_skew: eigensolver failed");
    const auto& v = es.eigenvectors();
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * tau));
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix expm_antihermitian(const Matrix& s) {
    // exp(S) = exp(-i (iS)) with iS Hermitian
    return expm_skew(Matrix(Complex(0.0, 1.0) * s), 1.0);
}

}  // namespace tdswt
