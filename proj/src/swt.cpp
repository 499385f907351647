#include "tdswt/swt.hpp"

#include <cmath>

namespace tdswt {

namespace {

constexpr double kDegeneracyGap = 1e-9;   // rad/ns
constexpr double kEntryFloor = 1e-12;     // relative: treat smaller RHS entries as zero

struct EigenFrame {
    Matrix v;                    // block-respecting eigenvectors, columns
    Eigen::VectorXd e;           // eigenvalues
    std::vector<int> block;      // block label per eigenvector
};

// Diagonalize H0 block by block so the eigenbasis never mixes blocks even
// when eigenvalues coincide across blocks.
EigenFrame block_eigen(const Matrix& h0, const BlockPartition& partition) {
    const int n = static_cast<int>(h0.rows());
    int n_blocks = 0;
    for (int l : partition.labels) n_blocks = std::max(n_blocks, l + 1);

    EigenFrame frame;
    frame.v = Matrix::Zero(n, n);
    frame.e = Eigen::VectorXd::Zero(n);
    frame.block.resize(static_cast<std::size_t>(n));

    int col = 0;
    for (int b = 0; b < n_blocks; ++b) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (partition.labels[static_cast<std::size_t>(i)] == b) idx.push_back(i);
        if (idx.empty()) continue;
        const int m = static_cast<int>(idx.size());
        Matrix sub(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub(i, j) = h0(idx[i], idx[j]);
        Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
        if (es.info() != Eigen::Success) throw std::runtime_error("solve_generator: eigensolver failed");
        for (int k = 0; k < m; ++k) {
            for (int i = 0; i < m; ++i) frame.v(idx[i], col) = es.eigenvectors()(i, k);
            frame.e(col) = es.eigenvalues()(k);
            frame.block[static_cast<std::size_t>(col)] = b;
            ++col;
        }
    }
    return frame;
}

}  // namespace

Matrix BlockPartition::block_diag(const Matrix& m) const {
    Matrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(j)])
                out(i, j) = 0.0;
    return out;
}

Matrix BlockPartition::block_offdiag(const Matrix& m) const {
    Matrix out = m;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
                out(i, j) = 0.0;
    return out;
}

bool BlockPartition::is_block_diagonal(const Matrix& m, double rel_tol) const {
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs(block_offdiag(m)) <= rel_tol * scale;
}

BlockPartition BlockPartition::cavity_sectors(const SystemSpec& spec) {
    spec.validate();
    BlockPartition p;
    p.labels.resize(static_cast<std::size_t>(spec.total_dim()));
    const int per_sector = spec.total_dim() / spec.cavity_cutoff;
    for (int i = 0; i < spec.total_dim(); ++i)
        p.labels[static_cast<std::size_t>(i)] = i / per_sector;
    return p;
}

BlockPartition BlockPartition::cavity_parity(const SystemSpec& spec) {
    BlockPartition p = cavity_sectors(spec);
    for (auto& l : p.labels) l %= 2;
    return p;
}

BlockPartition BlockPartition::two_block(const std::vector<int>& first_block, int dim) {
    BlockPartition p;
    p.labels.assign(static_cast<std::size_t>(dim), 1);
    for (int i : first_block) {
        if (i < 0 || i >= dim) throw std::invalid_argument("two_block: index out of range");
        p.labels[static_cast<std::size_t>(i)] = 0;
    }
    return p;
}

Matrix solve_generator(const Matrix& h0, const Matrix& rhs, const BlockPartition& partition) {
    const int n = static_cast<int>(h0.rows());
    if (h0.cols() != n || rhs.rows() != n || rhs.cols() != n || partition.dim() != n)
        throw std::invalid_argument("solve_generator: dimension mismatch");
    if (!is_hermitian(h0)) throw std::invalid_argument("solve_generator: H0 is not Hermitian");
    if (!partition.is_block_diagonal(h0, 1e-10))
        throw std::invalid_argument("solve_generator: H0 is not block-diagonal");
    if (max_abs(partition.block_diag(rhs)) > 1e-9 * std::max(1e-300, max_abs(rhs)))
        throw std::invalid_argument("solve_generator: RHS is not block-offdiagonal");

    const EigenFrame frame = block_eigen(h0, partition);
    const Matrix rhs_eig = frame.v.adjoint() * rhs * frame.v;
    const double scale = max_abs(rhs);

    Matrix s_eig = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (frame.block[static_cast<std::size_t>(i)] == frame.block[static_cast<std::size_t>(j)])
                continue;
            const Complex r = rhs_eig(i, j);
            if (std::abs(r) <= kEntryFloor * scale) continue;
            const double gap = frame.e(i) - frame.e(j);
            if (std::abs(gap) <= kDegeneracyGap)
                throw DegeneracyError("solve_generator: degenerate levels (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ") with nonzero coupling " +
                                      std::to_string(std::abs(r)));
            s_eig(i, j) = r / gap;
        }
    }
    return frame.v * s_eig * frame.v.adjoint();
}

Matrix series_derivative(const std::vector<Matrix>& series, int k, double dt) {
    const int n = static_cast<int>(series.size());
    if (n < 3) throw std::invalid_argument("series_derivative: need at least 3 samples");
    if (k == 0) return (-3.0 * series[0] + 4.0 * series[1] - series[2]) / (2.0 * dt);
    if (k == n - 1)
        return (3.0 * series[static_cast<std::size_t>(n - 1)] -
                4.0 * series[static_cast<std::size_t>(n - 2)] +
                series[static_cast<std::size_t>(n - 3)]) /
               (2.0 * dt);
    return (series[static_cast<std::size_t>(k + 1)] - series[static_cast<std::size_t>(k - 1)]) /
           (2.0 * dt);
}

GeneratorSeries build_hierarchy(const std::vector<Matrix>& h0, const std::vector<Matrix>& h1,
                                const std::vector<Matrix>& h2, const BlockPartition& partition,
                                double dt) {
    const std::size_t n = h0.size();
    if (n < 3) throw std::invalid_argument("build_hierarchy: need at least 3 samples");
    if (h1.size() != n || h2.size() != n)
        throw std::invalid_argument("build_hierarchy: sample count mismatch");

    const Complex i_unit(0.0, 1.0);
    GeneratorSeries out;
    out.times.resize(n);
    out.s1.resize(n);
    out.s2.resize(n);
    out.s3.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.times[k] = dt * static_cast<double>(k);

    for (std::size_t k = 0; k < n; ++k) out.s1[k] = solve_generator(h0[k], Matrix(-h2[k]), partition);

    // X = ([H2,S1])_od vanishes for two-block partitions; keep it around for
    // the order-3 right-hand side.
    std::vector<Matrix> x(n);
    for (std::size_t k = 0; k < n; ++k)
        x[k] = partition.block_offdiag(commutator(h2[k], out.s1[k]));

    for (std::size_t k = 0; k < n; ++k) {
        const Matrix s1dot = series_derivative(out.s1, static_cast<int>(k), dt);
        const Matrix rhs2 = -commutator(h1[k], out.s1[k]) - 0.5 * x[k] + i_unit * s1dot;
        out.s2[k] = solve_generator(h0[k], partition.block_offdiag(rhs2), partition);
    }

    for (std::size_t k = 0; k < n; ++k) {
        const Matrix s2dot = series_derivative(out.s2, static_cast<int>(k), dt);
        const Matrix h1s1 = commutator(h1[k], out.s1[k]);
        const Matrix rhs3 = -commutator(h1[k], out.s2[k]) + i_unit * s2dot -
                            partition.block_offdiag(
                                Matrix(0.5 * commutator(h2[k], out.s2[k]) -
                                       0.5 * commutator(h1s1, out.s1[k]) -
                                       0.25 * commutator(x[k], out.s1[k]) +
                                       (1.0 / 3.0) * nested_commutator(h2[k], out.s1[k], 2)));
        out.s3[k] = solve_generator(h0[k], partition.block_offdiag(rhs3), partition);
    }
    return out;
}

std::array<Matrix, 5> effective_hamiltonian_terms(const Matrix& h0, const Matrix& h1,
                                                  const Matrix& h2, const Matrix& s1,
                                                  const Matrix& s2, const Matrix& s3) {
    return {h0, h1, 0.5 * commutator(h2, s1), 0.5 * commutator(h2, s2),
            Matrix(0.5 * commutator(h2, s3) - nested_commutator(h2, s1, 3) / 24.0)};
}

std::vector<double> offdiagonal_residual(const std::vector<Matrix>& h_full,
                                         const std::vector<Matrix>& s_total,
                                         const BlockPartition& partition, double dt) {
    const std::size_t n = h_full.size();
    if (s_total.size() != n) throw std::invalid_argument("offdiagonal_residual: size mismatch");
    const Complex i_unit(0.0, 1.0);

    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix& s = s_total[k];
        const Matrix e = expm_antihermitian(s);
        Matrix h_tilde = e.adjoint() * h_full[k] * e;

        if (n >= 3) {
            // inertial term: -i sum_j [Sdot, S]_j / (j+1)!
            Matrix sdot = series_derivative(s_total, static_cast<int>(k), dt);
            Matrix term = sdot;
            double fact = 1.0;
            for (int j = 0; j < 64; ++j) {
                fact *= static_cast<double>(j + 1);
                h_tilde -= i_unit * term / fact;
                term = commutator(term, s);
                if (max_abs(term) < 1e-14) break;
            }
        }

        const Matrix od = partition.block_offdiag(h_tilde);
        Eigen::JacobiSVD<Matrix> svd(od);
        out[k] = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    }
    return out;
}

}  // namespace tdswt
