#include "tdswt/dispersive.hpp"

#include <cmath>

#include "tdswt/magnus.hpp"

namespace tdswt {

const char* variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::Full: return "full";
        case ModelVariant::NoSdot: return "no-sdot";
        case ModelVariant::ConstantMean: return "constant";
        case ModelVariant::FullJc: return "full-jc";
    }
    return "?";
}

JcParts jc_hamiltonian(const SystemSpec& spec, const std::vector<TransmonParams>& params,
                       const std::vector<double>& fluxes) {
    spec.validate();
    if (params.size() != static_cast<std::size_t>(spec.systems()) || fluxes.size() != params.size())
        throw std::invalid_argument("jc_hamiltonian: system count mismatch");

    const Matrix a = annihilation(spec.cavity_cutoff);
    const Matrix num = a.adjoint() * a;

    JcParts parts;
    parts.h0 = spec.omega_r * embed(num, 0, spec);
    parts.h2 = Matrix::Zero(spec.total_dim(), spec.total_dim());
    const Matrix a_emb = embed(a, 0, spec);

    for (int m = 0; m < spec.systems(); ++m) {
        const int dim = spec.levels[static_cast<std::size_t>(m)];
        for (int j = 0; j < dim; ++j)
            parts.h0 += level_frequency(j, fluxes[static_cast<std::size_t>(m)],
                                        params[static_cast<std::size_t>(m)]) *
                        embed(level_projector(dim, j), m + 1, spec);
        for (int j = 0; j + 1 < dim; ++j) {
            const double g = coupling(j, fluxes[static_cast<std::size_t>(m)],
                                      params[static_cast<std::size_t>(m)]);
            const Matrix sp = embed(raise_op(dim, j), m + 1, spec);
            parts.h2 += g * (sp * a_emb + (sp * a_emb).adjoint());
        }
    }
    return parts;
}

Matrix full_dispersive_hamiltonian(const SystemSpec& spec, const ControlTrace& trace, int t_index) {
    spec.validate();
    if (t_index < 0 || t_index >= trace.samples())
        throw std::invalid_argument("full_dispersive_hamiltonian: sample index out of range");
    if (trace.systems() != spec.systems())
        throw std::invalid_argument("full_dispersive_hamiltonian: system count mismatch");
    if (trace.omega_r != spec.omega_r)
        throw std::invalid_argument("full_dispersive_hamiltonian: cavity frequency mismatch");

    const auto& row = trace.entries[static_cast<std::size_t>(t_index)];
    const int dim_total = spec.total_dim();
    const Matrix a = annihilation(spec.cavity_cutoff);
    const Matrix num_emb = embed(Matrix(a.adjoint() * a), 0, spec);

    // omega_j from the detunings: omega_{j+1} = omega_j + omega_r + Delta_j
    auto level_omega = [&](int m, int j) {
        double w = 0.0;
        for (int i = 0; i < j; ++i) w += spec.omega_r + row[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)].delta;
        return w;
    };

    Matrix h = Matrix::Zero(dim_total, dim_total);
    Matrix cavity_coef = spec.omega_r * Matrix::Identity(dim_total, dim_total);

    for (int m = 0; m < spec.systems(); ++m) {
        const int dim = spec.levels[static_cast<std::size_t>(m)];
        if (static_cast<int>(row[static_cast<std::size_t>(m)].size()) < dim - 1)
            throw std::invalid_argument("full_dispersive_hamiltonian: trace holds too few level pairs");
        for (int j = 0; j < dim; ++j) {
            const Matrix proj = embed(level_projector(dim, j), m + 1, spec);
            const double chi_below =
                j >= 1 ? row[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)].chi : 0.0;
            const double chi_above =
                j < dim - 1 ? row[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)].chi : 0.0;
            cavity_coef += (chi_below - chi_above) * proj;
            h += (level_omega(m, j) + chi_below) * proj;
        }
    }
    h += cavity_coef * num_emb;

    // cross couplings; the 1/2 is the hierarchy's 1/2 [H2, S1] (and [H2, S2])
    const Complex i_unit(0.0, 1.0);
    for (int m = 0; m < spec.systems(); ++m) {
        for (int n = 0; n < spec.systems(); ++n) {
            if (m == n) continue;
            const int dim_m = spec.levels[static_cast<std::size_t>(m)];
            const int dim_n = spec.levels[static_cast<std::size_t>(n)];
            for (int j = 0; j + 1 < dim_m; ++j) {
                for (int k = 0; k + 1 < dim_n; ++k) {
                    const auto& em = row[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
                    const auto& en = row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                    const Matrix op =
                        embed(lower_op(dim_m, j), m + 1, spec) * embed(raise_op(dim_n, k), n + 1, spec);
                    h += 0.5 * em.g * en.lambda * (op + op.adjoint());
                    h += 0.5 * i_unit * em.g * (en.lambda_dot / en.delta) * (op - op.adjoint());
                }
            }
        }
    }

    if (!is_hermitian(h, 1e-14) && max_abs(Matrix(h - h.adjoint())) > 1e-14 * std::max(1.0, max_abs(h)))
        throw std::runtime_error("full_dispersive_hamiltonian: construction lost Hermiticity");
    return h;
}

namespace {

struct ReducedPoint {
    double omega, g_r, g_i, diag_mean;
};

// Two-transmon reduction from the per-level entries: system 0 supplies the
// (0,1) and (1,2) pairs, system 1 the (0,1) pair.
ReducedPoint reduce_point(const DispersiveEntry& q1_01, const DispersiveEntry& q1_12,
                          const DispersiveEntry& q2_01, double omega_r) {
    ReducedPoint p;
    const double alpha1 = q1_12.delta - q1_01.delta;           // Duffing: alpha2 of Q1
    const double domega = q2_01.delta - q1_01.delta;           // omega1(2) - omega1(1)
    const double chi_comb = q1_01.chi + q2_01.chi - q1_12.chi; // projection-consistent
    p.omega = 0.5 * (chi_comb + domega - alpha1);
    p.g_r = 0.5 * (q2_01.g * q1_12.lambda + q1_12.g * q2_01.lambda);
    p.g_i = 0.5 * (q1_12.lambda_dot * q2_01.g / q1_12.delta -
                   q2_01.lambda_dot * q1_12.g / q2_01.delta);
    const double w1_1 = q1_01.delta + omega_r;
    const double w1_2 = q2_01.delta + omega_r;
    const double w2_1 = q1_12.delta + w1_1 + omega_r;
    const double e11 = w1_1 + q1_01.chi + w1_2 + q2_01.chi;
    const double e20 = w2_1 + q1_12.chi;
    p.diag_mean = 0.5 * (e11 + e20);
    return p;
}

}  // namespace

ReducedEntries extract_reduced_entries(const ControlTrace& trace) {
    if (trace.systems() != 2)
        throw std::invalid_argument("extract_reduced_entries: two-transmon traces only");
    for (int m = 0; m < 2; ++m)
        if (trace.entries[0][static_cast<std::size_t>(m)].size() < 2)
            throw std::invalid_argument("extract_reduced_entries: need level pairs up to (1,2)");

    ReducedEntries out;
    out.t_g = trace.t_g;
    const int n = trace.samples();
    out.times = trace.times;
    out.omega.resize(static_cast<std::size_t>(n));
    out.g_r.resize(static_cast<std::size_t>(n));
    out.g_i.resize(static_cast<std::size_t>(n));
    out.diag_mean.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const auto& row = trace.entries[static_cast<std::size_t>(k)];
        const ReducedPoint p = reduce_point(row[0][0], row[0][1], row[1][0], trace.omega_r);
        out.omega[static_cast<std::size_t>(k)] = p.omega;
        out.g_r[static_cast<std::size_t>(k)] = p.g_r;
        out.g_i[static_cast<std::size_t>(k)] = p.g_i;
        out.diag_mean[static_cast<std::size_t>(k)] = p.diag_mean;
    }

    // constant-mean composition: average each primitive g and Delta over the
    // grid, then rebuild lambda = g/D, chi = g^2/D and compose
    if ((n - 1) % 2 == 0 && n >= 3) {
        auto mean_of = [&](auto&& get) {
            std::vector<double> y(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) y[static_cast<std::size_t>(k)] = get(k);
            return simpson_mean(y, trace.t_g);
        };
        const double g1_01 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][0][0].g; });
        const double g1_12 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][0][1].g; });
        const double g2_01 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][1][0].g; });
        const double d1_01 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][0][0].delta; });
        const double d1_12 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][0][1].delta; });
        const double d2_01 = mean_of([&](int k) { return trace.entries[static_cast<std::size_t>(k)][1][0].delta; });
        const double alpha1 = d1_12 - d1_01;
        const double chi_comb = g1_01 * g1_01 / d1_01 + g2_01 * g2_01 / d2_01 - g1_12 * g1_12 / d1_12;
        out.omega_const = 0.5 * (chi_comb + (d2_01 - d1_01) - alpha1);
        out.gr_const = 0.5 * (g2_01 * (g1_12 / d1_12) + g1_12 * (g2_01 / d2_01));
        out.has_const = true;
    }
    return out;
}

Eigen::Matrix2cd reduced_hamiltonian(const ReducedEntries& entries, ModelVariant variant,
                                     int t_index) {
    if (t_index < 0 || t_index >= entries.samples())
        throw std::invalid_argument("reduced_hamiltonian: sample index out of range");
    Eigen::Matrix2cd h;
    switch (variant) {
        case ModelVariant::Full:
        case ModelVariant::NoSdot: {
            const double w = entries.omega[static_cast<std::size_t>(t_index)];
            const double gr = entries.g_r[static_cast<std::size_t>(t_index)];
            const double gi = variant == ModelVariant::Full
                                  ? entries.g_i[static_cast<std::size_t>(t_index)]
                                  : 0.0;
            h << Complex(w, 0), Complex(gr, -gi), Complex(gr, gi), Complex(-w, 0);
            return h;
        }
        case ModelVariant::ConstantMean: {
            if (!entries.has_const)
                throw QuadratureError("reduced_hamiltonian: constant-mean needs an even grid");
            h << Complex(entries.omega_const, 0), Complex(entries.gr_const, 0),
                Complex(entries.gr_const, 0), Complex(-entries.omega_const, 0);
            return h;
        }
        case ModelVariant::FullJc:
            break;
    }
    throw std::invalid_argument("reduced_hamiltonian: unsupported variant");
}

AdiabaticityReport adiabaticity_report(const ControlTrace& trace) {
    AdiabaticityReport r;
    for (int k = 0; k < trace.samples(); ++k)
        for (const auto& sys : trace.entries[static_cast<std::size_t>(k)])
            for (const auto& e : sys) {
                r.max_lambda = std::max(r.max_lambda, std::abs(e.lambda));
                r.max_lambda_dot_over_delta =
                    std::max(r.max_lambda_dot_over_delta, std::abs(e.lambda_dot / e.delta));
            }
    r.ok = r.max_lambda < 0.3 && r.max_lambda_dot_over_delta < 0.3;
    return r;
}

ReducedModel::ReducedModel(TransmonParams q1, TransmonParams q2, double omega_r, PulseSpec pulse,
                           int n_mean)
    : q1_(q1), q2_(q2), omega_r_(omega_r), pulse_(pulse) {
    q1_.validate();
    q2_.validate();
    pulse_.validate();
    if (n_mean < 16 || n_mean % 2 != 0)
        throw std::invalid_argument("ReducedModel: n_mean must be even and >= 16");
    const ControlTrace trace = sample(pulse_, n_mean, {q1_, q2_}, omega_r_, 1, 2);
    const ReducedEntries entries = extract_reduced_entries(trace);
    omega_const_ = entries.omega_const;
    gr_const_ = entries.gr_const;
}

ReducedModel::Point ReducedModel::at(double t) const {
    const double phi2 = flux(pulse_, t);
    const double phid2 = flux_dot(pulse_, t);
    const DispersiveEntry q1_01 = dispersive_quantities(0, q1_.phi_bias, 0.0, omega_r_, q1_);
    const DispersiveEntry q1_12 = dispersive_quantities(1, q1_.phi_bias, 0.0, omega_r_, q1_);
    const DispersiveEntry q2_01 = dispersive_quantities(0, phi2, phid2, omega_r_, q2_);
    const ReducedPoint p = reduce_point(q1_01, q1_12, q2_01, omega_r_);
    return {p.omega, p.g_r, p.g_i, p.diag_mean};
}

Eigen::Matrix2cd ReducedModel::hamiltonian(double t, ModelVariant variant) const {
    Eigen::Matrix2cd h;
    switch (variant) {
        case ModelVariant::Full:
        case ModelVariant::NoSdot: {
            const Point p = at(t);
            const double gi = variant == ModelVariant::Full ? p.g_i : 0.0;
            h << Complex(p.omega, 0), Complex(p.g_r, -gi), Complex(p.g_r, gi), Complex(-p.omega, 0);
            return h;
        }
        case ModelVariant::ConstantMean:
            h << Complex(omega_const_, 0), Complex(gr_const_, 0), Complex(gr_const_, 0),
                Complex(-omega_const_, 0);
            return h;
        case ModelVariant::FullJc:
            break;
    }
    throw std::invalid_argument("ReducedModel: unsupported variant");
}

Eigen::Matrix2cd ReducedModel::hamiltonian_with_mean(double t, ModelVariant variant) const {
    const Point p = at(t);
    Eigen::Matrix2cd h = hamiltonian(t, variant);
    h += p.diag_mean * Eigen::Matrix2cd::Identity();
    return h;
}

}  // namespace tdswt
