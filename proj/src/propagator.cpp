#include "tdswt/propagator.hpp"

namespace tdswt {

double unitarity_defect(const Matrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("unitarity_defect: matrix must be square");
    const Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return max_abs(d);
}

namespace {

Matrix product_of_steps(const std::function<Matrix(double)>& h_at, double t_g, int n_steps,
                        double t0) {
    const double dt = t_g / n_steps;
    Matrix u;
    for (int k = 0; k < n_steps; ++k) {
        const double t = t0 + (k + 0.5) * dt;
        const Matrix h = h_at(t);
        if (!is_hermitian(h))
            throw std::invalid_argument("evolve: Hamiltonian sample is not Hermitian");
        const Matrix step = expm_skew(h, dt);
        u = k == 0 ? step : Matrix(step * u);
    }
    return u;
}

}  // namespace

EvolutionResult evolve(const std::function<Matrix(double)>& h_at, double t_g, int n_steps,
                       ModelVariant variant, double t0) {
    if (n_steps < 64) throw std::invalid_argument("evolve: n_steps must be >= 64");
    if (t_g <= 0.0) throw std::invalid_argument("evolve: t_g must be positive");

    EvolutionResult result;
    result.n_steps = n_steps;
    result.variant = variant;
    result.u = product_of_steps(h_at, t_g, n_steps, t0);
    const Matrix coarse = product_of_steps(h_at, t_g, std::max(n_steps / 2, 1), t0);
    result.convergence = max_abs(Matrix(result.u - coarse));
    result.converged = result.convergence <= 1e-6;
    result.defect = unitarity_defect(result.u);
    return result;
}

EvolutionResult evolve_reduced(const ReducedModel& model, ModelVariant variant, int n_steps) {
    return evolve([&](double t) { return Matrix(model.hamiltonian(t, variant)); }, model.t_g(),
                  n_steps, variant);
}

EvolutionResult evolve_full_jc(const SystemSpec& spec, const std::vector<TransmonParams>& params,
                               const PulseSpec& pulse, int n_steps, int driven) {
    spec.validate();
    if (spec.cavity_cutoff < 3)
        throw std::invalid_argument("evolve_full_jc: cavity_cutoff must be >= 3");
    if (driven < 0 || driven >= spec.systems())
        throw std::invalid_argument("evolve_full_jc: driven index out of range");

    auto h_at = [&](double t) {
        std::vector<double> fluxes(params.size());
        for (std::size_t m = 0; m < params.size(); ++m)
            fluxes[m] = static_cast<int>(m) == driven ? flux(pulse, t) : params[m].phi_bias;
        const JcParts parts = jc_hamiltonian(spec, params, fluxes);
        return Matrix(parts.h0 + parts.h2);
    };
    return evolve(h_at, pulse.t_g, n_steps, ModelVariant::FullJc);
}

}  // namespace tdswt
