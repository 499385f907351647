// propagator.hpp — time-ordered unitary evolution by midpoint exponentials

#pragma once

#include <functional>

#include "tdswt/dispersive.hpp"
#include "tdswt/operators.hpp"

namespace tdswt {

/// max-norm of U^dag U - I
double unitarity_defect(const Matrix& u);

struct EvolutionResult {
    Matrix u;
    double defect = 0.0;        // unitarity defect of u
    double convergence = 0.0;   // max|U(n) - U(n/2)|
    bool converged = false;     // convergence <= 1e-6
    int n_steps = 0;
    ModelVariant variant = ModelVariant::Full;
};

/// U = prod_k exp(-i H(t0 + (k+1/2) dt) dt), latest factor leftmost.
/// The convergence metric re-runs at n_steps/2.  Requires n_steps >= 64.
EvolutionResult evolve(const std::function<Matrix(double)>& h_at, double t_g,
                       int n_steps, ModelVariant variant = ModelVariant::Full,
                       double t0 = 0.0);

EvolutionResult evolve_reduced(const ReducedModel& model, ModelVariant variant, int n_steps);

/// Full Jaynes-Cummings evolution with flux-dependent level frequencies and
/// couplings; the `driven` system follows the pulse, the rest sit at bias.
EvolutionResult evolve_full_jc(const SystemSpec& spec,
                               const std::vector<TransmonParams>& params,
                               const PulseSpec& pulse, int n_steps, int driven = 1);

}  // namespace tdswt
