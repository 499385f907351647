// pybind11 surface: configuration-driven experiments plus the low-level
// operator/fidelity helpers.

#include <optional>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tdswt/config.hpp"
#include "tdswt/io.hpp"
#include "tdswt/magnus.hpp"
#include "tdswt/propagator.hpp"
#include "tdswt/runner.hpp"

namespace py = pybind11;
using namespace tdswt;

namespace {

ModelVariant variant_from_string(const std::string& name) {
    if (name == "full") return ModelVariant::Full;
    if (name == "no-sdot") return ModelVariant::NoSdot;
    if (name == "constant") return ModelVariant::ConstantMean;
    throw std::invalid_argument("variant must be one of full|no-sdot|constant");
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

/// Configuration plus the derived models, the unit of work for the bindings.
class Experiment {
  public:
    explicit Experiment(const std::string& config_text) {
        cfg_ = config_text.empty() ? ExperimentConfig::defaults() : parse_config(config_text);
        cfg_.validate();
    }

    std::string config_text() const { return dump_config(cfg_); }

    py::dict trace(int n_steps) const {
        const int n = n_steps > 0 ? n_steps : cfg_.n_steps;
        const ControlTrace tr = sample(cfg_.pulse_spec(), n, cfg_.transmons(), cfg_.omega_r());
        const ReducedEntries e = extract_reduced_entries(tr);
        py::dict out;
        out["t"] = to_vector(tr.times);
        out["phi"] = to_vector(tr.phi);
        out["phi_dot"] = to_vector(tr.phi_dot);
        out["omega"] = to_vector(e.omega);
        out["g_r"] = to_vector(e.g_r);
        out["g_i"] = to_vector(e.g_i);
        return out;
    }

    py::tuple evolve_variant(const std::string& variant, int n_steps) const {
        const int n = n_steps > 0 ? n_steps : cfg_.n_steps;
        const auto params = cfg_.transmons();
        const ReducedModel model(params[0], params[1], cfg_.omega_r(), cfg_.pulse_spec(), n);
        const EvolutionResult r = evolve_reduced(model, variant_from_string(variant), n);
        return py::make_tuple(Eigen::MatrixXcd(r.u), r.defect, r.convergence);
    }

    Eigen::MatrixXcd evolve_jc(int n_steps) const {
        const int n = n_steps > 0 ? n_steps : cfg_.n_steps;
        return evolve_full_jc(cfg_.system_spec(), cfg_.transmons(), cfg_.pulse_spec(), n).u;
    }

    py::dict magnus(int n_steps) const {
        const int n = n_steps > 0 ? n_steps : cfg_.n_steps;
        const ControlTrace tr = sample(cfg_.pulse_spec(), n, cfg_.transmons(), cfg_.omega_r());
        const MagnusSummary s = magnus_summary(extract_reduced_entries(tr));
        py::dict out;
        out["omega_bar"] = s.omega_bar;
        out["gr_bar"] = s.gr_bar;
        out["gi_bar"] = s.gi_bar;
        out["d_wgr"] = s.d_wgr;
        out["d_wgi"] = s.d_wgi;
        out["d_gigr"] = s.d_gigr;
        out["k1"] = s.k1;
        out["k2"] = s.k2;
        out["mean_dF"] = mean_delta_f(s, cfg_.angle_grid);
        return out;
    }

    double analytic_df(double phi1, double phi2, double theta) const {
        const ControlTrace tr =
            sample(cfg_.pulse_spec(), cfg_.n_steps, cfg_.transmons(), cfg_.omega_r());
        const MagnusSummary s = magnus_summary(extract_reduced_entries(tr));
        return analytic_delta_f(s, {phi1, phi2, theta});
    }

    py::dict run_stats(int n_targets, std::optional<std::uint64_t> seed) const {
        ExperimentConfig cfg = cfg_;
        if (n_targets > 0) cfg.n_targets = n_targets;
        if (seed) cfg.seed = *seed;
        const auto params = cfg.transmons();
        const ReducedModel model(params[0], params[1], cfg.omega_r(), cfg.pulse_spec(), cfg.n_steps);
        const Matrix u1 = evolve_reduced(model, ModelVariant::Full, cfg.n_steps).u;
        const Matrix u2 = evolve_reduced(model, ModelVariant::NoSdot, cfg.n_steps).u;
        const Matrix u3 = evolve_reduced(model, ModelVariant::ConstantMean, cfg.n_steps).u;
        const auto records =
            run_statistics(u1, u2, u3, sample_angles(cfg.seed, cfg.n_targets), cfg.threads);
        std::vector<double> f1, f2, f3, df12, df13;
        for (const auto& r : records) {
            f1.push_back(r.f1);
            f2.push_back(r.f2);
            f3.push_back(r.f3);
            df12.push_back(r.df12);
            df13.push_back(r.df13);
        }
        py::dict out;
        out["F1"] = to_vector(f1);
        out["F2"] = to_vector(f2);
        out["F3"] = to_vector(f3);
        out["dF12"] = to_vector(df12);
        out["dF13"] = to_vector(df13);
        return out;
    }

    py::dict adiabaticity(int n_steps) const {
        const int n = n_steps > 0 ? n_steps : cfg_.n_steps;
        const AdiabaticityReport r = adiabaticity_report(
            sample(cfg_.pulse_spec(), n, cfg_.transmons(), cfg_.omega_r()));
        py::dict out;
        out["max_lambda"] = r.max_lambda;
        out["max_lambda_dot_over_delta"] = r.max_lambda_dot_over_delta;
        out["ok"] = r.ok;
        return out;
    }

  private:
    ExperimentConfig cfg_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Flux-controlled two-transmon gates in the time-dependent dispersive frame";

    py::class_<Experiment>(m, "Experiment")
        .def(py::init<const std::string&>(), py::arg("config_text") = std::string())
        .def("config_text", &Experiment::config_text)
        .def("trace", &Experiment::trace, py::arg("n_steps") = -1,
             "time grid with flux and the reduced-model entries")
        .def("evolve", &Experiment::evolve_variant, py::arg("variant"), py::arg("n_steps") = -1,
             "gate unitary for a model variant: (U, unitarity_defect, convergence)")
        .def("evolve_full_jc", &Experiment::evolve_jc, py::arg("n_steps") = -1)
        .def("magnus", &Experiment::magnus, py::arg("n_steps") = -1)
        .def("analytic_delta_f", &Experiment::analytic_df, py::arg("phi1"), py::arg("phi2"),
             py::arg("theta"))
        .def("run_stats", &Experiment::run_stats, py::arg("n_targets") = -1,
             py::arg("seed") = py::none())
        .def("adiabaticity", &Experiment::adiabaticity, py::arg("n_steps") = -1);

    m.def("default_config", [] { return dump_config(ExperimentConfig::defaults()); });
    m.def("annihilation", &annihilation, py::arg("cutoff"));
    m.def(
        "target_unitary",
        [](double phi1, double phi2, double theta) {
            return Eigen::MatrixXcd(target_unitary({phi1, phi2, theta}));
        },
        py::arg("phi1"), py::arg("phi2"), py::arg("theta"));
    m.def(
        "sample_angles",
        [](std::uint64_t seed, int count) {
            const auto angles = sample_angles(seed, count);
            Eigen::MatrixXd out(count, 3);
            for (int i = 0; i < count; ++i) {
                out(i, 0) = angles[static_cast<std::size_t>(i)].phi1;
                out(i, 1) = angles[static_cast<std::size_t>(i)].phi2;
                out(i, 2) = angles[static_cast<std::size_t>(i)].theta;
            }
            return out;
        },
        py::arg("seed"), py::arg("count"));
    m.def("gate_fidelity", &gate_fidelity, py::arg("u"), py::arg("u_ideal"));
    m.def("unitarity_defect", &unitarity_defect, py::arg("u"));

    m.attr("__version__") = "0.1.0";
}
