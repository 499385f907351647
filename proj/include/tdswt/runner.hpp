// runner.hpp — the command pipeline shared by the CLI and the bindings

#pragma once

#include <string>

#include "tdswt/config.hpp"

namespace tdswt {

/// simulate: gate_stats.csv + normalized log10|DF| histograms.
int run_simulate(const ExperimentConfig& cfg);

/// magnus: magnus_summary.json + analytic DF histogram over the same targets.
int run_magnus(const ExperimentConfig& cfg);

/// params: control-trace CSV (or the default config text when requested).
int run_params(const ExperimentConfig& cfg);

/// verify-swt: generator/residual checks, report written and printed.
int run_verify_swt(const ExperimentConfig& cfg);

}  // namespace tdswt
