// io.hpp — deterministic CSV / JSON emission (RFC-4180 CSV, CRLF line ends,
// 17 significant digits)

#pragma once

#include <string>
#include <vector>

#include "tdswt/fidelity.hpp"
#include "tdswt/magnus.hpp"
#include "tdswt/pulse.hpp"

namespace tdswt {

/// Locale-independent %.17g formatting via std::to_chars.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

std::string gate_stats_csv(const std::vector<GateStatsRecord>& records);
std::string histogram_csv(const Histogram& h);
std::string trace_csv(const ControlTrace& trace);
std::string magnus_summary_json(const MagnusSummary& s, double mean_df);

}  // namespace tdswt
