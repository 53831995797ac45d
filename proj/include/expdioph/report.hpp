/**
 * @file report.hpp
 * @brief Machine-readable rendering of sweep results.
 *
 * All big integers serialize as decimal strings. Reports are
 * deterministic: the same sweep renders to identical bytes no matter
 * how many worker threads produced it. Per-entry timing is emitted
 * only on request, since it is inherently nondeterministic.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "expdioph/sweep.hpp"

namespace expdioph {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> parse_format(std::string_view name);

Json report_json(const SweepReport& report, bool with_timing);
std::string report_csv(const SweepReport& report, bool with_timing);
std::string report_text(const SweepReport& report, bool with_timing);

/// Dispatches on format; JSON is dumped with 2-space indentation.
std::string render_report(const SweepReport& report, ReportFormat format, bool with_timing);

}  // namespace expdioph
