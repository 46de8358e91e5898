#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/verifier.hpp"

namespace cubicpm {

/// One JSON object per report:
/// {lemma, instance, params, hypothesis_met, bound: {num, den, log2_num,
/// log2_den}, relation, measured, verdict, reason?, dump?}.
/// measured is an integer or a "p/q" string.
std::string report_to_json(const LemmaReport& r);
/// JSON array, pretty-printed with `indent` spaces (-1 for one line).
std::string reports_to_json(const std::vector<LemmaReport>& reports, int indent = 2);
/// Throws ParseError.
std::vector<LemmaReport> reports_from_json(std::string_view text);

/// Header plus one row per report.
std::string reports_to_csv(const std::vector<LemmaReport>& reports);
/// Per-lemma Pass/Fail/Skipped counts.
std::string summary_table(const std::vector<LemmaReport>& reports);

}  // namespace cubicpm
