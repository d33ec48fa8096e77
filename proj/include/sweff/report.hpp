#pragma once

#include <string>
#include <string_view>

#include "sweff/efficiency.hpp"

namespace sweff {

inline constexpr std::string_view kReportSchema = "sweff-report/1";

/// Self-contained result of `check`: the instance, the conventions used and
/// every verdict with its certificates.
struct AnalysisReport {
  PreferenceProfile profile;
  Lottery lottery;
  EfficiencyReport efficiency;
  ConsistencyMode consistency = ConsistencyMode::Weak;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  double elapsed_ms = 0.0;
};

AnalysisReport run_check(const PreferenceProfile& profile, const Lottery& lottery,
                         const AnalysisOptions& options = {});

/// Rationals are written as "p/q" strings, alternatives by name.
std::string to_json(const AnalysisReport& report);

/// Inverse of `to_json`. Throws ValidationError on schema violations.
AnalysisReport report_from_json(std::string_view text);

std::string to_text(const AnalysisReport& report);

std::string format_utilities(const UtilityProfile& u, const PreferenceProfile& profile);

}  // namespace sweff
