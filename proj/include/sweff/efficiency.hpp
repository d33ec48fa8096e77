#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sweff/cone.hpp"
#include "sweff/profile.hpp"

namespace sweff {

struct AnalysisOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  ConsistencyMode consistency = ConsistencyMode::Weak;
};

/// Every efficiency verdict for one lottery, with the certificates that back
/// the negative ones.
struct EfficiencyReport {
  bool ex_post = false;
  bool interesting = false;
  bool degenerate = false;
  bool sd_efficient = false;
  bool sw_efficient = false;
  /// Absent when m exceeds the enumeration cap.
  std::optional<bool> sw_efficient_by_enumeration;

  std::optional<Lottery> sd_witness;
  std::optional<AlternativeSet> sw_dominating_support;
  std::optional<UtilityProfile> sw_strict_witness;
  /// A support alternative beating, at `separating_utilities`, the lottery's
  /// expected welfare.
  std::optional<AlternativeId> separated_alternative;
  std::optional<UtilityProfile> separating_utilities;
};

/// Runs every decision procedure. Throws InternalDisagreement if the
/// characterization and the enumeration disagree, or if
/// sw ⇒ sd ⇒ ex post fails.
EfficiencyReport analyze_efficiency(const Lottery& p, const PreferenceProfile& profile,
                                    const AnalysisOptions& options = {});

/// Re-checks every verdict-certificate pair against the instance. Returns a
/// description of each problem found; empty means the report is sound.
std::vector<std::string> audit_report(const EfficiencyReport& report, const Lottery& p,
                                      const PreferenceProfile& profile,
                                      ConsistencyMode consistency = ConsistencyMode::Weak);

}  // namespace sweff
