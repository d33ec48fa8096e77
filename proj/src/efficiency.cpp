#include "sweff/efficiency.hpp"

#include <algorithm>

#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"

namespace sweff {
namespace {

// A Pareto optimal support alternative that some agent strictly prefers to
// another support alternative.
std::optional<AlternativeId> separable_alternative(const Lottery& p,
                                                   const PreferenceProfile& profile) {
  for (AlternativeId a : p.support()) {
    if (!is_pareto_optimal(a, profile)) continue;
    const auto below = dominated_set(a, profile);
    for (AlternativeId b : p.support()) {
      if (std::binary_search(below.begin(), below.end(), b)) return a;
    }
  }
  return std::nullopt;
}

}  // namespace

EfficiencyReport analyze_efficiency(const Lottery& p, const PreferenceProfile& profile,
                                    const AnalysisOptions& options) {
  require_compatible(p, profile);
  EfficiencyReport report;
  report.ex_post = ex_post_efficient(p, profile);
  report.interesting = is_interesting(p, profile);
  report.degenerate = is_degenerate(p);

  auto sd = sd_efficient(p, profile);
  report.sd_efficient = sd.efficient;
  report.sd_witness = std::move(sd.witness);

  report.sw_efficient = sw_efficient(p, profile);
  if (profile.alternatives() <= options.enumeration_cap) {
    auto scan = sw_efficient_by_enumeration(p, profile, options.enumeration_cap);
    report.sw_efficient_by_enumeration = scan.efficient;
    report.sw_dominating_support = std::move(scan.dominating_support);
    report.sw_strict_witness = std::move(scan.strict_witness);
    if (scan.efficient != report.sw_efficient) {
      throw InternalDisagreement("characterization says sw_efficient=" +
                                 std::string(report.sw_efficient ? "true" : "false") +
                                 " but support enumeration disagrees for lottery '" +
                                 format_lottery(p, profile) + "' over profile\n" +
                                 profile.to_text());
    }
  }

  if (const auto a = separable_alternative(p, profile)) {
    report.separated_alternative = a;
    report.separating_utilities = separating_utilities(*a, profile);
  }

  if ((report.sw_efficient && !report.sd_efficient) || (report.sd_efficient && !report.ex_post)) {
    throw InternalDisagreement("efficiency chain sw => sd => ex post violated for lottery '" +
                               format_lottery(p, profile) + "'");
  }
  return report;
}

std::vector<std::string> audit_report(const EfficiencyReport& report, const Lottery& p,
                                      const PreferenceProfile& profile,
                                      ConsistencyMode consistency) {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  expect(report.ex_post == ex_post_efficient(p, profile), "ex_post verdict");
  expect(report.interesting == is_interesting(p, profile), "interesting verdict");
  expect(report.degenerate == is_degenerate(p), "degenerate verdict");
  expect(report.sw_efficient == sw_efficient(p, profile), "sw verdict");
  expect(!report.sw_efficient || report.sd_efficient, "sw efficient but not sd efficient");
  expect(!report.sd_efficient || report.ex_post, "sd efficient but not ex post efficient");

  if (report.sd_witness) {
    expect(!report.sd_efficient, "sd witness attached to an sd-efficient verdict");
    expect(report.sd_witness->alternatives() == p.alternatives() &&
               sd_dominates(*report.sd_witness, p, profile),
           "sd witness does not SD-dominate the lottery");
  } else {
    expect(report.sd_efficient, "sd-inefficient verdict without a witness");
  }

  if (report.sw_efficient_by_enumeration) {
    expect(*report.sw_efficient_by_enumeration == report.sw_efficient,
           "enumeration and characterization disagree");
    if (!*report.sw_efficient_by_enumeration) {
      if (!report.sw_dominating_support || !report.sw_strict_witness) {
        problems.push_back("sw-inefficient enumeration verdict without certificates");
      } else {
        const auto dominating = Lottery::uniform(p.alternatives(), *report.sw_dominating_support);
        expect(sw_dominates(dominating, p, profile), "dominating support does not SW-dominate");
        const auto& u = *report.sw_strict_witness;
        const bool shaped = u.agents() == profile.agents() &&
                            u.alternatives() == profile.alternatives();
        expect(shaped && is_consistent(u, profile) && maximizes_welfare(u, dominating, profile) &&
                   !maximizes_welfare(u, p, profile),
               "strict witness does not separate the dominating support from the lottery");
      }
    }
  }

  if (report.separating_utilities) {
    const auto& u = *report.separating_utilities;
    const bool shaped = report.separated_alternative && u.agents() == profile.agents() &&
                        u.alternatives() == profile.alternatives() &&
                        *report.separated_alternative < profile.alternatives() &&
                        p[*report.separated_alternative] > 0;
    expect(shaped && is_consistent(u, profile, consistency) &&
               u.social_utility(*report.separated_alternative) > welfare(u, p),
           "separating utilities do not favour the separated alternative over the lottery");
  }
  return problems;
}

}  // namespace sweff
