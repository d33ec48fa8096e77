#pragma once

#include <optional>
#include <vector>

#include "sweff/lp.hpp"
#include "sweff/profile.hpp"

namespace sweff {

/// Sum of p(x) over {x : x ≿_i y}.
Rational upper_contour_prob(const Lottery& p, AgentId i, AlternativeId y,
                            const PreferenceProfile& profile);

/// p ≿_i^SD q.
bool sd_weakly_prefers(AgentId i, const Lottery& p, const Lottery& q,
                       const PreferenceProfile& profile);

struct SdComparison {
  std::vector<bool> weakly_prefers_first;
  std::vector<bool> weakly_prefers_second;
};

SdComparison sd_compare(const Lottery& first, const Lottery& second,
                        const PreferenceProfile& profile);

/// Every agent SD-weakly prefers q to p and some agent does not SD-weakly
/// prefer p to q.
bool sd_dominates(const Lottery& q, const Lottery& p, const PreferenceProfile& profile);

struct SdEfficiency {
  bool efficient = false;
  std::optional<Lottery> witness;  ///< an SD-dominating lottery when inefficient
};

/// Builds the slack-maximization program used by `sd_efficient`.
/// Variables: q(a) for a in A, then s_{i,y} at index m + i*m + y.
lp::LinearProgram sd_efficiency_program(const Lottery& p, const PreferenceProfile& profile);

/// Efficient iff the slack optimum is exactly 0. Otherwise the optimal q is
/// returned and re-checked with `sd_dominates`.
SdEfficiency sd_efficient(const Lottery& p, const PreferenceProfile& profile);

}  // namespace sweff
