#pragma once

#include <optional>
#include <vector>

#include "sweff/profile.hpp"

namespace sweff {

/// Support of size one.
bool is_degenerate(const Lottery& p);

/// Some a, b in the support and agents i, j with a ≻_i b and b ≻_j a.
bool is_interesting(const Lottery& p, const PreferenceProfile& profile);

/// Support contains only Pareto optimal alternatives.
bool ex_post_efficient(const Lottery& p, const PreferenceProfile& profile);

/// SW-efficient iff ex post efficient and not interesting.
bool sw_efficient(const Lottery& p, const PreferenceProfile& profile);

/// For profiles without Pareto indifferent pairs: SW-efficient iff ex post
/// efficient and degenerate. Throws PreconditionError on other profiles.
bool sw_efficient_no_indifference(const Lottery& p, const PreferenceProfile& profile);

/// u[i][x] = [x ≿_i a] + rank_i(x) / (n·m).
///
/// Consistent (even strictly) with the profile, and a's social utility
/// exceeds that of every b in D(a) by at least 1/m. Both facts are re-checked
/// before returning. Requires a Pareto optimal and D(a) nonempty.
UtilityProfile separating_utilities(AlternativeId a, const PreferenceProfile& profile);

/// Expected utilitarian welfare: sum over agents and alternatives of p(a)·u[i][a].
Rational welfare(const UtilityProfile& u, const Lottery& p);

/// Alternatives with maximal social utility.
AlternativeSet welfare_argmax(const UtilityProfile& u);

/// welfare(u, p) equals the best welfare achievable by any alternative.
/// Throws PreconditionError when u is not consistent with the profile.
bool maximizes_welfare(const UtilityProfile& u, const Lottery& p,
                       const PreferenceProfile& profile,
                       ConsistencyMode mode = ConsistencyMode::Weak);

/// Enumerates every consistent utility profile with entries in {0, ..., L-1}.
/// Each agent's utilities are a nondecreasing level assignment to its tiers;
/// profiles are produced in odometer order over agents.
class UtilityGrid {
 public:
  UtilityGrid(const PreferenceProfile& profile, std::size_t levels);

  std::optional<UtilityProfile> next();

  /// Number of profiles the grid yields.
  std::size_t size() const;

 private:
  std::vector<std::vector<std::size_t>> ranks_;                 // [agent][alternative]
  std::vector<std::vector<std::vector<std::size_t>>> options_;  // [agent][option][tier]
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

std::vector<UtilityProfile> grid_utilities(const PreferenceProfile& profile, std::size_t levels);

}  // namespace sweff
