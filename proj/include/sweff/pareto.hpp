#pragma once

#include <string_view>

#include "sweff/profile.hpp"

namespace sweff {

enum class ParetoRelation {
  FirstDominates,
  SecondDominates,
  ParetoIndifferent,
  Incomparable,
};

std::string_view to_string(ParetoRelation relation);

/// Throws PreconditionError when a == b.
ParetoRelation pareto_compare(AlternativeId a, AlternativeId b, const PreferenceProfile& profile);

/// Alternatives no other alternative Pareto dominates.
AlternativeSet pareto_optimal_set(const PreferenceProfile& profile);

bool is_pareto_optimal(AlternativeId a, const PreferenceProfile& profile);

/// {b : some agent strictly prefers a to b}. This is wider than the set of
/// alternatives Pareto dominated by a.
AlternativeSet dominated_set(AlternativeId a, const PreferenceProfile& profile);

bool has_pareto_indifferent_pair(const PreferenceProfile& profile);

}  // namespace sweff
