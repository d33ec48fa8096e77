#include "sweff/pareto.hpp"

#include "sweff/errors.hpp"

namespace sweff {

std::string_view to_string(ParetoRelation relation) {
  switch (relation) {
    case ParetoRelation::FirstDominates: return "first-dominates";
    case ParetoRelation::SecondDominates: return "second-dominates";
    case ParetoRelation::ParetoIndifferent: return "pareto-indifferent";
    case ParetoRelation::Incomparable: return "incomparable";
  }
  return "?";
}

ParetoRelation pareto_compare(AlternativeId a, AlternativeId b, const PreferenceProfile& profile) {
  if (a == b) throw PreconditionError("pareto_compare needs two distinct alternatives");
  if (a >= profile.alternatives() || b >= profile.alternatives()) {
    throw PreconditionError("alternative index out of range");
  }
  bool some_prefers_a = false;
  bool some_prefers_b = false;
  for (const auto& order : profile.orders()) {
    some_prefers_a |= order.prefers(a, b);
    some_prefers_b |= order.prefers(b, a);
  }
  if (some_prefers_a && some_prefers_b) return ParetoRelation::Incomparable;
  if (some_prefers_a) return ParetoRelation::FirstDominates;
  if (some_prefers_b) return ParetoRelation::SecondDominates;
  return ParetoRelation::ParetoIndifferent;
}

bool is_pareto_optimal(AlternativeId a, const PreferenceProfile& profile) {
  for (AlternativeId b = 0; b < profile.alternatives(); ++b) {
    if (b != a && pareto_compare(b, a, profile) == ParetoRelation::FirstDominates) return false;
  }
  return true;
}

AlternativeSet pareto_optimal_set(const PreferenceProfile& profile) {
  AlternativeSet result;
  for (AlternativeId a = 0; a < profile.alternatives(); ++a) {
    if (is_pareto_optimal(a, profile)) result.push_back(a);
  }
  return result;
}

AlternativeSet dominated_set(AlternativeId a, const PreferenceProfile& profile) {
  if (a >= profile.alternatives()) throw PreconditionError("alternative index out of range");
  AlternativeSet result;
  for (AlternativeId b = 0; b < profile.alternatives(); ++b) {
    for (const auto& order : profile.orders()) {
      if (order.prefers(a, b)) {
        result.push_back(b);
        break;
      }
    }
  }
  return result;
}

bool has_pareto_indifferent_pair(const PreferenceProfile& profile) {
  for (AlternativeId a = 0; a < profile.alternatives(); ++a) {
    for (AlternativeId b = a + 1; b < profile.alternatives(); ++b) {
      if (pareto_compare(a, b, profile) == ParetoRelation::ParetoIndifferent) return true;
    }
  }
  return false;
}

}  // namespace sweff
