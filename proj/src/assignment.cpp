#include "sweff/assignment.hpp"

#include <algorithm>
#include <numeric>

#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/sw.hpp"

namespace sweff {

AssignmentInstance::AssignmentInstance(PreferenceProfile object_preferences)
    : preferences_(std::move(object_preferences)) {
  if (preferences_.agents() != preferences_.alternatives()) {
    throw ValidationError("assignment instance needs as many objects as agents (" +
                          std::to_string(preferences_.agents()) + " agents, " +
                          std::to_string(preferences_.alternatives()) + " objects)");
  }
}

bool AssignmentInstance::has_strict_preferences() const {
  return std::all_of(preferences_.orders().begin(), preferences_.orders().end(),
                     [](const WeakOrder& order) { return order.is_strict(); });
}

AssignmentInstance parse_assignment_instance(std::string_view text) {
  return AssignmentInstance(parse_profile(text));
}

std::vector<DiscreteAssignment> enumerate_assignments(const AssignmentInstance& instance,
                                                      std::size_t cap) {
  const std::size_t n = instance.size();
  if (n > cap) {
    throw CapExceededError("assignment enumeration for " + std::to_string(n) +
                           " agents exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<DiscreteAssignment> result;
  do {
    result.push_back({perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

PreferenceProfile lift_profile(const AssignmentInstance& instance, std::size_t cap) {
  const auto assignments = enumerate_assignments(instance, cap);
  const auto& objects = instance.object_preferences();
  std::vector<WeakOrder> orders;
  for (AgentId i = 0; i < instance.size(); ++i) {
    const auto& own = objects.order(i);
    // Tier t of the lifted order holds the assignments giving i an object of tier t.
    std::vector<std::vector<AlternativeId>> tiers(own.tier_count());
    for (AlternativeId k = 0; k < assignments.size(); ++k) {
      const std::size_t rank = own.rank(assignments[k].object_of[i]);
      tiers[own.tier_count() - 1 - rank].push_back(k);
    }
    orders.emplace_back(std::move(tiers), assignments.size());
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < assignments.size(); ++k) names.push_back("M" + std::to_string(k + 1));
  std::vector<std::string> labels;
  for (AgentId i = 0; i < instance.size(); ++i) labels.push_back(objects.agent_label(i));
  return PreferenceProfile(std::move(orders), std::move(names), std::move(labels));
}

std::string describe(const DiscreteAssignment& assignment, const AssignmentInstance& instance) {
  const auto& objects = instance.object_preferences();
  std::string out;
  for (AgentId i = 0; i < assignment.object_of.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += objects.agent_label(i) + "->" + objects.name(assignment.object_of[i]);
  }
  return out;
}

bool verify_no_pareto_indifference(const AssignmentInstance& instance) {
  if (!instance.has_strict_preferences()) {
    throw PreconditionError("object preferences must be strict");
  }
  return !has_pareto_indifferent_pair(lift_profile(instance));
}

bool corollary_check(const AssignmentInstance& instance, const Lottery& p) {
  if (!instance.has_strict_preferences()) {
    throw PreconditionError("object preferences must be strict");
  }
  const auto lifted = lift_profile(instance);
  require_compatible(p, lifted);
  const bool efficient = sw_efficient(p, lifted);
  if (efficient != (is_degenerate(p) && ex_post_efficient(p, lifted))) {
    throw InternalDisagreement("SW-efficient lottery over assignments is not a degenerate "
                               "lottery on a Pareto optimal assignment");
  }
  return efficient;
}

std::vector<AssignmentInstance> all_strict_instances(std::size_t n) {
  if (n == 0) throw PreconditionError("instances need at least one agent");
  std::vector<std::vector<AlternativeId>> rankings;
  std::vector<AlternativeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    rankings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("o" + std::to_string(k + 1));

  std::vector<AssignmentInstance> result;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<WeakOrder> orders;
    for (std::size_t i = 0; i < n; ++i) orders.push_back(WeakOrder::strict(rankings[pick[i]]));
    result.emplace_back(PreferenceProfile(std::move(orders), names));
    std::size_t i = 0;
    while (i < n && ++pick[i] == rankings.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return result;
}

}  // namespace sweff
