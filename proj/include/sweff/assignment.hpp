#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sweff/profile.hpp"

namespace sweff {

/// n agents with preferences over n objects.
class AssignmentInstance {
 public:
  /// Agents are the profile's agents, objects its alternatives. Throws
  /// ValidationError unless the instance is square.
  explicit AssignmentInstance(PreferenceProfile object_preferences);

  std::size_t size() const noexcept { return preferences_.agents(); }
  const PreferenceProfile& object_preferences() const noexcept { return preferences_; }
  bool has_strict_preferences() const;

 private:
  PreferenceProfile preferences_;
};

/// Same grammar as profiles, with objects in place of alternatives.
AssignmentInstance parse_assignment_instance(std::string_view text);

/// object_of[agent]; a permutation of 0..n-1.
struct DiscreteAssignment {
  std::vector<std::size_t> object_of;

  friend bool operator==(const DiscreteAssignment&, const DiscreteAssignment&) = default;
};

inline constexpr std::size_t kDefaultAssignmentCap = 6;

/// All n! assignments in lexicographic order of `object_of`.
std::vector<DiscreteAssignment> enumerate_assignments(const AssignmentInstance& instance,
                                                      std::size_t cap = kDefaultAssignmentCap);

/// Voting profile over the enumerated assignments (named M1, M2, ...): each
/// agent compares assignments by the object it receives.
PreferenceProfile lift_profile(const AssignmentInstance& instance,
                               std::size_t cap = kDefaultAssignmentCap);

/// "1->x 2->y ..." using agent labels and object names.
std::string describe(const DiscreteAssignment& assignment, const AssignmentInstance& instance);

/// No two distinct assignments are Pareto indifferent in the lifted profile.
/// Throws PreconditionError on weak object preferences.
bool verify_no_pareto_indifference(const AssignmentInstance& instance);

/// SW-efficiency of a lottery over assignments (indexed as in
/// `enumerate_assignments`). Throws PreconditionError on weak object
/// preferences and InternalDisagreement if the verdict differs from
/// "degenerate on a Pareto optimal assignment".
bool corollary_check(const AssignmentInstance& instance, const Lottery& p);

/// Every instance of size n whose agents hold strict object preferences:
/// (n!)^n of them, objects named o1..on.
std::vector<AssignmentInstance> all_strict_instances(std::size_t n);

}  // namespace sweff
