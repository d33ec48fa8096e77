#include <doctest.h>

#include "fixtures.hpp"
#include "sweff/assignment.hpp"
#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/sw.hpp"

using namespace sweff;
using namespace sweff::testing;

namespace {

AssignmentInstance instance(const char* text) { return parse_assignment_instance(text); }

}  // namespace

TEST_CASE("enumerate_assignments counts and order") {
  CHECK(enumerate_assignments(instance("1: o1\n")).size() == 1);
  CHECK(enumerate_assignments(instance("1: o1 > o2\n2: o1 > o2\n")).size() == 2);
  const auto six = enumerate_assignments(instance("1: x > y > z\n2: x > y > z\n3: x > y > z\n"));
  REQUIRE(six.size() == 6);
  CHECK(six.front().object_of == std::vector<std::size_t>{0, 1, 2});
  CHECK(six[1].object_of == std::vector<std::size_t>{0, 2, 1});
  CHECK(six.back().object_of == std::vector<std::size_t>{2, 1, 0});
  CHECK_THROWS(enumerate_assignments(instance("1: x > y > z\n2: x > y > z\n3: x > y > z\n"), 2));
}

TEST_CASE("instances must be square") {
  CHECK_THROWS_AS(parse_assignment_instance("1: o1 > o2\n"), ValidationError);
}

TEST_CASE("lift_profile examples") {
  const auto same = instance("1: o1 > o2\n2: o1 > o2\n");
  const auto lifted = lift_profile(same);
  CHECK(lifted.names() == std::vector<std::string>{"M1", "M2"});
  CHECK(describe(enumerate_assignments(same)[0], same) == "1->o1 2->o2");
  CHECK(lifted.orders() == p1().orders());

  const auto opposed = lift_profile(instance("1: o1 > o2\n2: o2 > o1\n"));
  CHECK(pareto_compare(0, 1, opposed) == ParetoRelation::FirstDominates);

  const auto single = lift_profile(instance("1: o1\n"));
  CHECK(single.alternatives() == 1);
}

TEST_CASE("strict lifts have n tiers of size (n-1)!") {
  for (const auto& inst : all_strict_instances(3)) {
    const auto lifted = lift_profile(inst);
    for (const auto& order : lifted.orders()) {
      REQUIRE(order.tier_count() == 3);
      for (const auto& tier : order.tiers()) CHECK(tier.size() == 2);
    }
  }
}

TEST_CASE("verify_no_pareto_indifference over every strict instance") {
  CHECK(all_strict_instances(1).size() == 1);
  const auto two = all_strict_instances(2);
  CHECK(two.size() == 4);
  for (const auto& inst : two) CHECK(verify_no_pareto_indifference(inst));
  const auto three = all_strict_instances(3);
  CHECK(three.size() == 216);
  for (const auto& inst : three) CHECK(verify_no_pareto_indifference(inst));
  CHECK_THROWS_AS(verify_no_pareto_indifference(instance("1: o1 ~ o2\n2: o1 > o2\n")),
                  PreconditionError);
}

TEST_CASE("lift accepts weak preferences and keeps indifferent assignments") {
  const auto inst = instance("1: o1 ~ o2\n2: o1 ~ o2\n");
  CHECK_FALSE(inst.has_strict_preferences());
  const auto lifted = lift_profile(inst);
  CHECK(has_pareto_indifferent_pair(lifted));
  CHECK(sw_efficient(Lottery::uniform(2, {0, 1}), lifted));
}

TEST_CASE("corollary_check examples") {
  const auto opposed_lift = instance("1: o1 > o2\n2: o1 > o2\n");
  CHECK_FALSE(corollary_check(opposed_lift, Lottery::uniform(2, {0, 1})));
  CHECK(corollary_check(opposed_lift, Lottery::degenerate(2, 0)));

  // Identical preferences: every assignment is Pareto optimal.
  const auto inst = instance("1: x > y > z\n2: x > y > z\n3: x > y > z\n");
  const auto lifted = lift_profile(inst);
  const auto optimal = pareto_optimal_set(lifted);
  REQUIRE(optimal.size() >= 2);
  CHECK_FALSE(corollary_check(inst, Lottery::uniform(6, {optimal[0], optimal[1]})));
  for (AlternativeId a : optimal) CHECK(corollary_check(inst, Lottery::degenerate(6, a)));

  CHECK_THROWS_AS(corollary_check(instance("1: o1 ~ o2\n2: o1 > o2\n"), Lottery::degenerate(2, 0)),
                  PreconditionError);
}
