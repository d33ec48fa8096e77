#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sweff/errors.hpp"
#include "sweff/profile.hpp"

using namespace sweff;
using namespace sweff::testing;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(parse_rational("-3/9")) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("parse_profile transcribes strict and tied orders") {
  const auto P1 = p1();
  CHECK(P1.agents() == 2);
  CHECK(P1.alternatives() == 2);
  CHECK(P1.order(0).prefers(0, 1));
  CHECK(P1.order(1).prefers(1, 0));

  const auto P3 = p3();
  CHECK(P3.alternatives() == 3);
  for (AgentId i = 0; i < 2; ++i) {
    CHECK(P3.order(i).indifferent(*P3.find("a"), *P3.find("b")));
    CHECK(P3.order(i).prefers(*P3.find("b"), *P3.find("c")));
    CHECK(P3.order(i).tier_count() == 2);
  }
}

TEST_CASE("parse_profile tolerates whitespace and comments") {
  const auto p = parse_profile("# header\n\n  alice :a~b>  c  # trailing\r\nbob: c > a ~ b\n");
  CHECK(p.agents() == 2);
  CHECK(p.agent_label(0) == "alice");
  CHECK(p.order(1).prefers(2, 0));
}

TEST_CASE("parse_profile reports errors") {
  SUBCASE("missing alternative") {
    try {
      parse_profile("1: a > b\n2: a");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("agent 2 order missing alternative b") != std::string::npos);
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("unknown alternative") { CHECK_THROWS_AS(parse_profile("1: a > b\n2: a > c"), ParseError); }
  SUBCASE("duplicate") { CHECK_THROWS_AS(parse_profile("1: a > b > a"), ParseError); }
  SUBCASE("dangling separator") {
    try {
      parse_profile("1: a > b >");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 11);
    }
  }
  SUBCASE("double separator") { CHECK_THROWS_AS(parse_profile("1: a > > b"), ParseError); }
  SUBCASE("no colon") { CHECK_THROWS_AS(parse_profile("a > b"), ParseError); }
  SUBCASE("empty") { CHECK_THROWS_AS(parse_profile("# nothing\n"), ParseError); }
}

TEST_CASE("parse_lottery validates probabilities") {
  const auto P1 = p1();
  const auto half = parse_lottery("a:1/2 b:1/2", P1);
  CHECK(half[0] == Rational(1, 2));
  CHECK(half.support().size() == 2);

  const auto top = parse_lottery("a:1", P1);
  CHECK(top[1] == 0);
  CHECK(top.support() == AlternativeSet{0});

  try {
    parse_lottery("a:1/3 b:1/3", P1);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("2/3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_lottery("a:-1/2 b:3/2", P1), ValidationError);
  CHECK_THROWS_AS(parse_lottery("z:1", P1), ParseError);
  CHECK_THROWS_AS(parse_lottery("a:1/2 a:1/2", P1), ParseError);
  CHECK_THROWS_AS(parse_lottery("a=1", P1), ParseError);
}

TEST_CASE("weak consistency examples") {
  const auto P1 = p1();
  CHECK(is_consistent(UtilityProfile({{1, 0}, {0, 1}}), P1));
  CHECK_FALSE(is_consistent(UtilityProfile({{0, 1}, {0, 1}}), P1));
  CHECK(is_consistent(UtilityProfile({{1, 1, 0}, {2, 2, 2}}), p3()));
  CHECK_FALSE(is_consistent(UtilityProfile({{1, 1, 0}, {2, 2, 2}}), p3(), ConsistencyMode::Strict));
  CHECK_FALSE(is_consistent(UtilityProfile({{1, 2, 0}, {2, 2, 0}}), p3()));
  CHECK_THROWS_AS(is_consistent(UtilityProfile({{1, 0}}), P1), ValidationError);
}

TEST_CASE("constant utilities are consistent with every profile") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto profile = random_profile(1 + trial % 4, 1 + trial % 5, rng);
    UtilityProfile u(profile.agents(), profile.alternatives());
    for (AgentId i = 0; i < profile.agents(); ++i) {
      for (AlternativeId a = 0; a < profile.alternatives(); ++a) u(i, a) = Rational(trial, 3);
    }
    CHECK(is_consistent(u, profile));
  }
}

TEST_CASE("weak orders are complete and transitive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const auto order = random_weak_order(m, rng);
    for (AlternativeId x = 0; x < m; ++x) {
      for (AlternativeId y = 0; y < m; ++y) {
        CHECK((order.weakly_prefers(x, y) || order.weakly_prefers(y, x)));
        CHECK(order.prefers(x, y) == (order.weakly_prefers(x, y) && !order.weakly_prefers(y, x)));
        for (AlternativeId z = 0; z < m; ++z) {
          if (order.weakly_prefers(x, y) && order.weakly_prefers(y, z)) {
            CHECK(order.weakly_prefers(x, z));
          }
        }
      }
    }
  }
}

TEST_CASE("profile text round-trips") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto profile = random_profile(1 + trial % 4, 1 + trial % 6, rng);
    const auto again = parse_profile(profile.to_text());
    // Reparsing may renumber alternatives by first appearance; compare by name.
    REQUIRE(again.agents() == profile.agents());
    REQUIRE(again.alternatives() == profile.alternatives());
    for (AgentId i = 0; i < profile.agents(); ++i) {
      for (AlternativeId x = 0; x < profile.alternatives(); ++x) {
        for (AlternativeId y = 0; y < profile.alternatives(); ++y) {
          const auto x2 = *again.find(profile.name(x));
          const auto y2 = *again.find(profile.name(y));
          CHECK(profile.order(i).weakly_prefers(x, y) == again.order(i).weakly_prefers(x2, y2));
        }
      }
    }
    CHECK(parse_profile(again.to_text()) == again);
  }
}

TEST_CASE("lotteries reject invalid distributions") {
  CHECK_THROWS_AS(Lottery({Rational(1, 2), Rational(1, 3)}), ValidationError);
  CHECK_THROWS_AS(Lottery(std::vector<Rational>{}), ValidationError);
  CHECK(Lottery::uniform(4, {1, 3})[3] == Rational(1, 2));
  CHECK(Lottery::degenerate(3, 2).support() == AlternativeSet{2});
  CHECK(format_lottery(parse_lottery("b:2/3 a:1/3", p1()), p1()) == "a:1/3 b:2/3");
}
