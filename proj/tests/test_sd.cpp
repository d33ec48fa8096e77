#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sweff/corpus.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"

using namespace sweff;
using namespace sweff::testing;

namespace {

Rational expected(const UtilityProfile& u, AgentId i, const Lottery& p) {
  Rational total = 0;
  for (AlternativeId a = 0; a < p.alternatives(); ++a) total += p[a] * u(i, a);
  return total;
}

}  // namespace

TEST_CASE("upper_contour_prob examples") {
  const auto P1 = p1();
  const auto half = lot(P1, "a:1/2 b:1/2");
  CHECK(upper_contour_prob(half, 0, 0, P1) == Rational(1, 2));
  CHECK(upper_contour_prob(half, 0, 1, P1) == 1);
  const auto P3 = p3();
  CHECK(upper_contour_prob(lot(P3, "a:1/2 b:1/2"), 0, 1, P3) == 1);
}

TEST_CASE("sd_weakly_prefers examples") {
  const auto P1 = p1();
  const auto half = lot(P1, "a:1/2 b:1/2");
  CHECK(sd_weakly_prefers(0, half, half, P1));
  CHECK(sd_weakly_prefers(1, half, half, P1));
  const auto P2 = p2();
  CHECK(sd_weakly_prefers(0, lot(P2, "a:1"), lot(P2, "a:1/2 b:1/2"), P2));
  CHECK_FALSE(sd_weakly_prefers(0, lot(P2, "a:1/2 b:1/2"), lot(P2, "a:1"), P2));
}

TEST_CASE("sd_dominates examples") {
  const auto P2 = p2();
  CHECK(sd_dominates(lot(P2, "a:1"), lot(P2, "a:1/2 b:1/2"), P2));
  const auto P1 = p1();
  CHECK_FALSE(sd_dominates(lot(P1, "a:1"), lot(P1, "a:1/2 b:1/2"), P1));
  const auto half = lot(P1, "a:1/2 b:1/2");
  CHECK_FALSE(sd_dominates(half, half, P1));
}

TEST_CASE("sd_efficient examples") {
  const auto P1 = p1();
  const auto r1 = sd_efficient(lot(P1, "a:1/2 b:1/2"), P1);
  CHECK(r1.efficient);
  CHECK_FALSE(r1.witness);

  const auto P2 = p2();
  const auto half = lot(P2, "a:1/2 b:1/2");
  const auto r2 = sd_efficient(half, P2);
  CHECK_FALSE(r2.efficient);
  REQUIRE(r2.witness);
  CHECK(sd_dominates(*r2.witness, half, P2));

  CHECK(sd_efficient(lot(P2, "a:1"), P2).efficient);
}

TEST_CASE("sd_efficiency_program layout") {
  const auto P1 = p1();
  const auto lp = sd_efficiency_program(lot(P1, "a:1/2 b:1/2"), P1);
  CHECK(lp.variables() == 2 + 2 * 2);
}

TEST_CASE("SD relation agrees with expected-utility dominance over the grid") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 2;
    const auto profile = random_profile(2, m, rng);
    AlternativeSet all;
    for (AlternativeId a = 0; a < m; ++a) all.push_back(a);
    const auto p = random_lottery(m, all, rng);
    const auto q = random_lottery(m, {static_cast<AlternativeId>(trial % m)}, rng);
    // Indicator utilities of upper contours lie in the L=2 grid, so the grid
    // decides the SD relation exactly.
    const auto grid = grid_utilities(profile, 2);
    for (AgentId i = 0; i < 2; ++i) {
      bool by_grid = true;
      for (const auto& u : grid) by_grid = by_grid && expected(u, i, p) >= expected(u, i, q);
      CHECK(sd_weakly_prefers(i, p, q, profile) == by_grid);
    }
  }
}

TEST_CASE("SD weak preference is reflexive and transitive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto profile = random_profile(3, 3, rng);
    const auto lotteries = test_lotteries(3, 1, rng);
    for (std::size_t x = 0; x < lotteries.size(); x += 3) {
      CHECK(sd_weakly_prefers(0, lotteries[x], lotteries[x], profile));
      for (std::size_t y = 0; y < lotteries.size(); y += 2) {
        for (std::size_t z = 1; z < lotteries.size(); z += 3) {
          if (sd_weakly_prefers(1, lotteries[x], lotteries[y], profile) &&
              sd_weakly_prefers(1, lotteries[y], lotteries[z], profile)) {
            CHECK(sd_weakly_prefers(1, lotteries[x], lotteries[z], profile));
          }
        }
      }
    }
  }
}

TEST_CASE("sd_efficient agrees with a mesh search on small profiles") {
  const auto mesh = mesh_lotteries(2, 4);
  std::mt19937_64 rng(3);
  for (const auto& profile : all_profiles(2, 2)) {
    for (const auto& p : mesh) {
      const auto verdict = sd_efficient(p, profile);
      const bool mesh_dominated = std::any_of(mesh.begin(), mesh.end(), [&](const Lottery& q) {
        return sd_dominates(q, p, profile);
      });
      // On m = 2 a dominator can always be moved to a degenerate lottery.
      CHECK(verdict.efficient == !mesh_dominated);
      if (verdict.witness) CHECK(sd_dominates(*verdict.witness, p, profile));
    }
  }
}
