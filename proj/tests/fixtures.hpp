#pragma once

#include <algorithm>
#include <random>

#include "sweff/profile.hpp"

namespace sweff::testing {

// 1: a > b, 2: b > a
inline PreferenceProfile p1() { return parse_profile("1: a > b\n2: b > a\n"); }
// 1: a > b, 2: a > b
inline PreferenceProfile p2() { return parse_profile("1: a > b\n2: a > b\n"); }
// both: a ~ b > c
inline PreferenceProfile p3() { return parse_profile("1: a ~ b > c\n2: a ~ b > c\n"); }

inline Lottery lot(const PreferenceProfile& profile, const char* text) {
  return parse_lottery(text, profile);
}

inline WeakOrder random_weak_order(std::size_t m, std::mt19937_64& rng) {
  std::vector<AlternativeId> perm(m);
  for (std::size_t k = 0; k < m; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<AlternativeId>> tiers;
  std::bernoulli_distribution cut(0.5);
  for (std::size_t k = 0; k < m; ++k) {
    if (tiers.empty() || cut(rng)) tiers.emplace_back();
    tiers.back().push_back(perm[k]);
  }
  return WeakOrder(std::move(tiers), m);
}

inline PreferenceProfile random_profile(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<WeakOrder> orders;
  for (std::size_t i = 0; i < n; ++i) orders.push_back(random_weak_order(m, rng));
  return PreferenceProfile(std::move(orders));
}

}  // namespace sweff::testing
