#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sweff/profile.hpp"

namespace sweff {

/// Every weak order on m alternatives (ordered set partitions): 1, 3, 13, 75, ...
std::vector<WeakOrder> all_weak_orders(std::size_t m);

/// Every profile of n agents over m alternatives: |weak orders|^n of them.
std::vector<PreferenceProfile> all_profiles(std::size_t n, std::size_t m);

/// Uniform positive weights in [1, 12] on `support`, normalized.
Lottery random_lottery(std::size_t m, const AlternativeSet& support, std::mt19937_64& rng);

/// For every nonempty support: the uniform lottery followed by
/// `random_per_support` seeded random lotteries with that support.
std::vector<Lottery> test_lotteries(std::size_t m, std::size_t random_per_support,
                                    std::mt19937_64& rng);

/// Every lottery on m alternatives whose probabilities have denominators
/// at most `max_denominator`.
std::vector<Lottery> mesh_lotteries(std::size_t m, std::size_t max_denominator);

}  // namespace sweff
