#include "sweff/corpus.hpp"

#include <set>

#include "sweff/cone.hpp"
#include "sweff/errors.hpp"

namespace sweff {
namespace {

void extend_partitions(std::size_t m, std::vector<bool>& used,
                       std::vector<std::vector<AlternativeId>>& tiers,
                       std::vector<WeakOrder>& out) {
  std::vector<AlternativeId> remaining;
  for (AlternativeId a = 0; a < m; ++a) {
    if (!used[a]) remaining.push_back(a);
  }
  if (remaining.empty()) {
    out.emplace_back(tiers, m);
    return;
  }
  // Next tier: any nonempty subset of the remaining alternatives.
  const std::size_t k = remaining.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    auto& tier = tiers.emplace_back();
    for (std::size_t j = 0; j < k; ++j) {
      if (bits & (std::uint64_t{1} << j)) {
        tier.push_back(remaining[j]);
        used[remaining[j]] = true;
      }
    }
    extend_partitions(m, used, tiers, out);
    for (AlternativeId a : tiers.back()) used[a] = false;
    tiers.pop_back();
  }
}

}  // namespace

std::vector<WeakOrder> all_weak_orders(std::size_t m) {
  if (m == 0 || m > 8) throw CapExceededError("weak order enumeration supports 1..8 alternatives");
  std::vector<WeakOrder> out;
  std::vector<bool> used(m, false);
  std::vector<std::vector<AlternativeId>> tiers;
  extend_partitions(m, used, tiers, out);
  return out;
}

std::vector<PreferenceProfile> all_profiles(std::size_t n, std::size_t m) {
  if (n == 0) throw PreconditionError("profiles need at least one agent");
  const auto orders = all_weak_orders(m);
  std::vector<PreferenceProfile> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<WeakOrder> chosen;
    for (std::size_t i = 0; i < n; ++i) chosen.push_back(orders[pick[i]]);
    out.emplace_back(std::move(chosen));
    std::size_t i = 0;
    while (i < n && ++pick[i] == orders.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Lottery random_lottery(std::size_t m, const AlternativeSet& support, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(1, 12);
  std::vector<Rational> probs(m, 0);
  Rational total = 0;
  for (AlternativeId a : support) {
    probs.at(a) = weight(rng);
    total += probs[a];
  }
  for (auto& x : probs) x /= total;
  return Lottery(std::move(probs));
}

std::vector<Lottery> test_lotteries(std::size_t m, std::size_t random_per_support,
                                    std::mt19937_64& rng) {
  std::vector<Lottery> out;
  for (SupportMask mask : supports_in_scan_order(m)) {
    const auto support = from_mask(mask, m);
    out.push_back(Lottery::uniform(m, support));
    for (std::size_t k = 0; k < random_per_support; ++k) {
      out.push_back(random_lottery(m, support, rng));
    }
  }
  return out;
}

std::vector<Lottery> mesh_lotteries(std::size_t m, std::size_t max_denominator) {
  std::set<Rational> levels;
  for (std::size_t den = 1; den <= max_denominator; ++den) {
    for (std::size_t num = 0; num <= den; ++num) {
      Rational level(num, den);
      level.canonicalize();
      levels.insert(level);
    }
  }
  const std::vector<Rational> values(levels.begin(), levels.end());

  std::vector<Lottery> out;
  std::vector<Rational> probs(m);
  auto fill = [&](auto&& self, std::size_t a, const Rational& used) -> void {
    if (a + 1 == m) {
      probs[a] = 1 - used;
      if (levels.contains(probs[a])) out.emplace_back(probs);
      return;
    }
    for (const auto& v : values) {
      if (used + v > 1) break;
      probs[a] = v;
      self(self, a + 1, used + v);
    }
  };
  fill(fill, 0, Rational(0));
  return out;
}

}  // namespace sweff
