#include "sweff/sw.hpp"

#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"

namespace sweff {

bool is_degenerate(const Lottery& p) { return p.support().size() == 1; }

bool is_interesting(const Lottery& p, const PreferenceProfile& profile) {
  require_compatible(p, profile);
  const auto& support = p.support();
  for (std::size_t s = 0; s < support.size(); ++s) {
    for (std::size_t t = s + 1; t < support.size(); ++t) {
      const AlternativeId a = support[s];
      const AlternativeId b = support[t];
      bool a_over_b = false;
      bool b_over_a = false;
      for (const auto& order : profile.orders()) {
        a_over_b |= order.prefers(a, b);
        b_over_a |= order.prefers(b, a);
      }
      if (a_over_b && b_over_a) return true;
    }
  }
  return false;
}

bool ex_post_efficient(const Lottery& p, const PreferenceProfile& profile) {
  require_compatible(p, profile);
  for (AlternativeId a : p.support()) {
    if (!is_pareto_optimal(a, profile)) return false;
  }
  return true;
}

bool sw_efficient(const Lottery& p, const PreferenceProfile& profile) {
  return ex_post_efficient(p, profile) && !is_interesting(p, profile);
}

bool sw_efficient_no_indifference(const Lottery& p, const PreferenceProfile& profile) {
  if (has_pareto_indifferent_pair(profile)) {
    throw PreconditionError("profile contains a Pareto indifferent pair of alternatives");
  }
  return ex_post_efficient(p, profile) && is_degenerate(p);
}

UtilityProfile separating_utilities(AlternativeId a, const PreferenceProfile& profile) {
  if (a >= profile.alternatives()) throw PreconditionError("alternative index out of range");
  if (!is_pareto_optimal(a, profile)) {
    throw PreconditionError(profile.name(a) + " is not Pareto optimal");
  }
  const auto below = dominated_set(a, profile);
  if (below.empty()) {
    throw PreconditionError("no agent strictly prefers " + profile.name(a) +
                            " to any alternative (D(" + profile.name(a) + ") is empty)");
  }

  const std::size_t n = profile.agents();
  const std::size_t m = profile.alternatives();
  const Rational step(1, n * m);
  UtilityProfile u(n, m);
  for (AgentId i = 0; i < n; ++i) {
    const auto& order = profile.order(i);
    for (AlternativeId x = 0; x < m; ++x) {
      u(i, x) = Rational(order.rank(x)) * step;
      if (order.weakly_prefers(x, a)) u(i, x) += 1;
    }
  }

  if (!is_consistent(u, profile, ConsistencyMode::Strict)) {
    throw InternalDisagreement("separating utilities are not consistent");
  }
  const Rational top = u.social_utility(a);
  const Rational margin(1, m);
  for (AlternativeId b : below) {
    if (top - u.social_utility(b) < margin) {
      throw InternalDisagreement("separating utilities miss the 1/m margin");
    }
  }
  return u;
}

Rational welfare(const UtilityProfile& u, const Lottery& p) {
  if (u.alternatives() != p.alternatives()) {
    throw ValidationError("utility profile and lottery have different alternative counts");
  }
  Rational total = 0;
  for (AlternativeId a : p.support()) total += p[a] * u.social_utility(a);
  return total;
}

AlternativeSet welfare_argmax(const UtilityProfile& u) {
  AlternativeSet best;
  Rational best_value;
  for (AlternativeId a = 0; a < u.alternatives(); ++a) {
    Rational value = u.social_utility(a);
    if (best.empty() || value > best_value) {
      best = {a};
      best_value = std::move(value);
    } else if (value == best_value) {
      best.push_back(a);
    }
  }
  return best;
}

bool maximizes_welfare(const UtilityProfile& u, const Lottery& p,
                       const PreferenceProfile& profile, ConsistencyMode mode) {
  require_compatible(p, profile);
  if (!is_consistent(u, profile, mode)) {
    throw PreconditionError("utility profile is not consistent with the preferences");
  }
  Rational best = u.social_utility(0);
  for (AlternativeId a = 1; a < u.alternatives(); ++a) {
    Rational value = u.social_utility(a);
    if (value > best) best = std::move(value);
  }
  return welfare(u, p) == best;
}

// ---------------------------------------------------------------------------
// UtilityGrid

namespace {

void monotone_levels(std::size_t tiers, std::size_t levels, std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == tiers) {
    out.push_back(current);
    return;
  }
  const std::size_t floor = current.empty() ? 0 : current.back();
  for (std::size_t level = floor; level < levels; ++level) {
    current.push_back(level);
    monotone_levels(tiers, levels, current, out);
    current.pop_back();
  }
}

}  // namespace

UtilityGrid::UtilityGrid(const PreferenceProfile& profile, std::size_t levels) {
  if (levels == 0) throw PreconditionError("utility grid needs at least one level");
  for (const auto& order : profile.orders()) {
    auto& ranks = ranks_.emplace_back();
    for (AlternativeId x = 0; x < order.alternatives(); ++x) ranks.push_back(order.rank(x));
    std::vector<std::size_t> current;
    monotone_levels(order.tier_count(), levels, current, options_.emplace_back());
  }
  cursor_.assign(options_.size(), 0);
}

std::optional<UtilityProfile> UtilityGrid::next() {
  if (done_) return std::nullopt;
  const std::size_t m = ranks_.front().size();
  UtilityProfile u(ranks_.size(), m);
  for (AgentId i = 0; i < ranks_.size(); ++i) {
    const auto& levels = options_[i][cursor_[i]];
    for (AlternativeId x = 0; x < m; ++x) u(i, x) = Rational(levels[ranks_[i][x]]);
  }
  std::size_t i = 0;
  while (i < cursor_.size() && ++cursor_[i] == options_[i].size()) {
    cursor_[i] = 0;
    ++i;
  }
  done_ = i == cursor_.size();
  return u;
}

std::size_t UtilityGrid::size() const {
  std::size_t total = 1;
  for (const auto& options : options_) total *= options.size();
  return total;
}

std::vector<UtilityProfile> grid_utilities(const PreferenceProfile& profile, std::size_t levels) {
  std::vector<UtilityProfile> result;
  UtilityGrid grid(profile, levels);
  while (auto u = grid.next()) result.push_back(std::move(*u));
  return result;
}

}  // namespace sweff
