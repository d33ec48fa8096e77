#include "sweff/cone.hpp"

#include <algorithm>
#include <set>

#include "sweff/errors.hpp"

namespace sweff {

// ---------------------------------------------------------------------------
// WelfareCone

WelfareCone::WelfareCone(AlternativeSet support, const PreferenceProfile& profile)
    : support_(std::move(support)), profile_(profile) {
  if (support_.empty()) throw PreconditionError("welfare cone needs a nonempty support");
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw PreconditionError("support lists an alternative twice");
  }
  const std::size_t m = profile_.alternatives();
  if (support_.back() >= m) throw PreconditionError("support alternative out of range");

  for (AgentId i = 0; i < profile_.agents(); ++i) {
    const auto& order = profile_.order(i);
    for (AlternativeId x = 0; x < m; ++x) {
      for (AlternativeId y = 0; y < m; ++y) {
        if (x != y && order.weakly_prefers(x, y)) consistency_.push_back({i, x, y});
      }
    }
  }
  for (AlternativeId a : support_) {
    for (AlternativeId b = 0; b < m; ++b) {
      if (a != b) maximization_.push_back({a, b});
    }
  }
}

bool WelfareCone::in_support(AlternativeId a) const {
  return std::binary_search(support_.begin(), support_.end(), a);
}

bool WelfareCone::contains(const UtilityProfile& u) const {
  require_compatible(u, profile_);
  for (const auto& h : consistency_) {
    if (u(h.agent, h.better) < u(h.agent, h.worse)) return false;
  }
  for (const auto& h : maximization_) {
    if (sgn(violation(h, u)) > 0) return false;
  }
  return true;
}

WelfareCone build_cone(const AlternativeSet& support, const PreferenceProfile& profile) {
  return WelfareCone(support, profile);
}

Rational violation(const WelfareHalfspace& h, const UtilityProfile& u) {
  return u.social_utility(h.other) - u.social_utility(h.top);
}

// ---------------------------------------------------------------------------
// Violation programs

namespace {

lp::LinearProgram full_program(const WelfareCone& cone, const WelfareHalfspace& h) {
  const auto& profile = cone.profile();
  const std::size_t n = profile.agents();
  const std::size_t m = profile.alternatives();
  const std::size_t vars = n * m;
  auto var = [m](AgentId i, AlternativeId x) { return i * m + x; };

  lp::LinearProgram program(vars);
  for (std::size_t j = 0; j < vars; ++j) program.set_bounds(j, 0, 1);
  for (const auto& c : cone.consistency()) {
    std::vector<Rational> row(vars, 0);
    row[var(c.agent, c.better)] += 1;
    row[var(c.agent, c.worse)] -= 1;
    program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0);
  }
  for (const auto& w : cone.maximization()) {
    std::vector<Rational> row(vars, 0);
    for (AgentId i = 0; i < n; ++i) {
      row[var(i, w.top)] += 1;
      row[var(i, w.other)] -= 1;
    }
    program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0);
  }
  for (AgentId i = 0; i < n; ++i) {
    program.set_objective(var(i, h.other), program.objective()[var(i, h.other)] + 1);
    program.set_objective(var(i, h.top), program.objective()[var(i, h.top)] - 1);
  }
  return program;
}

struct TierLayout {
  std::vector<std::size_t> offset;  // first variable of each agent
  std::size_t vars = 0;

  explicit TierLayout(const PreferenceProfile& profile) {
    for (const auto& order : profile.orders()) {
      offset.push_back(vars);
      vars += order.tier_count();
    }
  }
  std::size_t var(const PreferenceProfile& profile, AgentId i, AlternativeId x) const {
    return offset[i] + profile.order(i).rank(x);
  }
};

lp::LinearProgram tier_program(const WelfareCone& cone, const WelfareHalfspace& h) {
  const auto& profile = cone.profile();
  const std::size_t n = profile.agents();
  const std::size_t m = profile.alternatives();
  const TierLayout layout(profile);

  lp::LinearProgram program(layout.vars);
  for (std::size_t j = 0; j < layout.vars; ++j) program.set_bounds(j, 0, 1);
  for (AgentId i = 0; i < n; ++i) {
    for (std::size_t k = 0; k + 1 < profile.order(i).tier_count(); ++k) {
      std::vector<Rational> row(layout.vars, 0);
      row[layout.offset[i] + k + 1] = 1;
      row[layout.offset[i] + k] = -1;
      program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0);
    }
  }

  auto social_difference = [&](AlternativeId plus, AlternativeId minus) {
    std::vector<long> row(layout.vars, 0);
    for (AgentId i = 0; i < n; ++i) {
      ++row[layout.var(profile, i, plus)];
      --row[layout.var(profile, i, minus)];
    }
    return row;
  };

  std::set<std::vector<long>> seen;
  for (AlternativeId t : cone.support()) {
    for (AlternativeId b = 0; b < m; ++b) {
      if (b == t) continue;
      auto row = social_difference(t, b);
      if (std::all_of(row.begin(), row.end(), [](long c) { return c == 0; })) continue;
      if (!seen.insert(row).second) continue;
      program.add_constraint(std::vector<Rational>(row.begin(), row.end()),
                             lp::Relation::GreaterEqual, 0);
    }
  }
  const auto objective = social_difference(h.other, h.top);
  program.set_objective(std::vector<Rational>(objective.begin(), objective.end()));
  return program;
}

UtilityProfile expand_point(const WelfareCone& cone, const std::vector<Rational>& point,
                            ConeEncoding encoding) {
  const auto& profile = cone.profile();
  const std::size_t n = profile.agents();
  const std::size_t m = profile.alternatives();
  UtilityProfile u(n, m);
  if (encoding == ConeEncoding::Full) {
    for (AgentId i = 0; i < n; ++i) {
      for (AlternativeId x = 0; x < m; ++x) u(i, x) = point[i * m + x];
    }
  } else {
    const TierLayout layout(profile);
    for (AgentId i = 0; i < n; ++i) {
      for (AlternativeId x = 0; x < m; ++x) u(i, x) = point[layout.var(profile, i, x)];
    }
  }
  return u;
}

}  // namespace

lp::LinearProgram violation_program(const WelfareCone& cone, const WelfareHalfspace& h,
                                    ConeEncoding encoding) {
  const std::size_t m = cone.profile().alternatives();
  if (h.top >= m || h.other >= m) throw PreconditionError("halfspace alternative out of range");
  return encoding == ConeEncoding::Full ? full_program(cone, h) : tier_program(cone, h);
}

ViolationBound max_violation(const WelfareCone& cone, const WelfareHalfspace& h,
                             ConeEncoding encoding) {
  const auto outcome = lp::solve(violation_program(cone, h, encoding));
  if (outcome.status != lp::Status::Optimal) {
    // The origin is feasible and the box bounds everything.
    throw InternalDisagreement("violation program is " +
                               std::string(lp::to_string(outcome.status)));
  }
  ViolationBound bound{outcome.value, expand_point(cone, outcome.point, encoding)};
  if (!cone.contains(bound.point) || violation(h, bound.point) != bound.value) {
    throw InternalDisagreement("violation maximizer fails re-verification");
  }
  return bound;
}

namespace {

// Outer halfspaces in scan order: tops ascending; for each top, inner
// support alternatives first (the binding comparisons), then the rest.
template <typename Visit>
std::optional<UtilityProfile> scan_outer(const WelfareCone& inner, const WelfareCone& outer,
                                         Visit&& visit) {
  const std::size_t m = inner.profile().alternatives();
  for (AlternativeId a : outer.support()) {
    // Halfspaces with a in the inner support are rows of inner itself.
    if (inner.in_support(a)) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (AlternativeId b = 0; b < m; ++b) {
        if (b == a || inner.in_support(b) != (pass == 0)) continue;
        if (auto u = visit(WelfareHalfspace{a, b})) return u;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<UtilityProfile> find_escape(const WelfareCone& inner, const WelfareCone& outer,
                                          ConeEncoding encoding) {
  if (inner.profile().agents() != outer.profile().agents() ||
      inner.profile().alternatives() != outer.profile().alternatives()) {
    throw ValidationError("cones live in different utility spaces");
  }
  return scan_outer(inner, outer, [&](const WelfareHalfspace& h) -> std::optional<UtilityProfile> {
    auto bound = max_violation(inner, h, encoding);
    if (sgn(bound.value) > 0) return std::move(bound.point);
    return std::nullopt;
  });
}

bool cone_contained(const WelfareCone& inner, const WelfareCone& outer, ConeEncoding encoding) {
  return !find_escape(inner, outer, encoding);
}

bool sw_dominates(const Lottery& q, const Lottery& p, const PreferenceProfile& profile) {
  require_compatible(q, profile);
  require_compatible(p, profile);
  const auto cone_p = build_cone(p.support(), profile);
  const auto cone_q = build_cone(q.support(), profile);
  return cone_contained(cone_p, cone_q) && find_escape(cone_q, cone_p).has_value();
}

// ---------------------------------------------------------------------------
// Support enumeration

SupportMask to_mask(const AlternativeSet& support) {
  SupportMask mask = 0;
  for (AlternativeId a : support) {
    if (a >= 64) throw CapExceededError("support masks hold at most 64 alternatives");
    mask |= SupportMask{1} << a;
  }
  return mask;
}

AlternativeSet from_mask(SupportMask mask, std::size_t m) {
  AlternativeSet support;
  for (AlternativeId a = 0; a < m; ++a) {
    if (mask & (SupportMask{1} << a)) support.push_back(a);
  }
  return support;
}

std::vector<SupportMask> supports_in_scan_order(std::size_t m) {
  std::vector<SupportMask> order;
  std::vector<AlternativeId> combo;
  for (std::size_t size = 1; size <= m; ++size) {
    combo.resize(size);
    for (std::size_t k = 0; k < size; ++k) combo[k] = k;
    while (true) {
      order.push_back(to_mask(combo));
      std::size_t k = size;
      while (k > 0 && combo[k - 1] == m - size + k - 1) --k;
      if (k == 0) break;
      ++combo[k - 1];
      for (std::size_t j = k; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return order;
}

DominanceOracle::DominanceOracle(PreferenceProfile profile, ConeEncoding encoding,
                                 std::size_t cap)
    : profile_(std::move(profile)), encoding_(encoding), m_(profile_.alternatives()) {
  if (m_ > cap) {
    throw CapExceededError("support enumeration over " + std::to_string(m_) +
                           " alternatives exceeds the cap of " + std::to_string(cap));
  }
  if (m_ > 24) throw CapExceededError("support enumeration is limited to 24 alternatives");
  scan_order_ = supports_in_scan_order(m_);
  cones_.resize(SupportMask{1} << m_);
}

const WelfareCone& DominanceOracle::cone(SupportMask support) {
  auto& slot = cones_.at(support);
  if (!slot) slot.emplace(from_mask(support, m_), profile_);
  return *slot;
}

std::optional<UtilityProfile> DominanceOracle::halfspace_escape(SupportMask inner,
                                                                const WelfareHalfspace& h) {
  const std::uint64_t key = (inner * m_ + h.top) * m_ + h.other;
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  ++programs_solved_;
  auto bound = max_violation(cone(inner), h, encoding_);
  std::optional<UtilityProfile> result;
  if (sgn(bound.value) > 0) result = std::move(bound.point);
  memo_.emplace(key, result);
  return result;
}

std::optional<UtilityProfile> DominanceOracle::escape(SupportMask inner, SupportMask outer) {
  const auto& inner_cone = cone(inner);
  const auto& outer_cone = cone(outer);
  return scan_outer(inner_cone, outer_cone,
                    [&](const WelfareHalfspace& h) { return halfspace_escape(inner, h); });
}

bool DominanceOracle::dominates(SupportMask q, SupportMask p) {
  return contained(p, q) && escape(q, p).has_value();
}

EnumerationResult DominanceOracle::efficient(SupportMask p) {
  if (const auto it = verdicts_.find(p); it != verdicts_.end()) return it->second;
  EnumerationResult result;
  for (SupportMask s : scan_order_) {
    if (!contained(p, s)) continue;
    if (auto witness = escape(s, p)) {
      result.efficient = false;
      result.dominating_support = from_mask(s, m_);
      result.strict_witness = std::move(witness);
      break;
    }
  }
  verdicts_.emplace(p, result);
  return result;
}

EnumerationResult sw_efficient_by_enumeration(const Lottery& p, const PreferenceProfile& profile,
                                              std::size_t cap) {
  require_compatible(p, profile);
  DominanceOracle oracle(profile, ConeEncoding::TierLevels, cap);
  return oracle.efficient(to_mask(p.support()));
}

}  // namespace sweff
