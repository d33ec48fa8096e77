#include "sweff/sd.hpp"

#include "sweff/errors.hpp"

namespace sweff {

Rational upper_contour_prob(const Lottery& p, AgentId i, AlternativeId y,
                            const PreferenceProfile& profile) {
  require_compatible(p, profile);
  if (i >= profile.agents()) throw PreconditionError("agent index out of range");
  if (y >= profile.alternatives()) throw PreconditionError("alternative index out of range");
  const auto& order = profile.order(i);
  Rational total = 0;
  for (AlternativeId x : p.support()) {
    if (order.weakly_prefers(x, y)) total += p[x];
  }
  return total;
}

bool sd_weakly_prefers(AgentId i, const Lottery& p, const Lottery& q,
                       const PreferenceProfile& profile) {
  for (AlternativeId y = 0; y < profile.alternatives(); ++y) {
    if (upper_contour_prob(p, i, y, profile) < upper_contour_prob(q, i, y, profile)) return false;
  }
  return true;
}

SdComparison sd_compare(const Lottery& first, const Lottery& second,
                        const PreferenceProfile& profile) {
  SdComparison result;
  for (AgentId i = 0; i < profile.agents(); ++i) {
    result.weakly_prefers_first.push_back(sd_weakly_prefers(i, first, second, profile));
    result.weakly_prefers_second.push_back(sd_weakly_prefers(i, second, first, profile));
  }
  return result;
}

bool sd_dominates(const Lottery& q, const Lottery& p, const PreferenceProfile& profile) {
  const auto cmp = sd_compare(q, p, profile);
  bool strict = false;
  for (AgentId i = 0; i < profile.agents(); ++i) {
    if (!cmp.weakly_prefers_first[i]) return false;
    strict |= !cmp.weakly_prefers_second[i];
  }
  return strict;
}

lp::LinearProgram sd_efficiency_program(const Lottery& p, const PreferenceProfile& profile) {
  require_compatible(p, profile);
  const std::size_t n = profile.agents();
  const std::size_t m = profile.alternatives();
  const std::size_t vars = m + n * m;
  lp::LinearProgram program(vars);

  std::vector<Rational> total(vars, 0);
  for (AlternativeId a = 0; a < m; ++a) {
    total[a] = 1;
    program.set_lower(a, 0);
  }
  program.add_constraint(std::move(total), lp::Relation::Equal, 1);

  for (AgentId i = 0; i < n; ++i) {
    const auto& order = profile.order(i);
    for (AlternativeId y = 0; y < m; ++y) {
      const std::size_t slack = m + i * m + y;
      program.set_lower(slack, 0);
      program.set_objective(slack, 1);
      // sum_{x ≿_i y} q(x) - s_{i,y} = sum_{x ≿_i y} p(x)
      std::vector<Rational> row(vars, 0);
      for (AlternativeId x = 0; x < m; ++x) {
        if (order.weakly_prefers(x, y)) row[x] = 1;
      }
      row[slack] = -1;
      program.add_constraint(std::move(row), lp::Relation::Equal,
                             upper_contour_prob(p, i, y, profile));
    }
  }
  return program;
}

SdEfficiency sd_efficient(const Lottery& p, const PreferenceProfile& profile) {
  const auto program = sd_efficiency_program(p, profile);
  const auto outcome = lp::solve(program);
  if (outcome.status != lp::Status::Optimal) {
    throw InternalDisagreement("SD-efficiency program is " +
                               std::string(lp::to_string(outcome.status)));
  }
  if (sgn(outcome.value) == 0) return {true, std::nullopt};

  Lottery witness(std::vector<Rational>(outcome.point.begin(),
                                        outcome.point.begin() +
                                            static_cast<std::ptrdiff_t>(profile.alternatives())));
  if (!sd_dominates(witness, p, profile)) {
    throw InternalDisagreement("SD witness does not dominate the lottery");
  }
  return {false, std::move(witness)};
}

}  // namespace sweff
