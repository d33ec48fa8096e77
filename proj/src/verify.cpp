#include "sweff/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "sweff/assignment.hpp"
#include "sweff/cone.hpp"
#include "sweff/corpus.hpp"
#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"

namespace sweff {

bool VerifySummary::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyTally& t) { return t.failures == 0; });
}

const PropertyTally* VerifySummary::find(const std::string& name) const {
  for (const auto& t : properties) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::string VerifySummary::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << ", " << profiles << " profiles, " << lotteries
      << " lotteries, " << programs_solved << " cone programs\n";
  for (const auto& t : properties) {
    out << (t.failures == 0 ? "PASS " : "FAIL ") << t.name << ": " << t.checks << " checks, "
        << t.failures << " failures\n";
    if (t.first_counterexample) out << "  first counterexample:\n" << *t.first_counterexample;
  }
  return out.str();
}

namespace {

class Tallies {
 public:
  void record(const std::string& name, bool ok, const std::string& context = {}) {
    auto [it, inserted] = index_.try_emplace(name, tallies_.size());
    if (inserted) tallies_.push_back(PropertyTally{name, 0, 0, std::nullopt});
    auto& t = tallies_[it->second];
    ++t.checks;
    if (!ok) {
      ++t.failures;
      if (!t.first_counterexample) t.first_counterexample = context;
    }
  }

  std::vector<PropertyTally> take() { return std::move(tallies_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyTally> tallies_;
};

std::string describe_case(const PreferenceProfile& profile, const Lottery* p = nullptr) {
  std::string out = profile.to_text();
  if (p) out += "lottery: " + format_lottery(*p, profile) + "\n";
  return out;
}

bool subset_of(const AlternativeSet& small, const AlternativeSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Rational agent_expected_utility(const UtilityProfile& u, AgentId i, const Lottery& p) {
  Rational total = 0;
  for (AlternativeId a : p.support()) total += p[a] * u(i, a);
  return total;
}

void verify_profile(const PreferenceProfile& profile, const VerifyOptions& options,
                    std::mt19937_64& rng, Tallies& tallies, VerifySummary& summary) {
  const std::size_t m = profile.alternatives();
  DominanceOracle oracle(profile);
  const bool no_indifference = !has_pareto_indifferent_pair(profile);
  const auto lotteries = test_lotteries(m, options.lotteries_per_support, rng);
  summary.lotteries += lotteries.size();

  std::vector<Lottery> mesh;
  if (m <= options.mesh_max_alternatives) mesh = mesh_lotteries(m, options.mesh_denominator);

  const bool grid_enabled = profile.agents() <= options.grid_max_agents;
  std::vector<UtilityProfile> grid;
  if (grid_enabled) grid = grid_utilities(profile, options.grid_levels);

  for (const auto& p : lotteries) {
    const auto context = [&] { return describe_case(profile, &p); };
    const bool sw = sw_efficient(p, profile);
    const auto scan = oracle.efficient(to_mask(p.support()));
    const auto sd = sd_efficient(p, profile);
    const bool ex_post = ex_post_efficient(p, profile);
    const bool interesting = is_interesting(p, profile);
    const bool degenerate = is_degenerate(p);

    tallies.record("characterization-equivalence", sw == scan.efficient, context());
    tallies.record("efficiency-chain", (!sw || sd.efficient) && (!sd.efficient || ex_post),
                   context());
    tallies.record("enumeration-chain", !scan.efficient || sd.efficient, context());
    if (interesting) tallies.record("interesting-not-sw-efficient", !scan.efficient, context());
    if (!interesting && ex_post) {
      tallies.record("uninteresting-ex-post-sw-efficient", scan.efficient, context());
    }
    if (no_indifference) {
      tallies.record("no-indifference-characterization",
                     sw_efficient_no_indifference(p, profile) == (ex_post && degenerate) &&
                         sw == (ex_post && degenerate),
                     context());
      if (!interesting && !degenerate) {
        tallies.record("uninteresting-nondegenerate-not-ex-post", !ex_post, context());
      }
    }

    if (!scan.efficient) {
      bool ok = scan.dominating_support && scan.strict_witness;
      if (ok) {
        const auto q = Lottery::uniform(m, *scan.dominating_support);
        const auto& u = *scan.strict_witness;
        ok = is_consistent(u, profile) && maximizes_welfare(u, q, profile) &&
             !maximizes_welfare(u, p, profile);
      }
      tallies.record("enumeration-certificate", ok, context());
    }

    if (!sd.efficient) {
      tallies.record("sd-certificate", sd.witness && sd_dominates(*sd.witness, p, profile),
                     context());
      if (grid_enabled && sd.witness) {
        bool ok = true;
        for (const auto& u : grid) {
          for (AgentId i = 0; i < profile.agents() && ok; ++i) {
            ok = agent_expected_utility(u, i, *sd.witness) >= agent_expected_utility(u, i, p);
          }
          if (!ok) break;
        }
        tallies.record("sd-expected-utility", ok, context());
      }
    } else if (!mesh.empty()) {
      const bool none = std::none_of(mesh.begin(), mesh.end(), [&](const Lottery& q) {
        return sd_dominates(q, p, profile);
      });
      tallies.record("sd-mesh-falsifier", none, context());
    }
  }

  for (AlternativeId a : pareto_optimal_set(profile)) {
    const auto ctx = describe_case(profile) + "alternative: " + profile.name(a) + "\n";
    tallies.record("degenerate-pareto-optimal-sd-efficient",
                   sd_efficient(Lottery::degenerate(m, a), profile).efficient, ctx);
    const auto below = dominated_set(a, profile);
    if (below.empty()) continue;
    const auto u = separating_utilities(a, profile);
    bool ok = is_consistent(u, profile);
    for (AlternativeId b : below) {
      ok = ok && u.social_utility(a) - u.social_utility(b) >= Rational(1, m);
    }
    tallies.record("separating-utilities", ok, ctx);
  }

  if (grid_enabled) {
    // maximizes[u][k] for lottery k.
    std::vector<std::vector<bool>> maximizes(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto argmax = welfare_argmax(grid[g]);
      for (const auto& p : lotteries) {
        const bool by_welfare = maximizes_welfare(grid[g], p, profile);
        maximizes[g].push_back(by_welfare);
        tallies.record("support-sufficiency", by_welfare == subset_of(p.support(), argmax),
                       describe_case(profile, &p));
      }
      for (SupportMask s : supports_in_scan_order(m)) {
        const auto support = from_mask(s, m);
        tallies.record("cone-membership",
                       oracle.cone(s).contains(grid[g]) ==
                           (is_consistent(grid[g], profile) && subset_of(support, argmax)),
                       describe_case(profile));
      }
    }
    for (std::size_t qi = 0; qi < lotteries.size(); ++qi) {
      for (std::size_t pi = 0; pi < lotteries.size(); ++pi) {
        const auto q_mask = to_mask(lotteries[qi].support());
        const auto p_mask = to_mask(lotteries[pi].support());
        if (!oracle.dominates(q_mask, p_mask)) continue;
        bool ok = true;
        for (std::size_t g = 0; g < grid.size() && ok; ++g) {
          ok = !maximizes[g][pi] || maximizes[g][qi];
        }
        tallies.record("grid-soundness", ok,
                       describe_case(profile, &lotteries[pi]) +
                           "dominated by: " + format_lottery(lotteries[qi], profile) + "\n");
      }
    }
  }
  summary.programs_solved += oracle.programs_solved();
}

void verify_assignments(std::size_t n, const VerifyOptions& options, std::mt19937_64& rng,
                        Tallies& tallies, VerifySummary& summary) {
  for (const auto& instance : all_strict_instances(n)) {
    const auto& objects = instance.object_preferences();
    const auto ctx = [&] { return "instance:\n" + objects.to_text(); };
    tallies.record("assignment-no-pareto-indifference", verify_no_pareto_indifference(instance),
                   ctx());

    const auto assignments = enumerate_assignments(instance);
    const auto lifted = lift_profile(instance);
    bool lift_ok = true;
    for (AgentId i = 0; i < n && lift_ok; ++i) {
      for (std::size_t x = 0; x < assignments.size() && lift_ok; ++x) {
        for (std::size_t y = 0; y < assignments.size() && lift_ok; ++y) {
          lift_ok = objects.order(i).prefers(assignments[x].object_of[i],
                                             assignments[y].object_of[i]) ==
                    lifted.order(i).prefers(x, y);
        }
      }
    }
    tallies.record("assignment-lift-preserves-order", lift_ok, ctx());

    const std::size_t m = lifted.alternatives();
    DominanceOracle oracle(lifted);
    const auto lotteries = test_lotteries(m, options.lotteries_per_support, rng);
    summary.lotteries += lotteries.size();
    for (const auto& p : lotteries) {
      const auto lottery_ctx = [&] { return ctx() + "lottery: " + format_lottery(p, lifted) + "\n"; };
      bool verdict = false;
      bool consistent = true;
      try {
        verdict = corollary_check(instance, p);
      } catch (const InternalDisagreement&) {
        consistent = false;
      }
      tallies.record("corollary-degenerate-pareto-optimal",
                     consistent && verdict == (is_degenerate(p) && ex_post_efficient(p, lifted)),
                     lottery_ctx());
      tallies.record("corollary-enumeration",
                     consistent && verdict == oracle.efficient(to_mask(p.support())).efficient,
                     lottery_ctx());
    }
    summary.programs_solved += oracle.programs_solved();
    ++summary.profiles;
  }
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& options) {
  VerifySummary summary;
  summary.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  Tallies tallies;
  if (options.assignment) {
    for (std::size_t n = options.cumulative ? 1 : options.max_agents; n <= options.max_agents;
         ++n) {
      verify_assignments(n, options, rng, tallies, summary);
    }
  } else {
    for (std::size_t n = options.cumulative ? 1 : options.max_agents; n <= options.max_agents;
         ++n) {
      for (std::size_t m = options.cumulative ? 1 : options.max_alternatives;
           m <= options.max_alternatives; ++m) {
        for (const auto& profile : all_profiles(n, m)) {
          verify_profile(profile, options, rng, tallies, summary);
          ++summary.profiles;
        }
      }
    }
  }
  summary.properties = tallies.take();
  return summary;
}

}  // namespace sweff
