// Acceptance sweep: one PASS/FAIL line per criterion, exit status 1 on any
// failure. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "sweff/assignment.hpp"
#include "sweff/cone.hpp"
#include "sweff/corpus.hpp"
#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"

using namespace sweff;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& context) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = context;
  }
};

std::string describe(const PreferenceProfile& profile, const Lottery* p = nullptr) {
  std::string out = profile.to_text();
  if (p) out += "lottery: " + format_lottery(*p, profile) + "\n";
  return out;
}

// Welfare maximizers computed from scratch, without welfare_argmax.
AlternativeSet argmax_of(const UtilityProfile& u) {
  std::vector<Rational> social(u.alternatives(), 0);
  for (AgentId i = 0; i < u.agents(); ++i) {
    for (AlternativeId a = 0; a < u.alternatives(); ++a) social[a] += u(i, a);
  }
  const Rational best = *std::max_element(social.begin(), social.end());
  AlternativeSet out;
  for (AlternativeId a = 0; a < social.size(); ++a) {
    if (social[a] == best) out.push_back(a);
  }
  return out;
}

bool within(const AlternativeSet& small, const AlternativeSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

constexpr std::size_t kRandomPerSupport = 2;
constexpr std::size_t kGridLevels = 3;
constexpr std::size_t kMeshDenominator = 4;
constexpr std::uint64_t kSeed = 20240101;

}  // namespace

int main() {
  std::vector<Criterion> c = {
      {1, "SW-efficiency characterization equals support enumeration (n<=3, m<=3)"},
      {2, "sw => sd => ex post chain on the same corpus"},
      {3, "separating utilities consistent with margin >= 1/m"},
      {4, "without Pareto indifference: sw == ex post and degenerate"},
      {5, "without Pareto indifference: uninteresting non-degenerate => not ex post"},
      {6, "assignment: no Pareto indifference, sw == degenerate on Pareto optimal (n=2,3)"},
      {7, "SD certificates verify and mesh (denominators <= 4, m <= 3) finds no dominator"},
      {8, "support sufficiency and grid soundness, L=3 (n<=2, m<=3)"},
  };
  auto& eq = c[0];
  auto& chain = c[1];
  auto& separating = c[2];
  auto& strict_char = c[3];
  auto& nondegenerate = c[4];
  auto& assignment = c[5];
  auto& sd_cert = c[6];
  auto& grid_props = c[7];

  const Clock clock;
  std::mt19937_64 rng(kSeed);
  std::size_t profiles = 0;
  std::size_t lottery_count = 0;

  auto check_sd = [&](const Lottery& p, const PreferenceProfile& profile, const SdEfficiency& sd,
                      const std::vector<Lottery>& mesh) {
    if (!sd.efficient) {
      sd_cert.record(sd.witness && sd_dominates(*sd.witness, p, profile),
                     "SD witness fails\n" + describe(profile, &p));
    } else if (!mesh.empty()) {
      const auto hit = std::find_if(mesh.begin(), mesh.end(), [&](const Lottery& q) {
        return sd_dominates(q, p, profile);
      });
      sd_cert.record(hit == mesh.end(), "mesh dominator found\n" + describe(profile, &p));
    }
  };

  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto mesh = mesh_lotteries(m, kMeshDenominator);
      for (const auto& profile : all_profiles(n, m)) {
        ++profiles;
        const bool no_indifference = !has_pareto_indifferent_pair(profile);
        const auto lotteries = test_lotteries(m, kRandomPerSupport, rng);
        lottery_count += lotteries.size();
        DominanceOracle oracle(profile);

        std::vector<bool> sw_verdicts;
        for (const auto& p : lotteries) {
          const bool sw = sw_efficient(p, profile);
          const bool by_enumeration = oracle.efficient(to_mask(p.support())).efficient;
          sw_verdicts.push_back(sw);
          eq.record(sw == by_enumeration, describe(profile, &p));
        }

        for (std::size_t k = 0; k < lotteries.size(); ++k) {
          const auto& p = lotteries[k];
          const bool sw = sw_verdicts[k];
          const auto sd = sd_efficient(p, profile);
          const bool ex_post = ex_post_efficient(p, profile);
          chain.record((!sw || sd.efficient) && (!sd.efficient || ex_post), describe(profile, &p));

          check_sd(p, profile, sd, mesh);

          if (no_indifference) {
            const bool degenerate = is_degenerate(p);
            strict_char.record(sw == (ex_post && degenerate) &&
                                   sw_efficient_no_indifference(p, profile) == sw,
                               describe(profile, &p));
            if (!is_interesting(p, profile) && !degenerate) {
              nondegenerate.record(!ex_post, describe(profile, &p));
            }
          }
        }

        for (AlternativeId a : pareto_optimal_set(profile)) {
          const auto below = dominated_set(a, profile);
          if (below.empty()) continue;
          const auto context = describe(profile) + "alternative: " + profile.name(a) + "\n";
          bool ok = false;
          try {
            const auto u = separating_utilities(a, profile);
            ok = is_consistent(u, profile);
            for (AlternativeId b : below) {
              ok = ok && u.social_utility(a) - u.social_utility(b) >= Rational(1, m);
            }
          } catch (const std::exception&) {
            ok = false;
          }
          separating.record(ok, context);
        }

        if (n > 2) continue;
        const auto grid = grid_utilities(profile, kGridLevels);
        std::vector<std::vector<bool>> maximizes(grid.size());
        for (std::size_t g = 0; g < grid.size(); ++g) {
          const auto top = argmax_of(grid[g]);
          for (const auto& p : lotteries) {
            const bool by_welfare = maximizes_welfare(grid[g], p, profile);
            maximizes[g].push_back(by_welfare);
            grid_props.record(by_welfare == within(p.support(), top),
                              "support sufficiency\n" + describe(profile, &p));
          }
        }
        for (std::size_t qi = 0; qi < lotteries.size(); ++qi) {
          for (std::size_t pi = 0; pi < lotteries.size(); ++pi) {
            if (!oracle.dominates(to_mask(lotteries[qi].support()),
                                  to_mask(lotteries[pi].support()))) {
              continue;
            }
            bool ok = true;
            for (std::size_t g = 0; g < grid.size() && ok; ++g) {
              ok = !maximizes[g][pi] || maximizes[g][qi];
            }
            grid_props.record(ok, "grid soundness\n" + describe(profile, &lotteries[pi]) +
                                      "dominated by: " +
                                      format_lottery(lotteries[qi], profile) + "\n");
          }
        }
      }
    }
  }

  std::size_t instances = 0;
  for (std::size_t n : {2, 3}) {
    for (const auto& instance : all_strict_instances(n)) {
      ++instances;
      const auto context = "instance:\n" + instance.object_preferences().to_text();
      assignment.record(verify_no_pareto_indifference(instance), context);
      const auto lifted = lift_profile(instance);
      DominanceOracle oracle(lifted);
      const auto lotteries = test_lotteries(lifted.alternatives(), kRandomPerSupport, rng);
      lottery_count += lotteries.size();
      for (const auto& p : lotteries) {
        const auto lottery_context = context + "lottery: " + format_lottery(p, lifted) + "\n";
        bool ok = false;
        try {
          const bool verdict = corollary_check(instance, p);
          ok = verdict == (is_degenerate(p) && ex_post_efficient(p, lifted)) &&
               verdict == oracle.efficient(to_mask(p.support())).efficient;
        } catch (const InternalDisagreement&) {
          ok = false;
        }
        assignment.record(ok, lottery_context);

        check_sd(p, lifted, sd_efficient(p, lifted), {});
      }
    }
  }

  std::cout << "corpus: " << profiles << " profiles, " << instances
            << " assignment instances, " << lottery_count << " lotteries, seed " << kSeed
            << "\n";
  bool all_passed = true;
  for (const auto& k : c) {
    const bool pass = k.failures == 0 && k.checks > 0;
    all_passed = all_passed && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << k.id << "] " << k.title << ": " << k.checks
              << " checks, " << k.failures << " failures\n";
    if (!k.first_failure.empty()) std::cout << "  first failure:\n" << k.first_failure;
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.1f", clock.seconds());
  std::cout << "elapsed " << elapsed << " s\n";
  return all_passed ? 0 : 1;
}
