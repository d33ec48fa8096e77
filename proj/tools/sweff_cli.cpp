// Command-line front end: check, witness, dominates, verify, assignment check.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sweff/assignment.hpp"
#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/report.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"
#include "sweff/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitDisagreement = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

sweff::ConsistencyMode mode_from(bool strict) {
  return strict ? sweff::ConsistencyMode::Strict : sweff::ConsistencyMode::Weak;
}

void print_report(const sweff::AnalysisReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << sweff::to_json(report) << '\n';
  } else {
    std::cout << sweff::to_text(report);
  }
}

int check_command(const std::string& profile_path, const std::string& lottery_text,
                  const std::string& format, std::size_t cap, bool strict) {
  const auto profile = sweff::parse_profile(read_file(profile_path));
  const auto lottery = sweff::parse_lottery(lottery_text, profile);
  print_report(sweff::run_check(profile, lottery, {cap, mode_from(strict)}), format);
  return kExitOk;
}

int run_witness(const std::string& profile_path, const std::string& name, bool strict) {
  const auto profile = sweff::parse_profile(read_file(profile_path));
  const auto a = profile.find(name);
  if (!a) throw sweff::ValidationError("unknown alternative '" + name + "'");
  const auto u = sweff::separating_utilities(*a, profile);
  if (!sweff::is_consistent(u, profile, mode_from(strict))) {
    throw sweff::InternalDisagreement("witness is not consistent under the requested convention");
  }
  std::cout << "utilities separating " << name << " (consistency: "
            << sweff::to_string(mode_from(strict)) << "):\n"
            << sweff::format_utilities(u, profile);
  std::cout << "margins:\n";
  const auto top = u.social_utility(*a);
  for (auto b : sweff::dominated_set(*a, profile)) {
    const auto other = u.social_utility(b);
    std::cout << "  " << name << " vs " << profile.name(b) << ": " << sweff::to_string(top)
              << " - " << sweff::to_string(other) << " = " << sweff::to_string(top - other)
              << '\n';
  }
  return kExitOk;
}

int run_dominates(const std::string& profile_path, const std::string& q_text,
                  const std::string& p_text) {
  const auto profile = sweff::parse_profile(read_file(profile_path));
  const auto q = sweff::parse_lottery(q_text, profile);
  const auto p = sweff::parse_lottery(p_text, profile);
  const bool sw = sweff::sw_dominates(q, p, profile);
  const bool sd = sweff::sd_dominates(q, p, profile);
  std::cout << "q SW-dominates p: " << (sw ? "yes" : "no") << '\n';
  std::cout << "q SD-dominates p: " << (sd ? "yes" : "no") << '\n';
  if (sw) {
    const auto cone_p = sweff::build_cone(p.support(), profile);
    const auto cone_q = sweff::build_cone(q.support(), profile);
    if (const auto u = sweff::find_escape(cone_q, cone_p)) {
      std::cout << "utilities where q maximizes welfare but p does not:\n"
                << sweff::format_utilities(*u, profile);
    }
  }
  return kExitOk;
}

int run_assignment_check(const std::string& instance_path, const std::string& lottery_text,
                         const std::string& format, bool strict) {
  const auto instance = sweff::parse_assignment_instance(read_file(instance_path));
  const auto assignments = sweff::enumerate_assignments(instance);
  const auto lifted = sweff::lift_profile(instance);
  const auto lottery = sweff::parse_lottery(lottery_text, lifted);
  const auto report = sweff::run_check(lifted, lottery, {sweff::kDefaultEnumerationCap,
                                                         mode_from(strict)});
  if (format != "json") {
    std::cout << "assignments:\n";
    for (std::size_t k = 0; k < assignments.size(); ++k) {
      std::cout << "  " << lifted.name(k) << ": " << sweff::describe(assignments[k], instance)
                << '\n';
    }
  }
  print_report(report, format);
  if (instance.has_strict_preferences() && format != "json") {
    std::cout << "strict preferences: SW-efficient iff degenerate on a Pareto optimal "
                 "assignment: "
              << (sweff::corollary_check(instance, lottery) == report.efficiency.sw_efficient
                      ? "confirmed"
                      : "violated")
              << '\n';
  }
  return kExitOk;
}

int verify_command(const sweff::VerifyOptions& options) {
  const auto summary = sweff::run_verify(options);
  std::cout << summary.to_text();
  return summary.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficiency analysis for lotteries over social-choice alternatives"};
  app.require_subcommand(1);

  std::string profile_path;
  std::string lottery_text;
  std::string format = "text";
  std::size_t cap = sweff::kDefaultEnumerationCap;
  bool strict = false;

  auto* check = app.add_subcommand("check", "Decide every efficiency notion for a lottery");
  check->add_option("profile", profile_path, "Profile file")->required();
  check->add_option("--lottery", lottery_text, "Lottery, e.g. \"a:1/2 b:1/2\"")->required();
  check->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--enumeration-cap", cap, "Largest m for support enumeration");
  check->add_flag("--strict-consistency", strict,
                  "Require strictly monotone utilities when checking utility witnesses");

  std::string alternative;
  auto* witness = app.add_subcommand("witness", "Utilities separating a Pareto optimal alternative");
  witness->add_option("profile", profile_path, "Profile file")->required();
  witness->add_option("alternative", alternative, "Alternative name")->required();
  witness->add_flag("--strict-consistency", strict, "Check the witness under strict consistency");

  std::string q_text;
  std::string p_text;
  auto* dominates = app.add_subcommand("dominates", "Compare two lotteries");
  dominates->add_option("profile", profile_path, "Profile file")->required();
  dominates->add_option("--q", q_text, "Candidate dominating lottery")->required();
  dominates->add_option("--p", p_text, "Candidate dominated lottery")->required();

  sweff::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Exhaustive property sweep");
  verify->add_option("--n", verify_options.max_agents, "Agents (assignment size with --assignment)");
  verify->add_option("--m", verify_options.max_alternatives, "Alternatives");
  verify->add_option("--grid", verify_options.grid_levels, "Utility grid levels");
  verify->add_option("--seed", verify_options.seed, "Seed for random test lotteries");
  verify->add_option("--lotteries", verify_options.lotteries_per_support,
                     "Random lotteries per support");
  verify->add_flag("--assignment", verify_options.assignment, "Sweep strict assignment instances");
  verify->add_flag("--cumulative", verify_options.cumulative, "Sweep every smaller cell too");

  auto* assignment = app.add_subcommand("assignment", "Random assignment instances");
  assignment->require_subcommand(1);
  std::string instance_path;
  auto* assignment_check =
      assignment->add_subcommand("check", "Analyze a lottery over discrete assignments");
  assignment_check->add_option("instance", instance_path, "Instance file")->required();
  assignment_check->add_option("--lottery", lottery_text, "Lottery over M1, M2, ...")->required();
  assignment_check->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  assignment_check->add_flag("--strict-consistency", strict,
                             "Require strictly monotone utilities when checking witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return check_command(profile_path, lottery_text, format, cap, strict);
    if (*witness) return run_witness(profile_path, alternative, strict);
    if (*dominates) return run_dominates(profile_path, q_text, p_text);
    if (*verify) return verify_command(verify_options);
    if (*assignment_check) {
      return run_assignment_check(instance_path, lottery_text, format, strict);
    }
  } catch (const sweff::InternalDisagreement& e) {
    std::cerr << "internal disagreement (please report): " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
