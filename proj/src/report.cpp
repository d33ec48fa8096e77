#include "sweff/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "sweff/errors.hpp"

namespace sweff {
namespace {

using nlohmann::json;

Rational number_from_json(const json& j) {
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("report holds a malformed number: ") + e.what());
  }
}

json lottery_json(const Lottery& p, const PreferenceProfile& profile) {
  json out = json::object();
  for (AlternativeId a : p.support()) out[profile.name(a)] = to_string(p[a]);
  return out;
}

Lottery lottery_from_json(const json& j, const PreferenceProfile& profile) {
  std::vector<Rational> probs(profile.alternatives(), 0);
  for (const auto& [name, value] : j.items()) {
    const auto id = profile.find(name);
    if (!id) throw ValidationError("report names unknown alternative '" + name + "'");
    probs[*id] = number_from_json(value);
  }
  return Lottery(std::move(probs));
}

json utilities_json(const UtilityProfile& u) {
  json rows = json::array();
  for (const auto& row : u.rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

UtilityProfile utilities_from_json(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    auto& row = rows.emplace_back();
    for (const auto& x : r) row.push_back(number_from_json(x));
  }
  return UtilityProfile(std::move(rows));
}

template <typename T, typename F>
json optional_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : json(nullptr);
}

}  // namespace

AnalysisReport run_check(const PreferenceProfile& profile, const Lottery& lottery,
                         const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto efficiency = analyze_efficiency(lottery, profile, options);
  const auto problems = audit_report(efficiency, lottery, profile, options.consistency);
  if (!problems.empty()) {
    throw InternalDisagreement("report failed its own audit: " + problems.front());
  }
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  return AnalysisReport{profile,
                        lottery,
                        std::move(efficiency),
                        options.consistency,
                        options.enumeration_cap,
                        elapsed.count()};
}

std::string to_json(const AnalysisReport& report) {
  const auto& profile = report.profile;
  const auto& e = report.efficiency;
  json out;
  out["schema"] = kReportSchema;
  out["instance"] = {{"profile", profile.to_text()},
                     {"lottery", lottery_json(report.lottery, profile)}};
  out["conventions"] = {{"consistency", std::string(to_string(report.consistency))},
                        {"utility_profiles", "consistent"},
                        {"enumeration_cap", report.enumeration_cap}};
  out["efficiency"] = {
      {"ex_post", e.ex_post},
      {"interesting", e.interesting},
      {"degenerate", e.degenerate},
      {"sd_efficient", e.sd_efficient},
      {"sw_efficient", e.sw_efficient},
      {"sw_efficient_by_enumeration",
       optional_json(e.sw_efficient_by_enumeration, [](bool b) { return json(b); })},
  };
  out["witnesses"] = {
      {"sd_dominating_lottery",
       optional_json(e.sd_witness, [&](const Lottery& q) { return lottery_json(q, profile); })},
      {"sw_dominating_support", optional_json(e.sw_dominating_support,
                                              [&](const AlternativeSet& s) {
                                                json names = json::array();
                                                for (AlternativeId a : s) {
                                                  names.push_back(profile.name(a));
                                                }
                                                return names;
                                              })},
      {"sw_strict_utilities", optional_json(e.sw_strict_witness, utilities_json)},
      {"separated_alternative",
       optional_json(e.separated_alternative,
                     [&](AlternativeId a) { return json(profile.name(a)); })},
      {"separating_utilities", optional_json(e.separating_utilities, utilities_json)},
  };
  out["timing_ms"] = report.elapsed_ms;
  return out.dump(2);
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json in = json::parse(text);
    if (in.at("schema").get<std::string>() != kReportSchema) {
      throw ValidationError("unsupported report schema");
    }
    auto profile = parse_profile(in.at("instance").at("profile").get<std::string>());
    auto lottery = lottery_from_json(in.at("instance").at("lottery"), profile);

    const auto& conv = in.at("conventions");
    const auto mode_name = conv.at("consistency").get<std::string>();
    if (mode_name != "weak" && mode_name != "strict") {
      throw ValidationError("unknown consistency convention '" + mode_name + "'");
    }

    EfficiencyReport e;
    const auto& eff = in.at("efficiency");
    e.ex_post = eff.at("ex_post").get<bool>();
    e.interesting = eff.at("interesting").get<bool>();
    e.degenerate = eff.at("degenerate").get<bool>();
    e.sd_efficient = eff.at("sd_efficient").get<bool>();
    e.sw_efficient = eff.at("sw_efficient").get<bool>();
    if (!eff.at("sw_efficient_by_enumeration").is_null()) {
      e.sw_efficient_by_enumeration = eff.at("sw_efficient_by_enumeration").get<bool>();
    }

    const auto& w = in.at("witnesses");
    if (!w.at("sd_dominating_lottery").is_null()) {
      e.sd_witness = lottery_from_json(w.at("sd_dominating_lottery"), profile);
    }
    if (!w.at("sw_dominating_support").is_null()) {
      AlternativeSet support;
      for (const auto& name : w.at("sw_dominating_support")) {
        const auto id = profile.find(name.get<std::string>());
        if (!id) throw ValidationError("report names unknown alternative");
        support.push_back(*id);
      }
      e.sw_dominating_support = std::move(support);
    }
    if (!w.at("sw_strict_utilities").is_null()) {
      e.sw_strict_witness = utilities_from_json(w.at("sw_strict_utilities"));
    }
    if (!w.at("separated_alternative").is_null()) {
      const auto id = profile.find(w.at("separated_alternative").get<std::string>());
      if (!id) throw ValidationError("report names unknown alternative");
      e.separated_alternative = *id;
    }
    if (!w.at("separating_utilities").is_null()) {
      e.separating_utilities = utilities_from_json(w.at("separating_utilities"));
    }

    return AnalysisReport{std::move(profile),
                          std::move(lottery),
                          std::move(e),
                          mode_name == "weak" ? ConsistencyMode::Weak : ConsistencyMode::Strict,
                          conv.at("enumeration_cap").get<std::size_t>(),
                          in.at("timing_ms").get<double>()};
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("malformed report: ") + ex.what());
  }
}

std::string format_utilities(const UtilityProfile& u, const PreferenceProfile& profile) {
  std::ostringstream out;
  for (AgentId i = 0; i < u.agents(); ++i) {
    out << "  agent " << profile.agent_label(i) << ':';
    for (AlternativeId a = 0; a < u.alternatives(); ++a) {
      out << ' ' << profile.name(a) << '=' << to_string(u(i, a));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const AnalysisReport& report) {
  const auto& profile = report.profile;
  const auto& e = report.efficiency;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "lottery:        " << format_lottery(report.lottery, profile) << '\n';
  out << "ex post:        " << yes_no(e.ex_post) << '\n';
  out << "interesting:    " << yes_no(e.interesting) << '\n';
  out << "degenerate:     " << yes_no(e.degenerate) << '\n';
  out << "SD-efficient:   " << yes_no(e.sd_efficient) << '\n';
  if (e.sd_witness) {
    out << "  dominated by: " << format_lottery(*e.sd_witness, profile) << '\n';
  }
  out << "SW-efficient:   " << yes_no(e.sw_efficient) << '\n';
  if (e.sw_efficient_by_enumeration) {
    out << "  enumeration:  " << yes_no(*e.sw_efficient_by_enumeration) << '\n';
  } else {
    out << "  enumeration:  skipped (m > " << report.enumeration_cap << ")\n";
  }
  if (e.sw_dominating_support) {
    out << "  dominating support: {";
    for (std::size_t k = 0; k < e.sw_dominating_support->size(); ++k) {
      out << (k ? ", " : "") << profile.name((*e.sw_dominating_support)[k]);
    }
    out << "}\n";
  }
  if (e.sw_strict_witness) {
    out << "  utilities favouring the dominating support:\n"
        << format_utilities(*e.sw_strict_witness, profile);
  }
  if (e.separating_utilities) {
    out << "separating utilities for " << profile.name(*e.separated_alternative) << ":\n"
        << format_utilities(*e.separating_utilities, profile);
  }
  out << "consistency:    " << to_string(report.consistency) << '\n';
  return out.str();
}

}  // namespace sweff
