#include "sweff/profile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "sweff/errors.hpp"

namespace sweff {

// ---------------------------------------------------------------------------
// WeakOrder

WeakOrder::WeakOrder(std::vector<std::vector<AlternativeId>> tiers, std::size_t m)
    : tiers_(std::move(tiers)), rank_(m, 0) {
  std::vector<bool> seen(m, false);
  std::size_t covered = 0;
  for (std::size_t t = 0; t < tiers_.size(); ++t) {
    if (tiers_[t].empty()) throw ValidationError("weak order has an empty tier");
    for (AlternativeId x : tiers_[t]) {
      if (x >= m) throw ValidationError("alternative index out of range in weak order");
      if (seen[x]) throw ValidationError("alternative appears twice in weak order");
      seen[x] = true;
      ++covered;
      rank_[x] = tiers_.size() - 1 - t;
    }
    std::sort(tiers_[t].begin(), tiers_[t].end());
  }
  if (covered != m) throw ValidationError("weak order does not cover every alternative");
}

WeakOrder WeakOrder::strict(const std::vector<AlternativeId>& ranking) {
  std::vector<std::vector<AlternativeId>> tiers;
  tiers.reserve(ranking.size());
  for (AlternativeId x : ranking) tiers.push_back({x});
  return WeakOrder(std::move(tiers), ranking.size());
}

// ---------------------------------------------------------------------------
// PreferenceProfile

std::vector<std::string> default_alternative_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(a < 26 ? std::string(1, static_cast<char>('a' + a)) : "a" + std::to_string(a));
  }
  return names;
}

PreferenceProfile::PreferenceProfile(std::vector<WeakOrder> orders,
                                     std::vector<std::string> alternative_names,
                                     std::vector<std::string> agent_labels)
    : orders_(std::move(orders)), names_(std::move(alternative_names)),
      agent_labels_(std::move(agent_labels)) {
  if (orders_.empty()) throw ValidationError("profile needs at least one agent");
  const std::size_t m = orders_.front().alternatives();
  if (m == 0) throw ValidationError("profile needs at least one alternative");
  for (const auto& order : orders_) {
    if (order.alternatives() != m) {
      throw ValidationError("agents order different numbers of alternatives");
    }
  }
  if (names_.empty()) names_ = default_alternative_names(m);
  if (names_.size() != m) throw ValidationError("alternative name count does not match m");
  if (agent_labels_.empty()) {
    for (std::size_t i = 0; i < orders_.size(); ++i) agent_labels_.push_back(std::to_string(i + 1));
  }
  if (agent_labels_.size() != orders_.size()) {
    throw ValidationError("agent label count does not match n");
  }
}

std::optional<AlternativeId> PreferenceProfile::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<AlternativeId>(it - names_.begin());
}

std::string PreferenceProfile::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out << agent_labels_[i] << ':';
    const auto& tiers = orders_[i].tiers();
    for (std::size_t t = 0; t < tiers.size(); ++t) {
      if (t > 0) out << " >";
      for (std::size_t k = 0; k < tiers[t].size(); ++k) {
        if (k > 0) out << " ~";
        out << ' ' << names_[tiers[t][k]];
      }
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Lottery

Lottery::Lottery(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("lottery over an empty alternative set");
  Rational total = 0;
  for (std::size_t a = 0; a < probs_.size(); ++a) {
    probs_[a].canonicalize();
    if (sgn(probs_[a]) < 0) {
      throw ValidationError("negative probability " + to_string(probs_[a]));
    }
    if (sgn(probs_[a]) > 0) support_.push_back(a);
    total += probs_[a];
  }
  if (total != 1) throw ValidationError("probabilities sum to " + to_string(total));
}

Lottery Lottery::degenerate(std::size_t m, AlternativeId a) {
  std::vector<Rational> probs(m, 0);
  probs.at(a) = 1;
  return Lottery(std::move(probs));
}

Lottery Lottery::uniform(std::size_t m, const AlternativeSet& support) {
  if (support.empty()) throw ValidationError("uniform lottery over an empty support");
  std::vector<Rational> probs(m, 0);
  const Rational share(1, support.size());
  for (AlternativeId a : support) probs.at(a) = share;
  return Lottery(std::move(probs));
}

// ---------------------------------------------------------------------------
// UtilityProfile

UtilityProfile::UtilityProfile(std::vector<std::vector<Rational>> values)
    : values_(std::move(values)) {
  for (auto& row : values_) {
    if (row.size() != values_.front().size()) {
      throw ValidationError("utility rows have different lengths");
    }
    for (auto& x : row) x.canonicalize();
  }
}

UtilityProfile::UtilityProfile(std::size_t agents, std::size_t alternatives)
    : values_(agents, std::vector<Rational>(alternatives, 0)) {}

Rational UtilityProfile::social_utility(AlternativeId a) const {
  Rational total = 0;
  for (const auto& row : values_) total += row.at(a);
  return total;
}

std::string_view to_string(ConsistencyMode mode) {
  return mode == ConsistencyMode::Weak ? "weak" : "strict";
}

void require_compatible(const Lottery& p, const PreferenceProfile& profile) {
  if (p.alternatives() != profile.alternatives()) {
    throw ValidationError("lottery has " + std::to_string(p.alternatives()) +
                          " alternatives, profile has " +
                          std::to_string(profile.alternatives()));
  }
}

void require_compatible(const UtilityProfile& u, const PreferenceProfile& profile) {
  if (u.agents() != profile.agents() || u.alternatives() != profile.alternatives()) {
    throw ValidationError("utility profile dimensions do not match the preference profile");
  }
}

bool is_consistent(const UtilityProfile& u, const PreferenceProfile& profile,
                   ConsistencyMode mode) {
  require_compatible(u, profile);
  const std::size_t m = profile.alternatives();
  for (AgentId i = 0; i < profile.agents(); ++i) {
    const auto& order = profile.order(i);
    for (AlternativeId a = 0; a < m; ++a) {
      for (AlternativeId b = 0; b < m; ++b) {
        if (order.weakly_prefers(a, b) && u(i, a) < u(i, b)) return false;
        if (mode == ConsistencyMode::Strict && order.prefers(a, b) && u(i, a) <= u(i, b)) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '>' && c != '~' && c != ':' &&
         c != '#';
}

struct ParsedLine {
  std::string label;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> tiers;  // (name, column)
  std::size_t line = 0;
};

ParsedLine parse_order_line(std::string_view text, std::size_t line_no) {
  ParsedLine parsed;
  parsed.line = line_no;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected '<agent>:' before the order", line_no, 1);
  }
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  const std::size_t label_start = pos;
  std::size_t label_end = colon;
  while (label_end > label_start && std::isspace(static_cast<unsigned char>(text[label_end - 1]))) {
    --label_end;
  }
  if (label_end == label_start) throw ParseError("empty agent label", line_no, colon + 1);
  parsed.label = std::string(text.substr(label_start, label_end - label_start));

  pos = colon + 1;
  parsed.tiers.emplace_back();
  bool expect_name = true;
  while (true) {
    skip_space();
    if (pos >= text.size() || text[pos] == '#') break;
    const char c = text[pos];
    if (expect_name) {
      if (!is_name_char(c)) {
        throw ParseError(std::string("expected alternative name, found '") + c + "'", line_no,
                         pos + 1);
      }
      const std::size_t start = pos;
      while (pos < text.size() && is_name_char(text[pos])) ++pos;
      parsed.tiers.back().emplace_back(std::string(text.substr(start, pos - start)), start + 1);
      expect_name = false;
    } else {
      if (c == '>') {
        parsed.tiers.emplace_back();
      } else if (c != '~') {
        throw ParseError(std::string("expected '>' or '~', found '") + c + "'", line_no, pos + 1);
      }
      ++pos;
      expect_name = true;
    }
  }
  if (expect_name) {
    throw ParseError(parsed.tiers.size() == 1 && parsed.tiers.front().empty()
                         ? "empty order"
                         : "order ends with a separator",
                     line_no, pos + 1);
  }
  return parsed;
}

}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
  std::vector<ParsedLine> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      lines.push_back(parse_order_line(line, line_no));
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("profile has no agents", line_no, 1);

  std::vector<std::string> names;
  std::map<std::string, AlternativeId, std::less<>> index;
  for (const auto& tier : lines.front().tiers) {
    for (const auto& [name, column] : tier) {
      if (index.contains(name)) {
        throw ParseError("duplicate alternative '" + name + "' in agent " + lines.front().label +
                             "'s order",
                         lines.front().line, column);
      }
      index.emplace(name, names.size());
      names.push_back(name);
    }
  }

  std::vector<WeakOrder> orders;
  std::vector<std::string> labels;
  for (const auto& parsed : lines) {
    std::vector<std::vector<AlternativeId>> tiers;
    std::vector<bool> seen(names.size(), false);
    for (const auto& tier : parsed.tiers) {
      auto& ids = tiers.emplace_back();
      for (const auto& [name, column] : tier) {
        const auto it = index.find(name);
        if (it == index.end()) {
          throw ParseError("unknown alternative '" + name + "'", parsed.line, column);
        }
        if (seen[it->second]) {
          throw ParseError("duplicate alternative '" + name + "' in agent " + parsed.label +
                               "'s order",
                           parsed.line, column);
        }
        seen[it->second] = true;
        ids.push_back(it->second);
      }
    }
    for (AlternativeId a = 0; a < names.size(); ++a) {
      if (!seen[a]) {
        throw ParseError("agent " + parsed.label + " order missing alternative " + names[a],
                         parsed.line, 1);
      }
    }
    orders.emplace_back(std::move(tiers), names.size());
    labels.push_back(parsed.label);
  }
  return PreferenceProfile(std::move(orders), std::move(names), std::move(labels));
}

Lottery parse_lottery(std::string_view text, const PreferenceProfile& profile) {
  std::vector<Rational> probs(profile.alternatives(), 0);
  std::vector<bool> given(profile.alternatives(), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const auto token = text.substr(start, pos - start);
    const auto colon = token.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw ParseError("expected 'name:probability', found '" + std::string(token) + "'", 1,
                       start + 1);
    }
    const auto name = token.substr(0, colon);
    const auto id = profile.find(name);
    if (!id) throw ParseError("unknown alternative '" + std::string(name) + "'", 1, start + 1);
    if (given[*id]) {
      throw ParseError("alternative '" + std::string(name) + "' given twice", 1, start + 1);
    }
    Rational value;
    try {
      value = parse_rational(token.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1, start + colon + 2);
    }
    if (sgn(value) < 0) {
      throw ValidationError("negative probability for " + std::string(name) + ": " +
                            to_string(value));
    }
    probs[*id] = value;
    given[*id] = true;
  }
  return Lottery(std::move(probs));
}

std::string format_lottery(const Lottery& p, const PreferenceProfile& profile) {
  require_compatible(p, profile);
  std::string out;
  for (AlternativeId a : p.support()) {
    if (!out.empty()) out += ' ';
    out += profile.name(a) + ':' + to_string(p[a]);
  }
  return out;
}

}  // namespace sweff
