#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sweff/rational.hpp"

namespace sweff {

/// Dense index of an alternative, in [0, m).
using AlternativeId = std::size_t;
using AgentId = std::size_t;

/// Sorted list of distinct alternatives.
using AlternativeSet = std::vector<AlternativeId>;

/// A complete weak order stored as indifference tiers, best tier first.
///
/// Completeness and transitivity hold by construction: every alternative
/// sits in exactly one tier and comparisons reduce to comparing tier ranks.
class WeakOrder {
 public:
  /// Validates that `tiers` partition {0, ..., m-1} into nonempty tiers.
  WeakOrder(std::vector<std::vector<AlternativeId>> tiers, std::size_t m);

  /// Strict linear order, best first.
  static WeakOrder strict(const std::vector<AlternativeId>& ranking);

  std::size_t alternatives() const noexcept { return rank_.size(); }
  std::size_t tier_count() const noexcept { return tiers_.size(); }
  const std::vector<std::vector<AlternativeId>>& tiers() const noexcept { return tiers_; }

  /// Tiers counted from the bottom: 0 is the worst tier.
  std::size_t rank(AlternativeId x) const { return rank_.at(x); }

  bool weakly_prefers(AlternativeId x, AlternativeId y) const { return rank(x) >= rank(y); }
  bool prefers(AlternativeId x, AlternativeId y) const { return rank(x) > rank(y); }
  bool indifferent(AlternativeId x, AlternativeId y) const { return rank(x) == rank(y); }

  bool is_strict() const noexcept { return tiers_.size() == rank_.size(); }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::vector<AlternativeId>> tiers_;
  std::vector<std::size_t> rank_;
};

class PreferenceProfile {
 public:
  /// Requires at least one agent and one alternative, and every order over
  /// the same m alternatives. Missing names default to a, b, c, ...
  explicit PreferenceProfile(std::vector<WeakOrder> orders,
                             std::vector<std::string> alternative_names = {},
                             std::vector<std::string> agent_labels = {});

  std::size_t agents() const noexcept { return orders_.size(); }
  std::size_t alternatives() const noexcept { return names_.size(); }

  const WeakOrder& order(AgentId i) const { return orders_.at(i); }
  const std::vector<WeakOrder>& orders() const noexcept { return orders_; }

  const std::string& name(AlternativeId a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& agent_label(AgentId i) const { return agent_labels_.at(i); }

  std::optional<AlternativeId> find(std::string_view name) const;

  /// Profile text in the same grammar `parse_profile` accepts.
  std::string to_text() const;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

 private:
  std::vector<WeakOrder> orders_;
  std::vector<std::string> names_;
  std::vector<std::string> agent_labels_;
};

/// "a", ..., "z", then "a26", "a27", ...
std::vector<std::string> default_alternative_names(std::size_t m);

/// Probability distribution over the alternatives of a profile.
class Lottery {
 public:
  /// Throws ValidationError on a negative entry or a sum different from 1.
  explicit Lottery(std::vector<Rational> probs);

  static Lottery degenerate(std::size_t m, AlternativeId a);
  static Lottery uniform(std::size_t m, const AlternativeSet& support);

  std::size_t alternatives() const noexcept { return probs_.size(); }
  const Rational& operator[](AlternativeId a) const { return probs_.at(a); }
  const std::vector<Rational>& probabilities() const noexcept { return probs_; }

  /// Alternatives with positive probability, ascending.
  const AlternativeSet& support() const noexcept { return support_; }

  friend bool operator==(const Lottery& l, const Lottery& r) { return l.probs_ == r.probs_; }

 private:
  std::vector<Rational> probs_;
  AlternativeSet support_;
};

/// u[i][a]: agent i's cardinal utility for alternative a.
class UtilityProfile {
 public:
  explicit UtilityProfile(std::vector<std::vector<Rational>> values);
  UtilityProfile(std::size_t agents, std::size_t alternatives);

  std::size_t agents() const noexcept { return values_.size(); }
  std::size_t alternatives() const noexcept { return values_.empty() ? 0 : values_.front().size(); }

  const Rational& operator()(AgentId i, AlternativeId a) const { return values_.at(i).at(a); }
  Rational& operator()(AgentId i, AlternativeId a) { return values_.at(i).at(a); }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return values_; }

  /// Sum over agents of u[i][a].
  Rational social_utility(AlternativeId a) const;

  friend bool operator==(const UtilityProfile&, const UtilityProfile&) = default;

 private:
  std::vector<std::vector<Rational>> values_;
};

enum class ConsistencyMode {
  /// a ≿_i b implies u_i(a) >= u_i(b).
  Weak,
  /// Additionally a ≻_i b implies u_i(a) > u_i(b).
  Strict,
};

std::string_view to_string(ConsistencyMode mode);

/// Throws ValidationError on dimension mismatch.
bool is_consistent(const UtilityProfile& u, const PreferenceProfile& profile,
                   ConsistencyMode mode = ConsistencyMode::Weak);

/// One agent per line: `<label>: x > y ~ z ...`. Blank lines and `#`
/// comments are skipped. Alternative indices follow first appearance.
PreferenceProfile parse_profile(std::string_view text);

/// Whitespace separated `name:p` tokens; omitted alternatives get 0.
Lottery parse_lottery(std::string_view text, const PreferenceProfile& profile);

/// `name:p` tokens for the support, in index order.
std::string format_lottery(const Lottery& p, const PreferenceProfile& profile);

/// Throws ValidationError unless p is over the profile's alternatives.
void require_compatible(const Lottery& p, const PreferenceProfile& profile);
void require_compatible(const UtilityProfile& u, const PreferenceProfile& profile);

}  // namespace sweff
