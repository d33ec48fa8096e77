#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sweff/lp.hpp"
#include "sweff/profile.hpp"

namespace sweff {

/// u[agent][better] - u[agent][worse] >= 0, one for every better ≿_agent worse.
struct ConsistencyHalfspace {
  AgentId agent;
  AlternativeId better;
  AlternativeId worse;
};

/// sum_i u[i][top] - sum_i u[i][other] >= 0.
struct WelfareHalfspace {
  AlternativeId top;
  AlternativeId other;
};

/// Consistent utility profiles under which every alternative of `support`
/// has maximal social utility. A polyhedral cone: all halfspaces are
/// homogeneous.
class WelfareCone {
 public:
  WelfareCone(AlternativeSet support, const PreferenceProfile& profile);

  const AlternativeSet& support() const noexcept { return support_; }
  const PreferenceProfile& profile() const noexcept { return profile_; }
  const std::vector<ConsistencyHalfspace>& consistency() const noexcept { return consistency_; }
  const std::vector<WelfareHalfspace>& maximization() const noexcept { return maximization_; }

  bool in_support(AlternativeId a) const;

  /// Evaluates every halfspace exactly.
  bool contains(const UtilityProfile& u) const;

 private:
  AlternativeSet support_;
  PreferenceProfile profile_;
  std::vector<ConsistencyHalfspace> consistency_;
  std::vector<WelfareHalfspace> maximization_;
};

/// Throws PreconditionError on an empty or out-of-range support.
WelfareCone build_cone(const AlternativeSet& support, const PreferenceProfile& profile);

/// sum_i u[i][h.other] - sum_i u[i][h.top]; positive means u violates h.
Rational violation(const WelfareHalfspace& h, const UtilityProfile& u);

/// How the cone is written as a linear program.
enum class ConeEncoding {
  /// One variable per (agent, tier): indifference forces equal utilities and
  /// adjacent-tier monotonicity implies the remaining consistency rows.
  TierLevels,
  /// One variable per u[i][x] and one row per halfspace, verbatim.
  Full,
};

/// maximize violation(h, u) over the cone intersected with the box [0,1].
lp::LinearProgram violation_program(const WelfareCone& cone, const WelfareHalfspace& h,
                                    ConeEncoding encoding);

struct ViolationBound {
  Rational value;         ///< maximal violation over cone ∩ [0,1]^{n·m}
  UtilityProfile point;   ///< a maximizer, expressed as a utility profile
};

/// Solves `violation_program` and certifies the maximizer by re-checking
/// cone membership and its violation exactly.
ViolationBound max_violation(const WelfareCone& cone, const WelfareHalfspace& h,
                             ConeEncoding encoding = ConeEncoding::TierLevels);

/// A utility profile in `inner` that violates a maximization halfspace of
/// `outer`, if any exists.
std::optional<UtilityProfile> find_escape(const WelfareCone& inner, const WelfareCone& outer,
                                          ConeEncoding encoding = ConeEncoding::TierLevels);

/// Every u in inner lies in outer.
bool cone_contained(const WelfareCone& inner, const WelfareCone& outer,
                    ConeEncoding encoding = ConeEncoding::TierLevels);

/// Whenever p maximizes welfare so does q, and for some consistent u q
/// maximizes welfare while p does not.
bool sw_dominates(const Lottery& q, const Lottery& p, const PreferenceProfile& profile);

using SupportMask = std::uint64_t;

SupportMask to_mask(const AlternativeSet& support);
AlternativeSet from_mask(SupportMask mask, std::size_t m);

/// All nonempty supports of {0..m-1}: increasing size, then lexicographic.
std::vector<SupportMask> supports_in_scan_order(std::size_t m);

struct EnumerationResult {
  bool efficient = true;
  std::optional<AlternativeSet> dominating_support;
  /// In the dominating support's cone but outside the lottery's.
  std::optional<UtilityProfile> strict_witness;
};

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// Decides SW-dominance between supports of one profile, memoizing every
/// violation program it solves. Not thread safe; use one per thread.
class DominanceOracle {
 public:
  explicit DominanceOracle(PreferenceProfile profile,
                           ConeEncoding encoding = ConeEncoding::TierLevels,
                           std::size_t cap = kDefaultEnumerationCap);

  const PreferenceProfile& profile() const noexcept { return profile_; }

  const WelfareCone& cone(SupportMask support);
  std::optional<UtilityProfile> escape(SupportMask inner, SupportMask outer);
  bool contained(SupportMask inner, SupportMask outer) { return !escape(inner, outer); }
  bool dominates(SupportMask q, SupportMask p);

  /// Scans `supports_in_scan_order` and stops at the first support whose
  /// lotteries SW-dominate those with support p.
  EnumerationResult efficient(SupportMask p);

  std::size_t programs_solved() const noexcept { return programs_solved_; }

 private:
  std::optional<UtilityProfile> halfspace_escape(SupportMask inner, const WelfareHalfspace& h);

  PreferenceProfile profile_;
  ConeEncoding encoding_;
  std::size_t m_;
  std::vector<SupportMask> scan_order_;
  std::vector<std::optional<WelfareCone>> cones_;
  std::unordered_map<std::uint64_t, std::optional<UtilityProfile>> memo_;
  std::unordered_map<SupportMask, EnumerationResult> verdicts_;
  std::size_t programs_solved_ = 0;
};

/// Exhaustive search over dominating supports. Throws CapExceededError when
/// the profile has more than `cap` alternatives.
EnumerationResult sw_efficient_by_enumeration(const Lottery& p, const PreferenceProfile& profile,
                                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace sweff
