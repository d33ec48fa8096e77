#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sweff {

struct VerifyOptions {
  std::size_t max_agents = 2;
  std::size_t max_alternatives = 2;
  std::size_t lotteries_per_support = 2;
  std::size_t grid_levels = 3;
  /// Grid-based properties only run on profiles with at most this many agents.
  std::size_t grid_max_agents = 2;
  std::size_t mesh_denominator = 4;
  /// The mesh falsifier only runs when m is at most this.
  std::size_t mesh_max_alternatives = 3;
  std::uint64_t seed = 1;
  /// Sweep strict assignment instances of size max_agents instead of profiles.
  bool assignment = false;
  /// Sweep every cell (n, m) up to the bounds instead of only the largest.
  bool cumulative = false;
};

struct PropertyTally {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::size_t profiles = 0;
  std::size_t lotteries = 0;
  std::size_t programs_solved = 0;
  std::vector<PropertyTally> properties;

  bool passed() const;
  const PropertyTally* find(const std::string& name) const;
  std::string to_text() const;
};

/// Exhaustive property sweep over all weak-order profiles (or all strict
/// assignment instances) within the bounds.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace sweff
