#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sweff/rational.hpp"

namespace sweff::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

struct Bounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// maximize objective·x subject to linear rows and per-variable bounds.
/// Variables are free unless bounded.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variables() const noexcept { return objective_.size(); }

  void set_objective(std::vector<Rational> coefficients);
  void set_objective(std::size_t var, Rational coefficient);
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  void set_lower(std::size_t var, Rational value);
  void set_upper(std::size_t var, Rational value);
  void set_bounds(std::size_t var, Rational lower, Rational upper);

  const std::vector<Rational>& objective() const noexcept { return objective_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  const std::vector<Bounds>& bounds() const noexcept { return bounds_; }

 private:
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
  std::vector<Bounds> bounds_;
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string_view to_string(Status status);

struct Outcome {
  Status status = Status::Infeasible;
  Rational value;                ///< meaningful when Optimal
  std::vector<Rational> point;   ///< meaningful when Optimal
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
/// An Optimal outcome is re-substituted before returning; a failed
/// re-substitution throws InternalDisagreement.
Outcome solve(const LinearProgram& lp);

/// Exact check of every row and bound. Throws std::invalid_argument on a
/// length mismatch.
bool verify_feasible(const LinearProgram& lp, const std::vector<Rational>& point);

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& point);

}  // namespace sweff::lp
