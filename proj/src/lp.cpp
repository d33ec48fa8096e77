#include "sweff/lp.hpp"

#include <limits>
#include <stdexcept>

#include "sweff/errors.hpp"

namespace sweff::lp {

// ---------------------------------------------------------------------------
// LinearProgram

LinearProgram::LinearProgram(std::size_t variables)
    : objective_(variables, 0), bounds_(variables) {
  if (variables == 0) throw std::invalid_argument("linear program needs at least one variable");
}

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != variables()) {
    throw std::invalid_argument("objective length does not match variable count");
  }
  objective_ = std::move(coefficients);
  for (auto& c : objective_) c.canonicalize();
}

void LinearProgram::set_objective(std::size_t var, Rational coefficient) {
  coefficient.canonicalize();
  objective_.at(var) = std::move(coefficient);
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                   Rational rhs) {
  if (coefficients.size() != variables()) {
    throw std::invalid_argument("constraint length does not match variable count");
  }
  for (auto& c : coefficients) c.canonicalize();
  rhs.canonicalize();
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_lower(std::size_t var, Rational value) {
  value.canonicalize();
  bounds_.at(var).lower = std::move(value);
}

void LinearProgram::set_upper(std::size_t var, Rational value) {
  value.canonicalize();
  bounds_.at(var).upper = std::move(value);
}

void LinearProgram::set_bounds(std::size_t var, Rational lower, Rational upper) {
  set_lower(var, std::move(lower));
  set_upper(var, std::move(upper));
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

bool verify_feasible(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.variables()) {
    throw std::invalid_argument("point length does not match variable count");
  }
  for (const auto& row : lp.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (sgn(row.coefficients[j]) != 0) lhs += row.coefficients[j] * point[j];
    }
    switch (row.relation) {
      case Relation::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  for (std::size_t j = 0; j < point.size(); ++j) {
    const auto& b = lp.bounds()[j];
    if (b.lower && point[j] < *b.lower) return false;
    if (b.upper && point[j] > *b.upper) return false;
  }
  return true;
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.variables()) {
    throw std::invalid_argument("point length does not match variable count");
  }
  Rational value = 0;
  for (std::size_t j = 0; j < point.size(); ++j) value += lp.objective()[j] * point[j];
  return value;
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// x_original = offset + sum(sign * y_column), y >= 0.
struct VariableMap {
  Rational offset = 0;
  std::size_t plus = kNone;   // column with sign +1
  std::size_t minus = kNone;  // column with sign -1
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : a_(rows, std::vector<Rational>(columns, 0)), rhs_(rows, 0), basis_(rows, kNone),
        reduced_(columns, 0), blocked_(columns, false) {}

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::vector<bool> blocked_;
  std::size_t pivots_ = 0;

  std::size_t rows() const { return a_.size(); }
  std::size_t columns() const { return reduced_.size(); }

  void price(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j < columns(); ++j) reduced_[j] = cost[j];
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < columns(); ++j) {
        if (sgn(a_[r][j]) != 0) reduced_[j] -= cb * a_[r][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    auto& row = a_[r];
    if (row[e] != 1) {
      const Rational inv = 1 / row[e];
      for (auto& x : row) {
        if (sgn(x) != 0) x *= inv;
      }
      rhs_[r] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < columns(); ++j) {
      if (sgn(row[j]) != 0) nz.push_back(j);
    }
    Rational factor;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][e]) == 0) continue;
      factor = a_[i][e];
      for (std::size_t j : nz) a_[i][j] -= factor * row[j];
      rhs_[i] -= factor * rhs_[r];
    }
    if (sgn(reduced_[e]) != 0) {
      factor = reduced_[e];
      for (std::size_t j : nz) reduced_[j] -= factor * row[j];
    }
    basis_[r] = e;
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable
  // among tied ratios. Returns false when unbounded.
  bool optimize() {
    while (true) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < columns(); ++j) {
        if (!blocked_[j] && sgn(reduced_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      Rational ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(a_[r][entering]) <= 0) continue;
        ratio = rhs_[r] / a_[r][entering];
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

}  // namespace

Outcome solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables();

  // Shift and split variables so that every structural column is >= 0.
  std::vector<VariableMap> vars(n);
  std::size_t structural = 0;
  struct UpperRow {
    std::size_t column;
    Rational limit;
  };
  std::vector<UpperRow> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bounds()[j];
    if (b.lower) {
      vars[j].offset = *b.lower;
      vars[j].plus = structural++;
      if (b.upper) upper_rows.push_back({vars[j].plus, *b.upper - *b.lower});
    } else if (b.upper) {
      vars[j].offset = *b.upper;
      vars[j].minus = structural++;
    } else {
      vars[j].plus = structural++;
      vars[j].minus = structural++;
    }
  }
  for (const auto& u : upper_rows) {
    if (sgn(u.limit) < 0) return Outcome{Status::Infeasible, 0, {}, 0};
  }

  struct Row {
    std::vector<Rational> coefficients;  // over structural columns
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints().size() + upper_rows.size());
  for (const auto& c : lp.constraints()) {
    Row row{std::vector<Rational>(structural, 0), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& coef = c.coefficients[j];
      if (sgn(coef) == 0) continue;
      row.rhs -= coef * vars[j].offset;
      if (vars[j].plus != kNone) row.coefficients[vars[j].plus] += coef;
      if (vars[j].minus != kNone) row.coefficients[vars[j].minus] -= coef;
    }
    rows.push_back(std::move(row));
  }
  for (const auto& u : upper_rows) {
    Row row{std::vector<Rational>(structural, 0), Relation::LessEqual, u.limit};
    row.coefficients[u.column] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (sgn(row.rhs) < 0) {
      for (auto& x : row.coefficients) x = -x;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
  }

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::Equal) ++slack_count;
    if (row.relation != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t columns = first_artificial + artificial_count;

  Tableau t(rows.size(), columns);
  std::size_t next_slack = structural;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < structural; ++j) t.a_[r][j] = rows[r].coefficients[j];
    t.rhs_[r] = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::LessEqual:
        t.a_[r][next_slack] = 1;
        t.basis_[r] = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.a_[r][next_slack++] = -1;
        t.a_[r][next_artificial] = 1;
        t.basis_[r] = next_artificial++;
        break;
      case Relation::Equal:
        t.a_[r][next_artificial] = 1;
        t.basis_[r] = next_artificial++;
        break;
    }
  }

  if (artificial_count > 0) {
    std::vector<Rational> phase_one(columns, 0);
    for (std::size_t j = first_artificial; j < columns; ++j) phase_one[j] = -1;
    t.price(phase_one);
    t.optimize();  // bounded above by 0
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis_[r] >= first_artificial && sgn(t.rhs_[r]) != 0) {
        return Outcome{Status::Infeasible, 0, {}, t.pivots_};
      }
    }
    // Drive zero-valued artificials out of the basis; rows with no
    // structural or slack entry are redundant.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis_[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t replacement = kNone;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(t.a_[r][j]) != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement == kNone) {
        t.drop_row(r);
      } else {
        t.pivot(r, replacement);
        ++r;
      }
    }
    for (std::size_t j = first_artificial; j < columns; ++j) t.blocked_[j] = true;
  }

  std::vector<Rational> cost(columns, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = lp.objective()[j];
    if (vars[j].plus != kNone) cost[vars[j].plus] += c;
    if (vars[j].minus != kNone) cost[vars[j].minus] -= c;
  }
  t.price(cost);
  if (!t.optimize()) return Outcome{Status::Unbounded, 0, {}, t.pivots_};

  std::vector<Rational> column_value(columns, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) column_value[t.basis_[r]] = t.rhs_[r];

  Outcome outcome;
  outcome.status = Status::Optimal;
  outcome.pivots = t.pivots_;
  outcome.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = vars[j].offset;
    if (vars[j].plus != kNone) x += column_value[vars[j].plus];
    if (vars[j].minus != kNone) x -= column_value[vars[j].minus];
    outcome.point[j] = std::move(x);
  }
  outcome.value = evaluate_objective(lp, outcome.point);

  if (!verify_feasible(lp, outcome.point)) {
    throw InternalDisagreement("simplex returned a point that violates the program");
  }
  Rational tableau_value = 0;
  for (std::size_t j = 0; j < columns; ++j) tableau_value += cost[j] * column_value[j];
  Rational offset_value = 0;
  for (std::size_t j = 0; j < n; ++j) offset_value += lp.objective()[j] * vars[j].offset;
  if (tableau_value + offset_value != outcome.value) {
    throw InternalDisagreement("simplex objective does not match re-substitution");
  }
  return outcome;
}

}  // namespace sweff::lp
