#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsaudit/rational.hpp"

namespace tsaudit {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x subject to the rows and per-variable bounds.
/// A missing bound means the variable is unbounded in that direction.
struct LinearProgram {
  RationalVector objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  std::size_t num_vars() const { return objective.size(); }

  /// Appends a variable (extending every existing row with a zero) and
  /// returns its index.
  std::size_t add_variable(Rational cost = 0, std::optional<Rational> lo = Rational(0),
                           std::optional<Rational> hi = std::nullopt);
  void add_constraint(RationalVector coeffs, Relation relation, Rational rhs);
};

/// Throws StructureError when row or bound vectors disagree with the
/// variable count.
void check_well_formed(const LinearProgram& lp);

// Dual certificate of optimality. With A the row matrix:
//   objective = A^T row_duals + lower_duals + upper_duals
//   value     = row_duals . b + lower_duals . l + upper_duals . u
// row_duals[r] >= 0 for <= rows, <= 0 for >= rows, free for = rows;
// lower_duals <= 0 and only on variables with a lower bound;
// upper_duals >= 0 and only on variables with an upper bound.
struct Optimal {
  Rational value;
  RationalVector x;
  RationalVector row_duals;
  RationalVector lower_duals;
  RationalVector upper_duals;
};

// Farkas certificate: A^T y + lambda + mu = 0 and
// y . b + lambda . l + mu . u > 0, with y[r] <= 0 on <= rows, >= 0 on >= rows,
// lambda >= 0 (lower-bounded variables only), mu <= 0 (upper-bounded only).
// Summing the implied inequalities over any feasible x gives 0 > 0.
struct Infeasible {
  RationalVector y;
  RationalVector lambda;
  RationalVector mu;
};

// A feasible point and a recession direction along which the objective grows.
struct Unbounded {
  RationalVector point;
  RationalVector ray;
};

struct LpOutcome {
  std::variant<Optimal, Infeasible, Unbounded> result;

  bool optimal() const { return std::holds_alternative<Optimal>(result); }
  bool infeasible() const { return std::holds_alternative<Infeasible>(result); }
  bool unbounded() const { return std::holds_alternative<Unbounded>(result); }
  const Optimal& as_optimal() const { return std::get<Optimal>(result); }
  const Infeasible& as_infeasible() const { return std::get<Infeasible>(result); }
  const Unbounded& as_unbounded() const { return std::get<Unbounded>(result); }
  std::string status_name() const;
};

struct SolveOptions {
  std::size_t max_iterations = 200000;
};

/// Bounded-variable two-phase primal simplex over exact rationals with
/// Bland's rule. Deterministic: identical input gives identical output.
LpOutcome solve(const LinearProgram& lp, const SolveOptions& options = {});

/// Exact check of whichever certificate the outcome carries.
bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

/// Does x satisfy every row and bound of lp exactly?
bool is_feasible_point(const LinearProgram& lp, const RationalVector& x);

}  // namespace tsaudit
