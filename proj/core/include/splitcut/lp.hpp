#pragma once

// Exact rational linear programming: min c x subject to linear rows and x >= 0.
//
// Dense two-phase tableau simplex with Bland's rule. Every outcome carries a
// certificate that is re-verified exactly before solve() returns:
//   optimal     primal point and row duals with equal objective values
//   infeasible  Farkas multipliers y with y^T A <= 0 and y^T b > 0
//   unbounded   feasible point and a ray d >= 0 with c d < 0

#include <cstddef>
#include <string>
#include <vector>

#include "splitcut/rational.hpp"

namespace splitcut {

enum class RowSense { equal, greater_equal, less_equal };
enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus s);

struct LpRow {
  std::vector<Rational> coeffs;
  RowSense sense = RowSense::equal;
  Rational rhs;
};

class LpProblem {
 public:
  explicit LpProblem(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<LpRow>& rows() const { return rows_; }

  void set_objective(std::vector<Rational> c);
  void add_row(std::vector<Rational> coeffs, RowSense sense, Rational rhs);

 private:
  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<LpRow> rows_;
};

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational optimum;
  std::vector<Rational> primal;  // optimal or unbounded: a feasible point
  std::vector<Rational> duals;   // optimal: one multiplier per row
  std::vector<Rational> farkas;  // infeasible: one multiplier per row
  std::vector<Rational> ray;     // unbounded: improving direction
  std::size_t pivots = 0;
};

// Throws InputError on malformed problems; std::logic_error if a certificate
// fails verification (an internal bug, never expected).
LpOutcome solve(const LpProblem& problem);

// Exact certificate check, independent of how the outcome was produced.
bool verify(const LpProblem& problem, const LpOutcome& outcome);

}  // namespace splitcut
