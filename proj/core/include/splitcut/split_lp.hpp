#pragma once

// LP-backed operations over C_LP. All LPs here live in the non-negative (s, y)
// variables, column order R then Q; x = f + R s + Q y is eliminated.

#include <optional>
#include <vector>

#include "splitcut/corner.hpp"
#include "splitcut/lp.hpp"

namespace splitcut {

enum class DisjunctionSide { lower, upper };

// min objective . (s, y) over C_LP intersected with one closed side of d.
LpOutcome optimize_on_side(const CornerRelaxation& rel, const Disjunction& d, DisjunctionSide side,
                           const std::vector<Rational>& objective);

// min objective . (s, y) over C_LP intersected with every cut (each read as >= 1).
LpOutcome optimize_with_cuts(const CornerRelaxation& rel, const std::vector<CutCoefficients>& cuts,
                             const std::vector<Rational>& objective);

SolutionPoint point_from_columns(const CornerRelaxation& rel, const std::vector<Rational>& columns);

struct SplitCutVerdict {
  bool valid = false;
  LpOutcome lower;
  LpOutcome upper;
  std::optional<SolutionPoint> witness;  // a violating point on one side
  Rational witness_value;
};

// Minimizes the cut over both sides of the disjunction; valid iff each side is
// infeasible or has minimum >= 1.
SplitCutVerdict verify_split_cut(const CornerRelaxation& rel, const CutCoefficients& cut, const Disjunction& d);

// psi(r) = gauge(S, (r, 0)), pi(q) = gauge(S, (q, beta(q))) for the lifted split
// S = S((alpha, 1), (f, 0)): the strongest cut valid on C_LP intersected with d.
CutCoefficients deepest_disjunctive_cut(const CornerRelaxation& rel, const Disjunction& d);

// A point of C_LP satisfying `a` but violating `b`, if one exists.
std::optional<SolutionPoint> containment_counterexample(const CornerRelaxation& rel, const CutCoefficients& a,
                                                        const CutCoefficients& b);

enum class ClosureStrategy { period, box };

struct ClosureOptions {
  ClosureStrategy strategy = ClosureStrategy::period;
  int box_radius = 3;  // alpha in [-A, A]^n for the box strategy
};

struct ClosureResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::optional<SolutionPoint> witness;
  bool exact = false;           // period strategy; box results are relaxations
  Integer period;               // alpha period (period strategy only)
  std::vector<IntVector> alphas;  // one sign representative per +-pair
  std::vector<CutCoefficients> cuts;
  std::size_t lp_rounds = 0;
};

// Least common multiple of the denominators of f and of every integer column,
// for one-row relaxations. alpha-cut pi tables repeat with this period.
Integer alpha_period(const CornerRelaxation& rel);

// The alpha set enumerated by a closure strategy. Period (n = 1 only): every
// alpha in Z_f from 1 to P for mixed data, 1 to P/2 for pure-integer data;
// larger alphas only produce dominated cuts. Box: alpha in [-A, A]^n ∩ Z_f with
// first non-zero coordinate positive.
std::vector<IntVector> closure_alphas(const CornerRelaxation& rel, const ClosureOptions& options);

// Minimizes over C_LP intersected with all alpha-cuts of the selected set,
// adding violated cuts to the LP in rounds until the optimum satisfies all.
ClosureResult split_closure_optimize(const CornerRelaxation& rel, const std::vector<Rational>& objective,
                                     const ClosureOptions& options);

}  // namespace splitcut
