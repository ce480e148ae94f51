#include "splitcut/split_lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace splitcut {

namespace {

std::vector<Rational> concat(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_objective(const CornerRelaxation& rel, const std::vector<Rational>& objective) {
  require_same_dim(rel.num_columns(), objective.size(), "objective over (s, y)");
}

}  // namespace

SolutionPoint point_from_columns(const CornerRelaxation& rel, const std::vector<Rational>& columns) {
  require_same_dim(rel.num_columns(), columns.size(), "column values");
  const auto mid = columns.begin() + static_cast<std::ptrdiff_t>(rel.num_continuous());
  return make_point(rel, std::vector<Rational>(columns.begin(), mid), std::vector<Rational>(mid, columns.end()));
}

LpOutcome optimize_on_side(const CornerRelaxation& rel, const Disjunction& d, DisjunctionSide side,
                           const std::vector<Rational>& objective) {
  validate(rel, d);
  require_objective(rel, objective);
  const Rational af = dot(d.alpha, rel.f());
  const auto [lo, hi] = floor_ceil(af);

  std::vector<Rational> row;
  for (const auto& r : rel.continuous_columns()) row.push_back(dot(d.alpha, r));
  for (std::size_t k = 0; k < rel.num_integer(); ++k) {
    row.push_back(dot(d.alpha, rel.integer_columns()[k]) + Rational(d.beta[k]));
  }
  LpProblem lp(rel.num_columns());
  lp.set_objective(objective);
  if (side == DisjunctionSide::lower) {
    lp.add_row(std::move(row), RowSense::less_equal, Rational(lo) - af);
  } else {
    lp.add_row(std::move(row), RowSense::greater_equal, Rational(hi) - af);
  }
  return solve(lp);
}

LpOutcome optimize_with_cuts(const CornerRelaxation& rel, const std::vector<CutCoefficients>& cuts,
                             const std::vector<Rational>& objective) {
  require_objective(rel, objective);
  LpProblem lp(rel.num_columns());
  lp.set_objective(objective);
  for (const auto& c : cuts) {
    require_total(rel, c);
    lp.add_row(concat(c.psi(), c.pi()), RowSense::greater_equal, Rational(1));
  }
  return solve(lp);
}

SplitCutVerdict verify_split_cut(const CornerRelaxation& rel, const CutCoefficients& cut, const Disjunction& d) {
  require_total(rel, cut);
  const std::vector<Rational> objective = concat(cut.psi(), cut.pi());
  SplitCutVerdict v;
  v.lower = optimize_on_side(rel, d, DisjunctionSide::lower, objective);
  v.upper = optimize_on_side(rel, d, DisjunctionSide::upper, objective);
  v.valid = true;
  for (const LpOutcome* side : {&v.lower, &v.upper}) {
    // The objective is non-negative, so a side is either infeasible or optimal.
    if (side->status == LpStatus::optimal && side->optimum < Rational(1)) {
      v.valid = false;
      if (!v.witness) {
        v.witness = point_from_columns(rel, side->primal);
        v.witness_value = side->optimum;
      }
    }
  }
  return v;
}

CutCoefficients deepest_disjunctive_cut(const CornerRelaxation& rel, const Disjunction& d) {
  validate(rel, d);
  const SplitSet split = lifted_split(d.alpha, rel.f());
  std::vector<Rational> psi;
  std::vector<Rational> pi;
  for (const auto& r : rel.continuous_columns()) psi.push_back(gauge(split, append(r, Rational(0))));
  for (std::size_t k = 0; k < rel.num_integer(); ++k) {
    pi.push_back(gauge(split, append(rel.integer_columns()[k], Rational(d.beta[k]))));
  }
  return {std::move(psi), std::move(pi)};
}

std::optional<SolutionPoint> containment_counterexample(const CornerRelaxation& rel, const CutCoefficients& a,
                                                        const CutCoefficients& b) {
  require_total(rel, a);
  require_total(rel, b);
  const LpOutcome sol = optimize_with_cuts(rel, {a}, concat(b.psi(), b.pi()));
  if (sol.status == LpStatus::optimal && sol.optimum < Rational(1)) return point_from_columns(rel, sol.primal);
  return std::nullopt;
}

Integer alpha_period(const CornerRelaxation& rel) {
  if (rel.dim() != 1) throw InputError("alpha period is defined for one-row relaxations only");
  Integer p = rel.f()[0].den();
  for (const auto& q : rel.integer_columns()) p = lcm(p, q[0].den());
  return p;
}

std::vector<IntVector> closure_alphas(const CornerRelaxation& rel, const ClosureOptions& options) {
  std::vector<IntVector> out;
  auto keep = [&](IntVector alpha) {
    if (!dot(alpha, rel.f()).is_integer()) out.push_back(std::move(alpha));
  };
  if (options.strategy == ClosureStrategy::period) {
    if (rel.dim() != 1) throw InputError("period strategy requires a one-row relaxation");
    const Integer p = alpha_period(rel);
    const Integer last = rel.pure_integer() ? Integer(p / 2) : p;
    for (Integer a = 1; a <= last; ++a) keep(IntVector{a});
    return out;
  }
  if (options.box_radius < 1) throw InputError("box radius must be >= 1");
  const long radius = options.box_radius;
  const std::size_t n = rel.dim();
  std::vector<long> a(n, -radius);
  for (;;) {
    const auto first = std::find_if(a.begin(), a.end(), [](long v) { return v != 0; });
    if (first != a.end() && *first > 0) {
      IntVector alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = a[i];
      keep(std::move(alpha));
    }
    std::size_t i = n;
    while (i > 0 && a[i - 1] == radius) a[--i] = -radius;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

ClosureResult split_closure_optimize(const CornerRelaxation& rel, const std::vector<Rational>& objective,
                                     const ClosureOptions& options) {
  require_objective(rel, objective);
  ClosureResult res;
  res.exact = options.strategy == ClosureStrategy::period;
  if (res.exact) res.period = alpha_period(rel);
  res.alphas = closure_alphas(rel, options);
  for (const auto& alpha : res.alphas) res.cuts.push_back(alpha_cut_coefficients(rel, alpha));

  // Identical rows are solved once.
  std::vector<std::size_t> distinct;
  {
    std::set<std::vector<Rational>, std::less<>> seen;
    for (std::size_t i = 0; i < res.cuts.size(); ++i) {
      std::vector<Rational> row = concat(res.cuts[i].psi(), res.cuts[i].pi());
      if (seen.insert(row).second) distinct.push_back(i);
    }
  }
  for (std::size_t i : distinct) {
    const auto& c = res.cuts[i];
    const bool all_zero = std::all_of(c.psi().begin(), c.psi().end(), [](const Rational& v) { return v.is_zero(); }) &&
                          std::all_of(c.pi().begin(), c.pi().end(), [](const Rational& v) { return v.is_zero(); });
    if (all_zero) {
      res.status = LpStatus::infeasible;
      return res;
    }
  }

  constexpr std::size_t kRowsPerRound = 8;
  std::vector<CutCoefficients> active;
  std::vector<bool> in_lp(res.cuts.size(), false);
  for (;;) {
    ++res.lp_rounds;
    const LpOutcome sol = optimize_with_cuts(rel, active, objective);
    if (sol.status != LpStatus::optimal) {
      // Cut rows have non-negative coefficients, so an improving ray of the
      // partial LP is a ray of the full one, and the full LP is feasible.
      res.status = sol.status;
      return res;
    }
    const SolutionPoint point = point_from_columns(rel, sol.primal);
    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t i : distinct) {
      if (in_lp[i]) continue;
      const Rational v = res.cuts[i].value(point);
      if (v < Rational(1)) violated.emplace_back(v, i);
    }
    if (violated.empty()) {
      res.status = LpStatus::optimal;
      res.value = sol.optimum;
      res.witness = point;
      return res;
    }
    std::stable_sort(violated.begin(), violated.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < violated.size() && k < kRowsPerRound; ++k) {
      in_lp[violated[k].second] = true;
      active.push_back(res.cuts[violated[k].second]);
    }
  }
}

}  // namespace splitcut
