#include "splitcut/corner.hpp"

#include <algorithm>
#include <set>

#include "splitcut/lp.hpp"

namespace splitcut {

namespace {

void reject_duplicates(const std::vector<RationalVector>& cols, const char* which) {
  std::set<RationalVector> seen;
  for (const auto& c : cols) {
    if (!seen.insert(c).second) {
      throw InputError(std::string("duplicate ") + which + " column " + str(c, ","));
    }
  }
}

void check_sizes(const CornerRelaxation& rel, const SolutionPoint& p) {
  require_same_dim(rel.dim(), p.x.dim(), "solution x");
  require_same_dim(rel.num_continuous(), p.s.size(), "solution s");
  require_same_dim(rel.num_integer(), p.y.size(), "solution y");
}

bool nonnegative(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& a) { return a.sign() >= 0; });
}

}  // namespace

CornerRelaxation::CornerRelaxation(RationalVector f, std::vector<RationalVector> continuous,
                                   std::vector<RationalVector> integer)
    : f_(std::move(f)), r_(std::move(continuous)), q_(std::move(integer)) {
  if (f_.empty()) throw InputError("corner relaxation needs dimension >= 1");
  for (const auto& fi : f_) {
    if (fi < Rational(0) || fi > Rational(1)) throw InputError("f must lie in [0,1]^n, got " + str(f_, ","));
  }
  if (is_integral(f_)) throw InputError("f must not be integral, got " + str(f_, ","));
  for (const auto& r : r_) require_same_dim(f_.dim(), r.dim(), "continuous column");
  for (const auto& q : q_) require_same_dim(f_.dim(), q.dim(), "integer column");
  reject_duplicates(r_, "continuous");
  reject_duplicates(q_, "integer");
}

std::optional<std::size_t> CornerRelaxation::find_continuous(const RationalVector& r) const {
  const auto it = std::find(r_.begin(), r_.end(), r);
  if (it == r_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - r_.begin());
}

std::optional<std::size_t> CornerRelaxation::find_integer(const RationalVector& q) const {
  const auto it = std::find(q_.begin(), q_.end(), q);
  if (it == q_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - q_.begin());
}

RationalVector derived_x(const CornerRelaxation& rel, const std::vector<Rational>& s,
                         const std::vector<Rational>& y) {
  require_same_dim(rel.num_continuous(), s.size(), "solution s");
  require_same_dim(rel.num_integer(), y.size(), "solution y");
  std::vector<mpq_class> acc(rel.dim());
  for (std::size_t i = 0; i < rel.dim(); ++i) acc[i] = rel.f()[i].mpq();
  auto add = [&](const RationalVector& col, const Rational& w) {
    if (w.is_zero()) return;
    for (std::size_t i = 0; i < rel.dim(); ++i) acc[i] += col[i].mpq() * w.mpq();
  };
  for (std::size_t k = 0; k < s.size(); ++k) add(rel.continuous_columns()[k], s[k]);
  for (std::size_t k = 0; k < y.size(); ++k) add(rel.integer_columns()[k], y[k]);
  RationalVector x(rel.dim());
  for (std::size_t i = 0; i < rel.dim(); ++i) x[i] = Rational(acc[i]);
  return x;
}

SolutionPoint make_point(const CornerRelaxation& rel, std::vector<Rational> s, std::vector<Rational> y) {
  RationalVector x = derived_x(rel, s, y);
  return {std::move(x), std::move(s), std::move(y)};
}

bool in_lp_relaxation(const CornerRelaxation& rel, const SolutionPoint& p) {
  if (p.x.dim() != rel.dim() || p.s.size() != rel.num_continuous() || p.y.size() != rel.num_integer()) {
    return false;
  }
  return nonnegative(p.s) && nonnegative(p.y) && derived_x(rel, p.s, p.y) == p.x;
}

bool in_continuous_relaxation(const CornerRelaxation& rel, const SolutionPoint& p) {
  return in_lp_relaxation(rel, p) && is_integral(p.x);
}

bool in_relaxation(const CornerRelaxation& rel, const SolutionPoint& p) {
  return in_continuous_relaxation(rel, p) &&
         std::all_of(p.y.begin(), p.y.end(), [](const Rational& v) { return v.is_integer(); });
}

CutCoefficients::CutCoefficients(std::vector<Rational> psi, std::vector<Rational> pi)
    : psi_(std::move(psi)), pi_(std::move(pi)) {
  if (!nonnegative(psi_) || !nonnegative(pi_)) throw InputError("cut coefficients must be non-negative");
}

Rational CutCoefficients::value(const SolutionPoint& p) const {
  require_same_dim(psi_.size(), p.s.size(), "cut psi table");
  require_same_dim(pi_.size(), p.y.size(), "cut pi table");
  mpq_class acc;
  for (std::size_t k = 0; k < psi_.size(); ++k) acc += psi_[k].mpq() * p.s[k].mpq();
  for (std::size_t k = 0; k < pi_.size(); ++k) acc += pi_[k].mpq() * p.y[k].mpq();
  return Rational(acc);
}

void require_total(const CornerRelaxation& rel, const CutCoefficients& cut) {
  require_same_dim(rel.num_continuous(), cut.psi().size(), "cut psi table");
  require_same_dim(rel.num_integer(), cut.pi().size(), "cut pi table");
}

CutCoefficients alpha_cut_coefficients(const CornerRelaxation& rel, const IntVector& alpha) {
  const AlphaCut cut(alpha, rel.f());
  std::vector<Rational> psi;
  std::vector<Rational> pi;
  for (const auto& r : rel.continuous_columns()) psi.push_back(alpha_psi(cut, r));
  for (const auto& q : rel.integer_columns()) pi.push_back(alpha_pi(cut, q));
  return {std::move(psi), std::move(pi)};
}

CutCoefficients split_gauge_coefficients(const CornerRelaxation& rel, const IntVector& alpha) {
  const SplitSet split(alpha, rel.f());
  std::vector<Rational> psi;
  std::vector<Rational> pi;
  for (const auto& r : rel.continuous_columns()) psi.push_back(gauge(split, r));
  for (const auto& q : rel.integer_columns()) pi.push_back(gauge(split, q));
  return {std::move(psi), std::move(pi)};
}

Disjunction Disjunction::plain(IntVector alpha, std::size_t num_integer) {
  return {std::move(alpha), std::vector<Integer>(num_integer, Integer(0))};
}

void validate(const CornerRelaxation& rel, const Disjunction& d) {
  require_same_dim(rel.dim(), d.alpha.dim(), "disjunction alpha");
  require_same_dim(rel.num_integer(), d.beta.size(), "disjunction beta");
  if (dot(d.alpha, rel.f()).is_integer()) {
    throw DegenerateError("disjunction normal has integral alpha . f");
  }
}

bool in_disjunction(const CornerRelaxation& rel, const Disjunction& d, const SolutionPoint& p) {
  validate(rel, d);
  check_sizes(rel, p);
  Rational lhs = dot(d.alpha, p.x);
  for (std::size_t k = 0; k < d.beta.size(); ++k) lhs += Rational(d.beta[k]) * p.y[k];
  const auto [lo, hi] = floor_ceil(dot(d.alpha, rel.f()));
  return lhs <= Rational(lo) || lhs >= Rational(hi);
}

void for_each_bounded_composition(std::size_t k, int cap,
                                  const std::function<bool(const std::vector<Integer>&)>& visit) {
  std::vector<Integer> y(k, Integer(0));
  if (k == 0) {
    visit(y);
    return;
  }
  // Recursively fill coordinates left to right with a fixed remaining total.
  std::function<bool(std::size_t, long)> fill = [&](std::size_t i, long remaining) -> bool {
    if (i + 1 == k) {
      y[i] = remaining;
      return visit(y);
    }
    for (long v = 0; v <= remaining; ++v) {
      y[i] = v;
      if (!fill(i + 1, remaining - v)) return false;
    }
    return true;
  };
  for (long total = 0; total <= cap; ++total) {
    if (!fill(0, total)) return;
  }
}

ValidityOutcome check_validity_enumerated(const CornerRelaxation& rel, const CutCoefficients& cut, int cap) {
  require_total(rel, cut);
  if (cap < 1) throw InputError("enumeration cap must be >= 1");
  ValidityOutcome out;
  const std::size_t nq = rel.num_integer();
  const std::size_t nr = rel.num_continuous();

  auto record = [&](SolutionPoint p) {
    out.status = ValidityStatus::violated;
    out.witness_value = cut.value(p);
    out.witness = std::move(p);
    return false;
  };

  if (rel.pure_integer()) {
    for_each_bounded_composition(nq, cap, [&](const std::vector<Integer>& yi) {
      std::vector<Rational> y(yi.begin(), yi.end());
      SolutionPoint p = make_point(rel, {}, std::move(y));
      if (!is_integral(p.x)) return true;
      if (cut.value(p) < Rational(1)) return record(std::move(p));
      return true;
    });
    if (out.status == ValidityStatus::violated) return out;
    if (nq == 0) {
      out.status = ValidityStatus::valid;
      out.note = "relaxation has no columns; C is empty";
      return out;
    }
    const Rational min_pi = *std::min_element(cut.pi().begin(), cut.pi().end());
    if (min_pi * Rational(cap + 1) >= Rational(1)) {
      out.status = ValidityStatus::valid;
      out.note = "points with sum y > cap have cut value >= min pi * (cap + 1) >= 1";
    } else {
      out.status = ValidityStatus::inconclusive;
      out.note = "no violation with sum y <= cap, but min pi * (cap + 1) < 1";
    }
    return out;
  }

  // Mixed: for each integral y and integral x in the box, minimize psi . s over
  // R s = x - f - Q y, s >= 0.
  const std::size_t n = rel.dim();
  for_each_bounded_composition(nq, cap, [&](const std::vector<Integer>& yi) {
    std::vector<Rational> y(yi.begin(), yi.end());
    const RationalVector base = derived_x(rel, std::vector<Rational>(nr), y);
    Rational y_part;
    for (std::size_t k = 0; k < nq; ++k) y_part += cut.pi()[k] * y[k];
    if (y_part >= Rational(1)) return true;
    std::vector<long> x(n, -cap);
    for (;;) {
      LpProblem lp(nr);
      lp.set_objective(cut.psi());
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(nr);
        for (std::size_t k = 0; k < nr; ++k) row[k] = rel.continuous_columns()[k][i];
        lp.add_row(std::move(row), RowSense::equal, Rational(x[i]) - base[i]);
      }
      const LpOutcome sol = solve(lp);
      if (sol.status == LpStatus::optimal && sol.optimum + y_part < Rational(1)) {
        return record(make_point(rel, sol.primal, y));
      }
      std::size_t i = 0;
      while (i < n && x[i] == cap) x[i++] = -cap;
      if (i == n) break;
      ++x[i];
    }
    return true;
  });
  if (out.status != ValidityStatus::violated) {
    out.status = ValidityStatus::inconclusive;
    out.note = "mixed relaxation: no violation with sum y <= cap and |x_i| <= cap";
  }
  return out;
}

bool dominates(const CutCoefficients& a, const CutCoefficients& b) {
  require_same_dim(a.psi().size(), b.psi().size(), "dominance psi tables");
  require_same_dim(a.pi().size(), b.pi().size(), "dominance pi tables");
  for (std::size_t k = 0; k < a.psi().size(); ++k) {
    if (a.psi()[k] > b.psi()[k]) return false;
  }
  for (std::size_t k = 0; k < a.pi().size(); ++k) {
    if (a.pi()[k] > b.pi()[k]) return false;
  }
  return true;
}

LiftedRelaxation lift_program(const CornerRelaxation& rel, std::vector<Integer> ell) {
  require_same_dim(rel.num_integer(), ell.size(), "lifting map");
  std::vector<RationalVector> r0;
  for (const auto& r : rel.continuous_columns()) r0.push_back(append(r, Rational(0)));
  std::vector<RationalVector> ql;
  for (std::size_t k = 0; k < rel.num_integer(); ++k) {
    ql.push_back(append(rel.integer_columns()[k], Rational(ell[k])));
  }
  CornerRelaxation lifted(append(rel.f(), Rational(0)), std::move(r0), std::move(ql));
  return {rel, std::move(ell), std::move(lifted)};
}

SolutionPoint gamma_point(const LiftedRelaxation& lr, const SolutionPoint& p) {
  check_sizes(lr.base, p);
  Rational last;
  for (std::size_t k = 0; k < lr.ell.size(); ++k) last += Rational(lr.ell[k]) * p.y[k];
  return {append(p.x, last), p.s, p.y};
}

SolutionPoint gamma_point_inverse(const LiftedRelaxation& lr, const SolutionPoint& p) {
  check_sizes(lr.lifted, p);
  RationalVector x(lr.base.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] = p.x[i];
  return {std::move(x), p.s, p.y};
}

CutCoefficients gamma_cut(const LiftedRelaxation& lr, const CutCoefficients& cut) {
  require_total(lr.base, cut);
  // Columns of the lifted program are stored in the same order as the base
  // columns, so the re-indexing is positional.
  return cut;
}

CutCoefficients gamma_cut_inverse(const LiftedRelaxation& lr, const CutCoefficients& cut) {
  require_total(lr.lifted, cut);
  return cut;
}

std::optional<HullCertificate> hull_certificate(const CornerRelaxation& rel, const IntVector& alpha,
                                                const SolutionPoint& p) {
  const SplitSet split(alpha, rel.f());
  if (!in_lp_relaxation(rel, p)) throw PreconditionError("hull certificate needs a point of C_LP");
  const CutCoefficients cut = split_gauge_coefficients(rel, alpha);
  const Rational nu = cut.value(p);
  if (nu < Rational(1)) return std::nullopt;

  const std::size_t nr = rel.num_continuous();
  const std::size_t nq = rel.num_integer();

  // Zero-gauge columns lie in the recession hyperplane and ride along in an
  // offset shared by every term.
  std::vector<Rational> offset_s(nr);
  std::vector<Rational> offset_y(nq);
  for (std::size_t k = 0; k < nr; ++k) {
    if (cut.psi()[k].is_zero()) offset_s[k] = p.s[k];
  }
  for (std::size_t k = 0; k < nq; ++k) {
    if (cut.pi()[k].is_zero()) offset_y[k] = p.y[k];
  }

  HullCertificate cert;
  cert.nu = nu;
  for (std::size_t k = 0; k < nr; ++k) {
    const Rational& g = cut.psi()[k];
    if (g.is_zero() || p.s[k].is_zero()) continue;
    std::vector<Rational> s = offset_s;
    s[k] = nu / g;
    cert.terms.push_back({p.s[k] * g / nu, make_point(rel, std::move(s), offset_y)});
  }
  for (std::size_t k = 0; k < nq; ++k) {
    const Rational& g = cut.pi()[k];
    if (g.is_zero() || p.y[k].is_zero()) continue;
    std::vector<Rational> y = offset_y;
    y[k] = nu / g;
    cert.terms.push_back({p.y[k] * g / nu, make_point(rel, offset_s, std::move(y))});
  }
  return cert;
}

bool verify_hull_certificate(const CornerRelaxation& rel, const IntVector& alpha, const SolutionPoint& p,
                             const HullCertificate& cert) {
  const SplitSet split(alpha, rel.f());
  if (cert.terms.empty()) return false;
  Rational total;
  std::vector<Rational> s(rel.num_continuous());
  std::vector<Rational> y(rel.num_integer());
  RationalVector x(rel.dim());
  for (const auto& term : cert.terms) {
    if (term.weight.sign() <= 0) return false;
    if (!in_lp_relaxation(rel, term.point)) return false;
    if (contains_in_interior(split, term.point.x)) return false;
    total += term.weight;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += term.weight * term.point.s[k];
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += term.weight * term.point.y[k];
    x = x + term.weight * term.point.x;
  }
  return total == Rational(1) && x == p.x && s == p.s && y == p.y;
}

ExtendedCutFunction::ExtendedCutFunction(CornerRelaxation rel, CutCoefficients table, IntVector fallback_alpha)
    : rel_(std::move(rel)), table_(std::move(table)), fallback_(std::move(fallback_alpha), rel_.f()) {
  require_total(rel_, table_);
}

Rational ExtendedCutFunction::psi(const RationalVector& r) const {
  if (const auto k = rel_.find_continuous(r)) return table_.psi()[*k];
  return alpha_psi(fallback_, r);
}

Rational ExtendedCutFunction::pi(const RationalVector& q) const {
  if (const auto k = rel_.find_integer(q)) return table_.pi()[*k];
  return alpha_pi(fallback_, q);
}

ExtendedCutFunction extend_split_cut(const CornerRelaxation& rel, const CutCoefficients& cut,
                                     const IntVector& alpha_bar) {
  require_total(rel, cut);
  const CutCoefficients base = alpha_cut_coefficients(rel, alpha_bar);
  if (!dominates(base, cut)) {
    throw PreconditionError("the alpha-cut for alpha_bar = " + str(alpha_bar, ",") +
                            " does not dominate the given cut");
  }
  return ExtendedCutFunction(rel, cut, alpha_bar);
}

}  // namespace splitcut
