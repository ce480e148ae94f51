#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace splitcut::testing {

Rational gauge_by_definition(const IntVector& alpha, const RationalVector& f, const RationalVector& r) {
  Rational af;
  Rational ar;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    af += Rational(alpha[i]) * f[i];
    ar += Rational(alpha[i]) * r[i];
  }
  const Rational lo = Rational(floor(af)) - af;  // lower wall, < 0
  const Rational hi = Rational(ceil(af)) - af;   // upper wall, > 0
  if (ar.is_zero()) return Rational(0);
  // lambda * ar hits the wall it travels toward at lambda*; the gauge is 1 / lambda*.
  const Rational lambda = ar > 0 ? hi / ar : lo / ar;
  return Rational(1) / lambda;
}

Rational gauge_by_definition(const SplitSet& s, const RationalVector& r) {
  return gauge_by_definition(s.alpha(), s.f(), r);
}

Rational psi_reference(const Rational& f, const Rational& r) {
  const Rational fl = f - Rational(floor(f));
  const Rational up = r / (Rational(1) - fl);
  const Rational down = -r / fl;
  return up > down ? up : down;
}

Rational pi_window(const Rational& f, const Rational& q, int window) {
  Rational best = psi_reference(f, q);
  for (int w = -window; w <= window; ++w) best = std::min(best, psi_reference(f, q + Rational(w)));
  return best;
}

Rational lifting_window(const SplitSet& s, const RationalVector& q, int window) {
  Rational best = gauge_by_definition(s, append(q, Rational(0)));
  for (int w = -window; w <= window; ++w) best = std::min(best, gauge_by_definition(s, append(q, Rational(w))));
  return best;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational m = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= m * a[col][k];
      b[row] -= m * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

bool feasible(const LpProblem& p, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : p.rows()) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
    if (row.sense == RowSense::equal && lhs != row.rhs) return false;
    if (row.sense == RowSense::greater_equal && lhs < row.rhs) return false;
    if (row.sense == RowSense::less_equal && lhs > row.rhs) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> vertex_minimum(const LpProblem& p) {
  // Candidate tight sets: choose n constraints among rows and x_j >= 0, with
  // every equality row forced tight. Vertices of {x >= 0, rows} are exactly the
  // feasible unique solutions of such systems.
  const std::size_t n = p.num_vars();
  std::vector<std::size_t> eq;
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    (p.rows()[i].sense == RowSense::equal ? eq : ineq).push_back(i);
  }
  // Pool of optional constraints: inequality rows then bounds (encoded n + j).
  std::vector<std::size_t> pool = ineq;
  for (std::size_t j = 0; j < n; ++j) pool.push_back(p.num_rows() + j);
  if (eq.size() > n) {
    // Redundant equalities: fall back to choosing n of all constraints.
    pool.insert(pool.begin(), eq.begin(), eq.end());
    eq.clear();
  }
  const std::size_t need = n - eq.size();
  std::optional<Rational> best;
  if (n == 0) {
    std::vector<Rational> x;
    if (feasible(p, x)) best = Rational(0);
    return best;
  }
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(need, pool.size())), true);
  if (need > pool.size()) return best;
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    auto add = [&](std::size_t c) {
      if (c < p.num_rows()) {
        a.push_back(p.rows()[c].coeffs);
        b.push_back(p.rows()[c].rhs);
      } else {
        std::vector<Rational> e(n);
        e[c - p.num_rows()] = 1;
        a.push_back(e);
        b.emplace_back(0);
      }
    };
    for (auto c : eq) add(c);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (pick[k]) add(pool[k]);
    }
    auto x = solve_square(a, b);
    if (!x || !feasible(p, *x)) continue;
    Rational v;
    for (std::size_t j = 0; j < n; ++j) v += p.objective()[j] * (*x)[j];
    if (!best || v < *best) best = v;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational(int bound, int max_den) {
  const int den = integer(1, max_den);
  const int num = integer(-bound * den, bound * den);
  return Rational(Integer(num), Integer(den));
}

Rational Sampler::unit(int max_den) {
  const int den = integer(1, max_den);
  return Rational(Integer(integer(0, den - 1)), Integer(den));
}

RationalVector Sampler::vector(std::size_t n, int bound, int max_den) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound, max_den));
  return v;
}

IntVector Sampler::int_vector(std::size_t n, int bound) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Integer(integer(-bound, bound)));
  return v;
}

IntVector Sampler::nonzero_int_vector(std::size_t n, int bound) {
  for (;;) {
    IntVector v = int_vector(n, bound);
    if (!v.is_zero()) return v;
  }
}

IntVector Sampler::alpha_in_zf(const RationalVector& f, int bound) {
  for (;;) {
    IntVector a = nonzero_int_vector(f.dim(), bound);
    if (!dot(a, f).is_integer()) return a;
  }
}

RationalVector Sampler::anchor(std::size_t n, int max_den) {
  for (;;) {
    RationalVector f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(unit(max_den));
    if (!is_integral(f)) return f;
  }
}

CornerRelaxation Sampler::relaxation(std::size_t n, std::size_t num_r, std::size_t num_q, int bound, int max_den) {
  const RationalVector f = anchor(n, max_den);
  auto columns = [&](std::size_t k) {
    std::set<RationalVector> seen;
    std::vector<RationalVector> out;
    while (out.size() < k) {
      RationalVector v = vector(n, bound, max_den);
      if (v.is_zero() || !seen.insert(v).second) continue;
      out.push_back(v);
    }
    return out;
  };
  auto r = columns(num_r);
  auto q = columns(num_q);
  return CornerRelaxation(f, r, q);
}

std::vector<Rational> Sampler::nonneg(std::size_t k, int bound, int max_den) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(abs(rational(bound, max_den)));
  return v;
}

}  // namespace splitcut::testing
