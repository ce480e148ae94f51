#include "splitcut/split_set.hpp"

namespace splitcut {

SplitSet::SplitSet(IntVector alpha, RationalVector f) : alpha_(std::move(alpha)), f_(std::move(f)) {
  require_same_dim(alpha_.dim(), f_.dim(), "split set");
  if (alpha_.empty()) throw InputError("split set needs dimension >= 1");
  if (alpha_.is_zero()) throw InputError("split set normal alpha must be non-zero");
  alpha_f_ = dot(alpha_, f_);
  if (alpha_f_.is_integer()) {
    throw DegenerateError("alpha . f = " + alpha_f_.str() + " is integral; f lies on a split wall");
  }
  const auto [lo, hi] = floor_ceil(alpha_f_);
  coeffs_.c1 = Rational(1) / (Rational(hi) - alpha_f_);
  coeffs_.c2 = Rational(1) / (alpha_f_ - Rational(lo));
}

Rational gauge_of_product(const SplitSet& s, const Rational& alpha_r) {
  const auto& c = s.coefficients();
  if (alpha_r.sign() >= 0) return c.c1 * alpha_r;
  return -(c.c2 * alpha_r);
}

Rational gauge(const SplitSet& s, const RationalVector& r) {
  require_same_dim(s.dim(), r.dim(), "gauge");
  return gauge_of_product(s, dot(s.alpha(), r));
}

bool contains_in_interior(const SplitSet& s, const RationalVector& x) {
  require_same_dim(s.dim(), x.dim(), "split membership");
  const auto [lo, hi] = floor_ceil(s.alpha_f());
  const Rational ax = dot(s.alpha(), x);
  return Rational(lo) < ax && ax < Rational(hi);
}

bool contains(const SplitSet& s, const RationalVector& x) {
  require_same_dim(s.dim(), x.dim(), "split membership");
  const auto [lo, hi] = floor_ceil(s.alpha_f());
  const Rational ax = dot(s.alpha(), x);
  return Rational(lo) <= ax && ax <= Rational(hi);
}

RationalVector apply(const IntMatrix& a, const RationalVector& v) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

IntVector apply(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_same_dim(a[i].dim(), v.dim(), "matrix-vector product");
    Integer acc = 0;
    for (std::size_t j = 0; j < v.dim(); ++j) acc += a[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix out(cols, IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_same_dim(a[i].dim(), cols, "transpose");
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  }
  return out;
}

SplitSet pullback(const SplitSet& s, const IntMatrix& adjoint, const RationalVector& f_pre) {
  require_same_dim(adjoint.size(), f_pre.dim(), "pullback source dimension");
  // The adjoint determines the forward map, so the anchor condition is always checked.
  const IntMatrix forward = transpose(adjoint, s.dim());
  if (splitcut::apply(forward, f_pre) != s.f()) {
    throw PreconditionError("pullback anchor does not map onto the split anchor");
  }
  IntVector alpha = splitcut::apply(adjoint, s.alpha());
  if (alpha.is_zero()) throw DegenerateError("pulled-back split normal is zero");
  return SplitSet(std::move(alpha), f_pre);
}

}  // namespace splitcut
