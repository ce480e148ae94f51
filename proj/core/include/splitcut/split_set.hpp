#pragma once

// Lattice-free split sets S(alpha, f) = { x : floor(alpha f) <= alpha x <= ceil(alpha f) }
// and the Minkowski gauge of their centered version S(alpha, f) - f.

#include "splitcut/rational.hpp"

namespace splitcut {

// Wall coefficients of the centered split: the gauge is max{c1 * ar, -c2 * ar}
// with ar = alpha . r. 1/c1 and 1/c2 are the distances from alpha f to the
// upper and lower walls, so 1/c1 + 1/c2 = 1.
struct GaugeCoefficients {
  Rational c1;
  Rational c2;
};

class SplitSet {
 public:
  // Throws InputError on dimension mismatch or alpha = 0, DegenerateError when
  // alpha . f is integral (f would sit on a wall).
  SplitSet(IntVector alpha, RationalVector f);

  const IntVector& alpha() const { return alpha_; }
  const RationalVector& f() const { return f_; }
  std::size_t dim() const { return alpha_.dim(); }

  // alpha . f, never integral.
  const Rational& alpha_f() const { return alpha_f_; }
  const GaugeCoefficients& coefficients() const { return coeffs_; }

  friend bool operator==(const SplitSet& a, const SplitSet& b) {
    return a.alpha_ == b.alpha_ && a.f_ == b.f_;
  }

 private:
  IntVector alpha_;
  RationalVector f_;
  Rational alpha_f_;
  GaugeCoefficients coeffs_;
};

// Gauge of S - f at r. Zero exactly on the recession hyperplane alpha r = 0.
Rational gauge(const SplitSet& s, const RationalVector& r);

// Gauge as a function of the aggregated coordinate alpha . r.
Rational gauge_of_product(const SplitSet& s, const Rational& alpha_r);

// floor(alpha f) < alpha x < ceil(alpha f).
bool contains_in_interior(const SplitSet& s, const RationalVector& x);
// floor(alpha f) <= alpha x <= ceil(alpha f).
bool contains(const SplitSet& s, const RationalVector& x);

// Preimage of the centered split under a linear map A : Q^m -> Q^n given by
// its adjoint (an m x n integer matrix, one row per source coordinate).
// Returns S(A^t alpha, f_pre), i.e. A^{-1}(S - f) = S(A^t alpha, f_pre) - f_pre.
// Requires A f_pre = S.f(); throws PreconditionError otherwise and
// DegenerateError if the pulled-back normal vanishes.
SplitSet pullback(const SplitSet& s, const IntMatrix& adjoint, const RationalVector& f_pre);

// Matrix helpers for integer linear maps (row-major, rows = output coordinates).
RationalVector apply(const IntMatrix& a, const RationalVector& v);
IntVector apply(const IntMatrix& a, const IntVector& v);
IntMatrix transpose(const IntMatrix& a, std::size_t cols);

}  // namespace splitcut
