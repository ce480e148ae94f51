#pragma once

// The GMI function, alpha-cut functions, and lifting of split gauges along
// one appended integer coordinate.

#include <map>

#include "splitcut/rational.hpp"
#include "splitcut/split_set.hpp"

namespace splitcut {

class GmiFunction {
 public:
  // Throws InputError when f is integral.
  explicit GmiFunction(Rational f);

  const Rational& f() const { return f_; }
  // Fractional part of f, in (0, 1).
  const Rational& frac_f() const { return frac_f_; }

 private:
  Rational f_;
  Rational frac_f_;
};

// psi(r) = max{ r / (1 - [f]), -r / [f] }.
Rational gmi_psi(const GmiFunction& g, const Rational& r);

// pi(q) = min{ [q] / (1 - [f]), (1 - [q]) / [f] }, the minimum of psi over q + Z.
Rational gmi_pi(const GmiFunction& g, const Rational& q);

// Row aggregation with integral multipliers alpha followed by the GMI function.
class AlphaCut {
 public:
  // Throws InputError on dimension mismatch and DegenerateError when
  // alpha . f is integral.
  AlphaCut(IntVector alpha, RationalVector f);

  const IntVector& alpha() const { return alpha_; }
  const RationalVector& f() const { return f_; }
  const GmiFunction& aggregated() const { return gmi_; }

 private:
  IntVector alpha_;
  RationalVector f_;
  GmiFunction gmi_;
};

Rational alpha_psi(const AlphaCut& c, const RationalVector& r);
Rational alpha_pi(const AlphaCut& c, const RationalVector& q);

struct LiftingValue {
  Rational value;
  Integer witness;  // lifted coordinate w attaining the minimum

  friend bool operator==(const LiftingValue&, const LiftingValue&) = default;
};

// min over integers w of gauge(s, (q, w)) for a split in dimension q.dim() + 1
// whose last normal coordinate is non-zero.
//
// With t = alpha q + a w the gauge is convex piecewise linear in t and t ranges
// over alpha q + |a| Z, so the minimum sits at the smallest non-negative or the
// largest negative attainable t. Ties go to the non-negative candidate.
LiftingValue trivial_lifting(const SplitSet& s, const RationalVector& q);

// Integer choice of the appended coordinate for each integer column.
using LiftingMap = std::map<RationalVector, Integer>;

// gauge(s, (r, 0)).
Rational psi_plus(const SplitSet& s, const RationalVector& r);
// gauge(s, (q, ell(q))); throws InputError if ell is undefined at q.
Rational pi_plus(const SplitSet& s, const LiftingMap& ell, const RationalVector& q);

// The lifted split S((alpha, 1), (f, 0)) used throughout the lifting calculus.
SplitSet lifted_split(const IntVector& alpha, const RationalVector& f);

}  // namespace splitcut
