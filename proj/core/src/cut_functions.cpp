#include "splitcut/cut_functions.hpp"

namespace splitcut {

GmiFunction::GmiFunction(Rational f) : f_(std::move(f)), frac_f_(frac(f_)) {
  if (frac_f_.is_zero()) throw InputError("GMI function needs fractional f, got " + f_.str());
}

Rational gmi_psi(const GmiFunction& g, const Rational& r) {
  const Rational up = r / (Rational(1) - g.frac_f());
  const Rational down = -r / g.frac_f();
  return up < down ? down : up;
}

Rational gmi_pi(const GmiFunction& g, const Rational& q) {
  const Rational fq = frac(q);
  const Rational up = fq / (Rational(1) - g.frac_f());
  const Rational down = (Rational(1) - fq) / g.frac_f();
  return down < up ? down : up;
}

AlphaCut::AlphaCut(IntVector alpha, RationalVector f)
    : alpha_(std::move(alpha)), f_(std::move(f)), gmi_([&] {
        require_same_dim(alpha_.dim(), f_.dim(), "alpha-cut");
        const Rational af = dot(alpha_, f_);
        if (af.is_integer()) throw DegenerateError("alpha . f = " + af.str() + " is integral");
        return af;
      }()) {}

Rational alpha_psi(const AlphaCut& c, const RationalVector& r) {
  return gmi_psi(c.aggregated(), dot(c.alpha(), r));
}

Rational alpha_pi(const AlphaCut& c, const RationalVector& q) {
  return gmi_pi(c.aggregated(), dot(c.alpha(), q));
}

LiftingValue trivial_lifting(const SplitSet& s, const RationalVector& q) {
  require_same_dim(s.dim(), q.dim() + 1, "trivial lifting");
  const Integer& a = s.alpha()[q.dim()];
  if (a == 0) throw InputError("trivial lifting needs a non-zero last split coordinate");

  Rational aq;
  for (std::size_t i = 0; i < q.dim(); ++i) aq += Rational(s.alpha()[i]) * q[i];

  const Integer step = ::abs(a);
  // t0 = aq mod |a|, in [0, |a|).
  const Integer k = floor(aq / Rational(step));
  const Rational t0 = aq - Rational(Integer(k * step));
  const Rational t1 = t0 - Rational(step);

  // a * w = t - aq  =>  w = -k * step / a.
  const Integer w0 = -(k * step) / a;
  const Integer w1 = w0 - step / a;

  const Rational v0 = gauge_of_product(s, t0);
  const Rational v1 = gauge_of_product(s, t1);
  if (v1 < v0) return {v1, w1};
  return {v0, w0};
}

Rational psi_plus(const SplitSet& s, const RationalVector& r) { return gauge(s, append(r, Rational(0))); }

Rational pi_plus(const SplitSet& s, const LiftingMap& ell, const RationalVector& q) {
  const auto it = ell.find(q);
  if (it == ell.end()) throw InputError("lifting map undefined at q = " + str(q, ","));
  return gauge(s, append(q, Rational(it->second)));
}

SplitSet lifted_split(const IntVector& alpha, const RationalVector& f) {
  return SplitSet(append(alpha, Integer(1)), append(f, Rational(0)));
}

}  // namespace splitcut
