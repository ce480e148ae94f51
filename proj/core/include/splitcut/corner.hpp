#pragma once

// Mixed-integer corner relaxations with finitely many rational columns:
//
//   x = f + sum_r r s(r) + sum_q q y(q),  x integral, y integral, s, y >= 0.
//
// Cuts are coefficient tables (psi on R, pi on Q) read as
// sum psi(r) s(r) + sum pi(q) y(q) >= 1.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitcut/cut_functions.hpp"
#include "splitcut/rational.hpp"
#include "splitcut/split_set.hpp"

namespace splitcut {

class CornerRelaxation {
 public:
  // Validates f in [0,1]^n \ Z^n, column dimensions, and rejects duplicate
  // columns within R or within Q.
  CornerRelaxation(RationalVector f, std::vector<RationalVector> continuous,
                   std::vector<RationalVector> integer);

  std::size_t dim() const { return f_.dim(); }
  const RationalVector& f() const { return f_; }
  const std::vector<RationalVector>& continuous_columns() const { return r_; }
  const std::vector<RationalVector>& integer_columns() const { return q_; }
  std::size_t num_continuous() const { return r_.size(); }
  std::size_t num_integer() const { return q_.size(); }
  std::size_t num_columns() const { return r_.size() + q_.size(); }
  bool pure_integer() const { return r_.empty(); }

  std::optional<std::size_t> find_continuous(const RationalVector& r) const;
  std::optional<std::size_t> find_integer(const RationalVector& q) const;

  friend bool operator==(const CornerRelaxation& a, const CornerRelaxation& b) {
    return a.f_ == b.f_ && a.r_ == b.r_ && a.q_ == b.q_;
  }

 private:
  RationalVector f_;
  std::vector<RationalVector> r_;
  std::vector<RationalVector> q_;
};

// (x, s, y) with s and y indexed like the relaxation's R and Q columns.
struct SolutionPoint {
  RationalVector x;
  std::vector<Rational> s;
  std::vector<Rational> y;

  friend bool operator==(const SolutionPoint&, const SolutionPoint&) = default;
};

// f + R s + Q y.
RationalVector derived_x(const CornerRelaxation& rel, const std::vector<Rational>& s,
                         const std::vector<Rational>& y);
SolutionPoint make_point(const CornerRelaxation& rel, std::vector<Rational> s, std::vector<Rational> y);

// Membership in C_LP: matching sizes, s, y >= 0, and x = f + R s + Q y.
bool in_lp_relaxation(const CornerRelaxation& rel, const SolutionPoint& p);
// C_LP plus x integral.
bool in_continuous_relaxation(const CornerRelaxation& rel, const SolutionPoint& p);
// C_LP plus x and y integral.
bool in_relaxation(const CornerRelaxation& rel, const SolutionPoint& p);

class CutCoefficients {
 public:
  CutCoefficients() = default;
  // Throws InputError on negative entries.
  CutCoefficients(std::vector<Rational> psi, std::vector<Rational> pi);

  const std::vector<Rational>& psi() const { return psi_; }
  const std::vector<Rational>& pi() const { return pi_; }

  // sum psi s + sum pi y; throws InputError when the point's sizes differ.
  Rational value(const SolutionPoint& p) const;
  bool satisfied_by(const SolutionPoint& p) const { return value(p) >= Rational(1); }

  friend bool operator==(const CutCoefficients&, const CutCoefficients&) = default;

 private:
  std::vector<Rational> psi_;
  std::vector<Rational> pi_;
};

void require_total(const CornerRelaxation& rel, const CutCoefficients& cut);

// The alpha-cut restricted to the relaxation's columns.
CutCoefficients alpha_cut_coefficients(const CornerRelaxation& rel, const IntVector& alpha);
// The lattice-free split cut psi = pi = gauge of S(alpha, f) - f.
CutCoefficients split_gauge_coefficients(const CornerRelaxation& rel, const IntVector& alpha);

// D(alpha, beta, f): alpha x + beta . y <= floor(alpha f) or >= ceil(alpha f).
// beta is indexed like Q; all zeros gives the plain split on x.
struct Disjunction {
  IntVector alpha;
  std::vector<Integer> beta;

  static Disjunction plain(IntVector alpha, std::size_t num_integer);
};

// Throws InputError/DegenerateError unless alpha . f is fractional and sizes match.
void validate(const CornerRelaxation& rel, const Disjunction& d);
bool in_disjunction(const CornerRelaxation& rel, const Disjunction& d, const SolutionPoint& p);

enum class ValidityStatus { valid, violated, inconclusive };

struct ValidityOutcome {
  ValidityStatus status = ValidityStatus::inconclusive;
  std::optional<SolutionPoint> witness;  // set when violated
  Rational witness_value;                // cut value at the witness
  std::string note;
};

// Brute-force validity oracle over C. Enumerates integral y with sum y <= cap in
// graded lexicographic order. Pure-integer relaxations are certified valid when
// every point beyond the cap is forced above 1 by min pi * (cap + 1) >= 1.
// Mixed relaxations additionally scan integral x with |x_i| <= cap and minimize
// the continuous part by LP; they are never certified beyond the cap.
ValidityOutcome check_validity_enumerated(const CornerRelaxation& rel, const CutCoefficients& cut, int cap);

// Pointwise a <= b on R and Q. Throws InputError on mismatched tables.
bool dominates(const CutCoefficients& a, const CutCoefficients& b);

// CC(f0, R0, Q^ell) with f0 = (f, 0), R0 = R x {0}, Q^ell = {(q, ell(q))}.
struct LiftedRelaxation {
  CornerRelaxation base;
  std::vector<Integer> ell;
  CornerRelaxation lifted;
};

LiftedRelaxation lift_program(const CornerRelaxation& rel, std::vector<Integer> ell);

// Gamma_ell: x' = (x, sum ell(q) y(q)); supports carried over column by column.
SolutionPoint gamma_point(const LiftedRelaxation& lr, const SolutionPoint& p);
SolutionPoint gamma_point_inverse(const LiftedRelaxation& lr, const SolutionPoint& p);
// Gamma°_ell: coefficient tables re-indexed onto (r, 0) and (q, ell(q)).
CutCoefficients gamma_cut(const LiftedRelaxation& lr, const CutCoefficients& cut);
CutCoefficients gamma_cut_inverse(const LiftedRelaxation& lr, const CutCoefficients& cut);

struct HullTerm {
  Rational weight;
  SolutionPoint point;
};

struct HullCertificate {
  Rational nu;  // cut value of the certified point
  std::vector<HullTerm> terms;
};

// Writes p, a point of C_LP satisfying the lattice-free split cut for S(alpha, f),
// as a convex combination of points in C_LP on the closed sides of D(alpha, f).
// Each column with positive gauge contributes the point f + nu * col / gauge(col)
// (weight = its share of the cut value); columns with zero gauge are carried by
// a shared recession offset. Returns nullopt when p violates the cut.
std::optional<HullCertificate> hull_certificate(const CornerRelaxation& rel, const IntVector& alpha,
                                                const SolutionPoint& p);

// Weights positive summing to 1, every term in C_LP and in D(alpha, f), and the
// combination reproduces p exactly.
bool verify_hull_certificate(const CornerRelaxation& rel, const IntVector& alpha, const SolutionPoint& p,
                             const HullCertificate& cert);

// A cut on all of Q^n x Q^n: table values on the relaxation's columns and the
// alpha-cut formula everywhere else.
class ExtendedCutFunction {
 public:
  ExtendedCutFunction(CornerRelaxation rel, CutCoefficients table, IntVector fallback_alpha);

  Rational psi(const RationalVector& r) const;
  Rational pi(const RationalVector& q) const;

  const CutCoefficients& table() const { return table_; }
  const IntVector& fallback_alpha() const { return fallback_.alpha(); }

 private:
  CornerRelaxation rel_;
  CutCoefficients table_;
  AlphaCut fallback_;
};

// Requires the alpha_bar-cut to dominate `cut` pointwise on R and Q
// (PreconditionError otherwise).
ExtendedCutFunction extend_split_cut(const CornerRelaxation& rel, const CutCoefficients& cut,
                                     const IntVector& alpha_bar);

// Calls visit(y) for every y in N^k with sum y <= cap, by total then
// lexicographically; stops early when visit returns false.
void for_each_bounded_composition(std::size_t k, int cap,
                                  const std::function<bool(const std::vector<Integer>&)>& visit);

}  // namespace splitcut
