#pragma once

// Independent reference implementations used only by tests. Nothing here calls
// the closed forms it is meant to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "splitcut/corner.hpp"
#include "splitcut/lp.hpp"
#include "splitcut/rational.hpp"
#include "splitcut/split_set.hpp"

namespace splitcut::testing {

// inf{ 1/lambda > 0 : lambda r in S(alpha, f) - f }, from the two wall equations.
Rational gauge_by_definition(const IntVector& alpha, const RationalVector& f, const RationalVector& r);
Rational gauge_by_definition(const SplitSet& s, const RationalVector& r);

// max{ r/(1-[f]), -r/[f] } written out from scratch.
Rational psi_reference(const Rational& f, const Rational& r);

// min over w in [-window, window] of psi_reference(f, q + w).
Rational pi_window(const Rational& f, const Rational& q, int window);

// min over w in [-window, window] of gauge_by_definition(s, (q, w)).
Rational lifting_window(const SplitSet& s, const RationalVector& q, int window);

// Optimum of min c x over {rows, x >= 0} by enumerating basic solutions.
// Only for problems bounded below (e.g. c >= 0). nullopt when infeasible.
std::optional<Rational> vertex_minimum(const LpProblem& p);

// Solve a square system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  // p/q with 1 <= q <= max_den and |p/q| <= bound.
  Rational rational(int bound, int max_den);
  // Rational in [0, 1) with denominator <= max_den.
  Rational unit(int max_den);
  RationalVector vector(std::size_t n, int bound, int max_den);
  IntVector int_vector(std::size_t n, int bound);
  IntVector nonzero_int_vector(std::size_t n, int bound);
  // alpha with alpha . f non-integral.
  IntVector alpha_in_zf(const RationalVector& f, int bound);
  // f in [0,1]^n, not integral.
  RationalVector anchor(std::size_t n, int max_den);
  // Random relaxation with distinct columns; num_r + num_q columns of dimension n.
  CornerRelaxation relaxation(std::size_t n, std::size_t num_r, std::size_t num_q, int bound, int max_den);
  std::vector<Rational> nonneg(std::size_t k, int bound, int max_den);

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace splitcut::testing
