#pragma once

// The one-row pure-integer family
//
//   x = 1/2 + (1/2 + eps/2) y1 + (1/2 + eps) y2,  x, y1, y2 integral, y >= 0
//
// whose split closure stays below 6 for min y1 + y2 while the integer optimum
// is at least 1/(2 eps), plus the brute-force and exhaustive checks used to
// reproduce that gap.

#include <optional>
#include <string>
#include <vector>

#include "splitcut/corner.hpp"
#include "splitcut/split_lp.hpp"

namespace splitcut {

// Throws InputError for eps <= 0.
CornerRelaxation make_bad_family(const Rational& epsilon);

// max(2 * ceil(1 / (2 eps)), 12).
int default_ip_cap(const Rational& epsilon);

struct IpOptimum {
  bool found = false;      // a feasible point with sum y <= cap exists
  bool certified = false;  // no point beyond the cap can do better
  Rational value;
  std::optional<SolutionPoint> witness;
  int cap = 0;
  std::string note;
};

// Exact minimum of objective . y over C for pure-integer relaxations, by
// enumeration of integral y with sum y <= cap. The result is certified as the
// global optimum when the objective is non-negative and every point beyond the
// cap costs at least the value found.
IpOptimum ip_optimum_bruteforce(const CornerRelaxation& rel, const std::vector<Rational>& objective, int cap);

struct AlphaSweep {
  bool holds = true;
  std::optional<Integer> counterexample;
  Integer period;
  std::size_t checked = 0;
};

// For every odd alpha in one full period: [alpha q1] or [alpha q2] lies in [1/6, 5/6].
AlphaSweep verify_claim_alpha_q(const Rational& epsilon);

// For every odd alpha in one full period: max{pi_alpha(q1), pi_alpha(q2)} >= 1/3.
AlphaSweep verify_one_third_lemma(const Rational& epsilon);

enum class GapStatus { ok, violation, inconclusive };
std::string to_string(GapStatus s);

struct GapReport {
  Rational epsilon;
  IpOptimum ip;
  ClosureResult closure;
  Rational ratio;         // ip value / closure value
  Rational bound;         // 1 / (12 eps)
  Rational ip_lower;      // 1 / (2 eps)
  bool point_33_survives = false;  // (y1, y2) = (3, 3) satisfies every period alpha-cut
  AlphaSweep claim_alpha_q;
  AlphaSweep one_third;
  GapStatus status = GapStatus::inconclusive;
  std::vector<std::string> failures;
};

// eps must lie in (0, 1/2]. cap defaults to default_ip_cap(eps).
GapReport run_gap_experiment(const Rational& epsilon, std::optional<int> cap = std::nullopt);

std::string format_report(const GapReport& report);
std::string csv_header();
std::string csv_row(const GapReport& report);

}  // namespace splitcut
