#include "splitcut/experiments.hpp"

#include <algorithm>
#include <sstream>

namespace splitcut {

namespace {

const Rational kHalf{Integer(1), Integer(2)};

Rational q1_of(const Rational& eps) { return kHalf + eps / Rational(2); }
Rational q2_of(const Rational& eps) { return kHalf + eps; }

template <class Check>
AlphaSweep sweep_odd_alphas(const Rational& epsilon, Check&& check) {
  const CornerRelaxation rel = make_bad_family(epsilon);
  AlphaSweep out;
  out.period = alpha_period(rel);
  for (Integer a = 1; a <= out.period; a += 2) {
    ++out.checked;
    if (!check(Rational(a))) {
      out.holds = false;
      out.counterexample = a;
      return out;
    }
  }
  return out;
}

bool in_middle(const Rational& v) {
  return v >= Rational(Integer(1), Integer(6)) && v <= Rational(Integer(5), Integer(6));
}

}  // namespace

CornerRelaxation make_bad_family(const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw InputError("epsilon must be positive, got " + epsilon.str());
  return CornerRelaxation(RationalVector{kHalf}, {}, {RationalVector{q1_of(epsilon)}, RationalVector{q2_of(epsilon)}});
}

int default_ip_cap(const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw InputError("epsilon must be positive");
  const Integer half_inverse = ceil(Rational(1) / (Rational(2) * epsilon));
  const Integer cap = 2 * half_inverse;
  if (cap > 1000000) throw InputError("epsilon too small for brute-force enumeration");
  return std::max(static_cast<int>(cap.get_si()), 12);
}

IpOptimum ip_optimum_bruteforce(const CornerRelaxation& rel, const std::vector<Rational>& objective, int cap) {
  if (!rel.pure_integer()) throw InputError("ip brute force needs a pure-integer relaxation");
  require_same_dim(rel.num_integer(), objective.size(), "ip objective");
  if (cap < 1) throw InputError("enumeration cap must be >= 1");

  IpOptimum out;
  out.cap = cap;
  const bool nonnegative =
      std::all_of(objective.begin(), objective.end(), [](const Rational& c) { return c.sign() >= 0; });
  Rational min_coeff;
  if (!objective.empty()) min_coeff = *std::min_element(objective.begin(), objective.end());

  long current_total = -1;
  for_each_bounded_composition(rel.num_integer(), cap, [&](const std::vector<Integer>& yi) {
    long total = 0;
    for (const auto& v : yi) total += v.get_si();
    if (total != current_total) {
      current_total = total;
      // Every remaining point costs at least min_coeff * total.
      if (out.found && nonnegative && min_coeff * Rational(total) >= out.value) return false;
    }
    std::vector<Rational> y(yi.begin(), yi.end());
    SolutionPoint p = make_point(rel, {}, std::move(y));
    if (!is_integral(p.x)) return true;
    Rational value;
    for (std::size_t k = 0; k < objective.size(); ++k) value += objective[k] * p.y[k];
    if (!out.found || value < out.value) {
      out.found = true;
      out.value = value;
      out.witness = std::move(p);
    }
    return true;
  });

  if (!out.found) {
    out.note = "no feasible point with sum y <= " + std::to_string(cap);
    return out;
  }
  if (nonnegative && (out.value.is_zero() || min_coeff * Rational(cap + 1) >= out.value)) {
    out.certified = true;
    out.note = "every point with sum y > " + std::to_string(cap) + " costs at least " +
               (min_coeff * Rational(cap + 1)).str();
  } else {
    out.note = "optimal among points with sum y <= " + std::to_string(cap) + " only";
  }
  return out;
}

AlphaSweep verify_claim_alpha_q(const Rational& epsilon) {
  const Rational q1 = q1_of(epsilon);
  const Rational q2 = q2_of(epsilon);
  return sweep_odd_alphas(epsilon, [&](const Rational& a) {
    return in_middle(frac(a * q1)) || in_middle(frac(a * q2));
  });
}

AlphaSweep verify_one_third_lemma(const Rational& epsilon) {
  const RationalVector f{kHalf};
  const RationalVector q1{q1_of(epsilon)};
  const RationalVector q2{q2_of(epsilon)};
  const Rational third(Integer(1), Integer(3));
  return sweep_odd_alphas(epsilon, [&](const Rational& a) {
    const AlphaCut cut(IntVector{a.num()}, f);
    return std::max(alpha_pi(cut, q1), alpha_pi(cut, q2)) >= third;
  });
}

std::string to_string(GapStatus s) {
  switch (s) {
    case GapStatus::ok:
      return "ok";
    case GapStatus::violation:
      return "violation";
    case GapStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

GapReport run_gap_experiment(const Rational& epsilon, std::optional<int> cap) {
  if (epsilon.sign() <= 0 || epsilon > kHalf) throw InputError("epsilon must lie in (0, 1/2], got " + epsilon.str());
  GapReport rep;
  rep.epsilon = epsilon;
  rep.bound = Rational(1) / (Rational(12) * epsilon);
  rep.ip_lower = Rational(1) / (Rational(2) * epsilon);

  const CornerRelaxation rel = make_bad_family(epsilon);
  const std::vector<Rational> ones(2, Rational(1));

  rep.ip = ip_optimum_bruteforce(rel, ones, cap.value_or(default_ip_cap(epsilon)));
  rep.closure = split_closure_optimize(rel, ones, ClosureOptions{ClosureStrategy::period, 0});
  rep.claim_alpha_q = verify_claim_alpha_q(epsilon);
  rep.one_third = verify_one_third_lemma(epsilon);

  const SolutionPoint p33 = make_point(rel, {}, {Rational(3), Rational(3)});
  rep.point_33_survives = std::all_of(rep.closure.cuts.begin(), rep.closure.cuts.end(),
                                      [&](const CutCoefficients& c) { return c.satisfied_by(p33); });

  bool inconclusive = false;
  if (!rep.ip.found || !rep.ip.certified) {
    inconclusive = true;
    rep.failures.push_back("ip optimum not certified within cap " + std::to_string(rep.ip.cap));
  }
  if (rep.closure.status != LpStatus::optimal) {
    rep.failures.push_back("closure LP " + to_string(rep.closure.status));
  } else if (rep.closure.value > Rational(6)) {
    rep.failures.push_back("closure optimum " + rep.closure.value.str() + " exceeds 6");
  }
  if (!rep.point_33_survives) rep.failures.push_back("(3,3) violates an alpha-cut");
  if (!rep.claim_alpha_q.holds) rep.failures.push_back("fractional-part claim fails at alpha = " + rep.claim_alpha_q.counterexample->get_str());
  if (!rep.one_third.holds) rep.failures.push_back("one-third bound fails at alpha = " + rep.one_third.counterexample->get_str());

  if (rep.ip.found && rep.closure.status == LpStatus::optimal && rep.closure.value.sign() > 0) {
    rep.ratio = rep.ip.value / rep.closure.value;
    if (rep.ip.certified && rep.ip.value < rep.ip_lower) {
      rep.failures.push_back("ip optimum " + rep.ip.value.str() + " below 1/(2 eps) = " + rep.ip_lower.str());
    }
    if (rep.ip.certified && rep.ratio < rep.bound) {
      rep.failures.push_back("ratio " + rep.ratio.str() + " below 1/(12 eps) = " + rep.bound.str());
    }
  }

  const bool violated = rep.failures.size() > (inconclusive ? 1u : 0u);
  rep.status = violated ? GapStatus::violation : inconclusive ? GapStatus::inconclusive : GapStatus::ok;
  return rep;
}

std::string format_report(const GapReport& rep) {
  std::ostringstream os;
  os << "gap experiment, epsilon = " << rep.epsilon << '\n';
  os << "  instance: f = 1/2, q1 = " << q1_of(rep.epsilon) << ", q2 = " << q2_of(rep.epsilon) << '\n';
  os << "  ip optimum (min y1 + y2 over C): ";
  if (rep.ip.found) {
    os << rep.ip.value << " at y = (" << str(RationalVector(rep.ip.witness->y), ", ") << "), x = "
       << rep.ip.witness->x[0];
  } else {
    os << "none";
  }
  os << "\n    " << rep.ip.note << '\n';
  os << "  closure optimum (exact, all alpha-cuts over one period): ";
  if (rep.closure.status == LpStatus::optimal) {
    os << rep.closure.value << " at y = (" << str(RationalVector(rep.closure.witness->y), ", ") << ")";
  } else {
    os << to_string(rep.closure.status);
  }
  os << '\n';
  os << "  alpha period: " << rep.closure.period << " (" << rep.closure.alphas.size() << " odd alphas after sign symmetry)\n";
  os << "  (3,3) satisfies every alpha-cut: " << (rep.point_33_survives ? "yes" : "no") << '\n';
  os << "  [alpha q1] or [alpha q2] in [1/6,5/6] for all odd alpha: " << (rep.claim_alpha_q.holds ? "yes" : "no")
     << " (" << rep.claim_alpha_q.checked << " checked)\n";
  os << "  max pi >= 1/3 for all odd alpha: " << (rep.one_third.holds ? "yes" : "no") << " ("
     << rep.one_third.checked << " checked)\n";
  os << "  ratio ip / closure = " << rep.ratio << "  (>= 1/(12 eps) = " << rep.bound << ")\n";
  os << "  ip >= 1/(2 eps) = " << rep.ip_lower << '\n';
  os << "  alpha-cut table (alpha: pi(q1) pi(q2)):\n";
  for (std::size_t i = 0; i < rep.closure.alphas.size(); ++i) {
    os << "    " << rep.closure.alphas[i][0] << ": " << str(RationalVector(rep.closure.cuts[i].pi())) << '\n';
  }
  os << "  status: " << to_string(rep.status) << '\n';
  for (const auto& f : rep.failures) os << "    - " << f << '\n';
  return os.str();
}

std::string csv_header() { return "epsilon,ip_opt,closure_opt,ratio,paper_bound,alpha_period,status"; }

std::string csv_row(const GapReport& rep) {
  std::ostringstream os;
  os << rep.epsilon << ',' << (rep.ip.found ? rep.ip.value.str() : "") << ','
     << (rep.closure.status == LpStatus::optimal ? rep.closure.value.str() : "") << ',' << rep.ratio << ','
     << rep.bound << ',' << rep.closure.period << ',' << to_string(rep.status);
  return os.str();
}

}  // namespace splitcut
