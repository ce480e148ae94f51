// splitcut: command-line front end for cut-generating functions, split-cut
// verification and split-closure experiments on corner relaxations.
//
// Exit codes: 0 success, 1 property violation, 2 inconclusive (cap), 3 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitcut/corner.hpp"
#include "splitcut/cut_functions.hpp"
#include "splitcut/experiments.hpp"
#include "splitcut/instance_io.hpp"
#include "splitcut/split_lp.hpp"

namespace {

using namespace splitcut;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

std::string join(const std::vector<Rational>& v, std::string_view sep = " ") {
  return str(RationalVector(v), sep);
}

std::vector<Rational> parse_list(const std::string& text) { return parse_vector(text).entries(); }

std::vector<Integer> parse_int_list(const std::string& text) { return parse_int_vector(text).entries(); }

std::vector<Rational> objective_or_ones(const std::string& text, std::size_t size) {
  if (text.empty()) return std::vector<Rational>(size, Rational(1));
  auto c = parse_list(text);
  require_same_dim(size, c.size(), "--objective");
  return c;
}

std::vector<Integer> beta_or_zero(const std::string& text, std::size_t size) {
  if (text.empty()) return std::vector<Integer>(size, Integer(0));
  auto b = parse_int_list(text);
  require_same_dim(size, b.size(), "--beta");
  return b;
}

void print_cut_table(const CornerRelaxation& rel, const CutCoefficients& cut, bool csv) {
  if (csv) std::cout << "kind,column,coefficient\n";
  for (std::size_t k = 0; k < rel.num_continuous(); ++k) {
    const auto col = str(rel.continuous_columns()[k], csv ? ";" : " ");
    if (csv) {
      std::cout << "r," << col << ',' << cut.psi()[k] << '\n';
    } else {
      std::cout << "  psi(" << col << ") = " << cut.psi()[k] << '\n';
    }
  }
  for (std::size_t k = 0; k < rel.num_integer(); ++k) {
    const auto col = str(rel.integer_columns()[k], csv ? ";" : " ");
    if (csv) {
      std::cout << "q," << col << ',' << cut.pi()[k] << '\n';
    } else {
      std::cout << "  pi(" << col << ") = " << cut.pi()[k] << '\n';
    }
  }
}

struct Options {
  bool csv = false;
  std::string instance;
  std::string f;
  std::string alpha;
  std::string beta;
  std::string ell;
  std::string psi;
  std::string pi;
  std::string cut_alpha;
  std::string objective;
  std::vector<std::string> r;
  std::vector<std::string> q;
  std::vector<std::string> epsilons;
  std::optional<int> cap;
  int box = 0;
  std::string output;
};

int run_gmi(const Options& o) {
  const GmiFunction g(Rational::parse(o.f));
  bool ok = true;
  if (o.csv) std::cout << "kind,input,value\n";
  for (const auto& text : o.r) {
    const Rational r = Rational::parse(text);
    const Rational v = gmi_psi(g, r);
    if (o.csv) {
      std::cout << "psi," << r << ',' << v << '\n';
    } else {
      std::cout << "psi(" << r << ") = " << v << '\n';
    }
  }
  for (const auto& text : o.q) {
    const Rational q = Rational::parse(text);
    const Rational v = gmi_pi(g, q);
    // pi is the minimum of psi over q + Z.
    Rational best = gmi_psi(g, q);
    for (int w = -3; w <= 3; ++w) best = std::min(best, gmi_psi(g, q + Rational(w)));
    ok = ok && best == v;
    if (o.csv) {
      std::cout << "pi," << q << ',' << v << '\n';
    } else {
      std::cout << "pi(" << q << ") = " << v << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int run_alpha_cut(const Options& o) {
  const IntVector alpha = parse_int_vector(o.alpha);
  if (!o.instance.empty()) {
    const auto inst = read_instance_file(o.instance);
    const auto& rel = inst.relaxation;
    const CutCoefficients cut = alpha_cut_coefficients(rel, alpha);
    if (!o.csv) std::cout << "alpha-cut for alpha = " << alpha << '\n';
    print_cut_table(rel, cut, o.csv);
    // Same table through the geometric lifting of S((alpha, 1), (f, 0)).
    const SplitSet lifted = lifted_split(alpha, rel.f());
    bool ok = true;
    for (std::size_t k = 0; k < rel.num_continuous(); ++k) {
      ok = ok && psi_plus(lifted, rel.continuous_columns()[k]) == cut.psi()[k];
    }
    for (std::size_t k = 0; k < rel.num_integer(); ++k) {
      ok = ok && trivial_lifting(lifted, rel.integer_columns()[k]).value == cut.pi()[k];
    }
    return ok ? kOk : kViolation;
  }
  const AlphaCut cut(alpha, parse_vector(o.f));
  if (o.csv) std::cout << "kind,input,value\n";
  for (const auto& text : o.r) {
    const RationalVector r = parse_vector(text);
    const Rational v = alpha_psi(cut, r);
    if (o.csv) {
      std::cout << "psi," << str(r, ";") << ',' << v << '\n';
    } else {
      std::cout << "psi" << r << " = " << v << '\n';
    }
  }
  for (const auto& text : o.q) {
    const RationalVector q = parse_vector(text);
    const Rational v = alpha_pi(cut, q);
    if (o.csv) {
      std::cout << "pi," << str(q, ";") << ',' << v << '\n';
    } else {
      std::cout << "pi" << q << " = " << v << '\n';
    }
  }
  return kOk;
}

int run_lift(const Options& o) {
  const auto inst = read_instance_file(o.instance);
  const auto& rel = inst.relaxation;
  const IntVector alpha = parse_int_vector(o.alpha);
  const SplitSet lifted = lifted_split(alpha, rel.f());
  const AlphaCut cut(alpha, rel.f());

  std::vector<LiftingValue> best;
  for (const auto& q : rel.integer_columns()) best.push_back(trivial_lifting(lifted, q));
  std::vector<Integer> ell;
  if (o.ell.empty()) {
    for (const auto& b : best) ell.push_back(b.witness);
  } else {
    ell = parse_int_list(o.ell);
  }
  const LiftedRelaxation lr = lift_program(rel, ell);

  bool ok = true;
  if (o.csv) {
    std::cout << "q,ell,pi_plus,pi_tilde,witness,alpha_pi\n";
  } else {
    std::cout << "lifted program:\n" << serialize_instance({lr.lifted, std::nullopt, std::nullopt});
    std::cout << "lifting of S((alpha,1),(f,0)), alpha = " << alpha << ":\n";
  }
  for (std::size_t k = 0; k < rel.num_integer(); ++k) {
    const auto& q = rel.integer_columns()[k];
    const Rational plus = gauge(lifted, append(q, Rational(ell[k])));
    const Rational apx = alpha_pi(cut, q);
    ok = ok && best[k].value == apx && best[k].value <= plus;
    if (o.csv) {
      std::cout << str(q, ";") << ',' << ell[k] << ',' << plus << ',' << best[k].value << ',' << best[k].witness << ','
                << apx << '\n';
    } else {
      std::cout << "  q = " << q << ": ell = " << ell[k] << ", pi+ = " << plus << ", min over w = " << best[k].value
                << " at w = " << best[k].witness << ", alpha-cut pi = " << apx << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

CutCoefficients cut_from_options(const Options& o, const CornerRelaxation& rel) {
  if (!o.cut_alpha.empty()) return alpha_cut_coefficients(rel, parse_int_vector(o.cut_alpha));
  CutCoefficients cut(o.psi.empty() ? std::vector<Rational>{} : parse_list(o.psi),
                      o.pi.empty() ? std::vector<Rational>{} : parse_list(o.pi));
  require_total(rel, cut);
  return cut;
}

int run_verify_split(const Options& o) {
  const auto inst = read_instance_file(o.instance);
  const auto& rel = inst.relaxation;
  const Disjunction d{parse_int_vector(o.alpha), beta_or_zero(o.beta, rel.num_integer())};
  const CutCoefficients cut = cut_from_options(o, rel);
  const SplitCutVerdict v = verify_split_cut(rel, cut, d);
  auto side = [](const LpOutcome& s) { return s.status == LpStatus::optimal ? s.optimum.str() : to_string(s.status); };
  if (o.csv) {
    std::cout << "valid,lower_min,upper_min,witness_value\n"
              << (v.valid ? "true" : "false") << ',' << side(v.lower) << ',' << side(v.upper) << ','
              << (v.witness ? v.witness_value.str() : "") << '\n';
  } else {
    std::cout << "split cut " << (v.valid ? "VALID" : "INVALID") << " for disjunction alpha = " << d.alpha << '\n';
    std::cout << "  min cut value on lower side: " << side(v.lower) << '\n';
    std::cout << "  min cut value on upper side: " << side(v.upper) << '\n';
    if (v.witness) {
      std::cout << "  violating point: x = " << v.witness->x << ", s = (" << join(v.witness->s, ", ") << "), y = ("
                << join(v.witness->y, ", ") << "), cut value " << v.witness_value << '\n';
    }
  }
  return v.valid ? kOk : kViolation;
}

int run_deepest_cut(const Options& o) {
  const auto inst = read_instance_file(o.instance);
  const auto& rel = inst.relaxation;
  const Disjunction d{parse_int_vector(o.alpha), beta_or_zero(o.beta, rel.num_integer())};
  const CutCoefficients cut = deepest_disjunctive_cut(rel, d);
  if (!o.csv) std::cout << "deepest cut for alpha = " << d.alpha << ":\n";
  print_cut_table(rel, cut, o.csv);
  const bool ok = verify_split_cut(rel, cut, d).valid && dominates(alpha_cut_coefficients(rel, d.alpha), cut);
  return ok ? kOk : kViolation;
}

int run_closure(const Options& o) {
  const auto inst = read_instance_file(o.instance);
  const auto& rel = inst.relaxation;
  ClosureOptions opts;
  if (o.box > 0 || rel.dim() != 1) {
    opts.strategy = ClosureStrategy::box;
    opts.box_radius = o.box > 0 ? o.box : 3;
  }
  const auto objective = objective_or_ones(o.objective, rel.num_columns());
  const ClosureResult res = split_closure_optimize(rel, objective, opts);
  const std::string label = res.exact ? "exact" : "approximate (box relaxation)";
  const std::string value = res.status == LpStatus::optimal ? res.value.str() : to_string(res.status);
  if (o.csv) {
    std::cout << "closure_opt,status,label,alphas,lp_rounds\n"
              << value << ',' << to_string(res.status) << ',' << (res.exact ? "exact" : "approximate") << ','
              << res.alphas.size() << ',' << res.lp_rounds << '\n';
  } else {
    std::cout << "split closure optimum: " << value << " [" << label << "]\n";
    if (res.exact) std::cout << "  alpha period " << res.period << '\n';
    std::cout << "  alpha-cuts: " << res.alphas.size() << ", LP rounds: " << res.lp_rounds << '\n';
    if (res.witness) {
      std::cout << "  at s = (" << join(res.witness->s, ", ") << "), y = (" << join(res.witness->y, ", ")
                << "), x = " << res.witness->x << '\n';
    }
  }
  return kOk;
}

int run_ip_opt(const Options& o) {
  std::optional<Rational> eps;
  CornerRelaxation rel = [&] {
    if (!o.instance.empty()) {
      auto inst = read_instance_file(o.instance);
      eps = inst.epsilon;
      return inst.relaxation;
    }
    if (o.epsilons.size() != 1) throw InputError("ip-opt needs an instance file or one --epsilon");
    eps = Rational::parse(o.epsilons.front());
    return make_bad_family(*eps);
  }();
  const int cap = o.cap ? *o.cap : (eps ? default_ip_cap(*eps) : 12);
  const auto objective = objective_or_ones(o.objective, rel.num_integer());
  const IpOptimum ip = ip_optimum_bruteforce(rel, objective, cap);
  if (o.csv) {
    std::cout << "ip_opt,certified,cap,y\n"
              << (ip.found ? ip.value.str() : "") << ',' << (ip.certified ? "true" : "false") << ',' << cap << ','
              << (ip.found ? join(ip.witness->y, ";") : "") << '\n';
  } else if (ip.found) {
    std::cout << "ip optimum: " << ip.value << " at y = (" << join(ip.witness->y, ", ") << "), x = " << ip.witness->x
              << '\n'
              << "  " << ip.note << '\n';
  } else {
    std::cout << "ip optimum: inconclusive\n  " << ip.note << '\n';
  }
  return ip.found && ip.certified ? kOk : kInconclusive;
}

int run_gap(const Options& o) {
  if (o.epsilons.empty()) throw InputError("gap needs --epsilon");
  int code = kOk;
  if (o.csv) std::cout << csv_header() << '\n';
  for (const auto& text : o.epsilons) {
    const GapReport rep = run_gap_experiment(Rational::parse(text), o.cap);
    if (o.csv) {
      std::cout << csv_row(rep) << '\n';
    } else {
      std::cout << format_report(rep);
    }
    if (rep.status == GapStatus::violation) {
      code = kViolation;
    } else if (rep.status == GapStatus::inconclusive && code == kOk) {
      code = kInconclusive;
    }
  }
  return code;
}

int run_family(const Options& o) {
  if (o.epsilons.size() != 1) throw InputError("family needs one --epsilon");
  const Rational eps = Rational::parse(o.epsilons.front());
  const InstanceFile inst{make_bad_family(eps), "bad-family", eps};
  if (o.output.empty()) {
    std::cout << serialize_instance(inst);
  } else {
    write_instance_file(o.output, inst);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact split cuts, alpha-cuts and split closures for corner relaxations"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--csv", o.csv, "Emit CSV instead of text");

  auto* gmi = app.add_subcommand("gmi", "Evaluate the GMI function");
  gmi->add_option("--f", o.f, "Right-hand side f (rational)")->required();
  gmi->add_option("--r", o.r, "Continuous column values");
  gmi->add_option("--q", o.q, "Integer column values");

  auto* alpha_cut = app.add_subcommand("alpha-cut", "Evaluate an alpha-cut on vectors or on an instance");
  alpha_cut->add_option("instance", o.instance, "Instance file");
  alpha_cut->add_option("--alpha", o.alpha, "Integer multipliers, comma separated")->required();
  alpha_cut->add_option("--f", o.f, "Right-hand side f (when no instance is given)");
  alpha_cut->add_option("--r", o.r, "Continuous columns");
  alpha_cut->add_option("--q", o.q, "Integer columns");

  auto* lift = app.add_subcommand("lift", "Build the lifted program and the trivial lifting of S((alpha,1),(f,0))");
  lift->add_option("instance", o.instance, "Instance file")->required();
  lift->add_option("--alpha", o.alpha, "Integer multipliers")->required();
  lift->add_option("--ell", o.ell, "Lifting values per integer column (default: minimizers)");

  auto* verify = app.add_subcommand("verify-split", "Verify a cut against a split disjunction by LP");
  verify->add_option("instance", o.instance, "Instance file")->required();
  verify->add_option("--alpha", o.alpha, "Disjunction normal on x")->required();
  verify->add_option("--beta", o.beta, "Disjunction coefficients on y (default 0)");
  verify->add_option("--psi", o.psi, "Cut coefficients on R");
  verify->add_option("--pi", o.pi, "Cut coefficients on Q");
  verify->add_option("--cut-alpha", o.cut_alpha, "Use the alpha-cut with these multipliers as the cut");

  auto* deepest = app.add_subcommand("deepest-cut", "Strongest cut valid on one split disjunction");
  deepest->add_option("instance", o.instance, "Instance file")->required();
  deepest->add_option("--alpha", o.alpha, "Disjunction normal on x")->required();
  deepest->add_option("--beta", o.beta, "Disjunction coefficients on y (default 0)");

  auto* closure = app.add_subcommand("closure", "Optimize over the split closure");
  closure->add_option("instance", o.instance, "Instance file")->required();
  closure->add_option("--objective", o.objective, "Objective over (s, y) (default all ones)");
  closure->add_option("--box", o.box, "Enumerate alpha in [-A, A]^n instead of one period");

  auto* ip = app.add_subcommand("ip-opt", "Brute-force integer optimum of a pure-integer relaxation");
  ip->add_option("instance", o.instance, "Instance file");
  ip->add_option("--epsilon", o.epsilons, "Use the bad family for this epsilon");
  ip->add_option("--cap", o.cap, "Enumeration cap on sum y");
  ip->add_option("--objective", o.objective, "Objective over y (default all ones)");

  auto* gap = app.add_subcommand("gap", "Reproduce the split-closure integrality gap for the bad family");
  gap->add_option("--epsilon", o.epsilons, "Rational epsilon in (0, 1/2]; repeatable")->required();
  gap->add_option("--cap", o.cap, "Enumeration cap on sum y");

  auto* family = app.add_subcommand("family", "Write the bad-family instance for an epsilon");
  family->add_option("--epsilon", o.epsilons, "Rational epsilon > 0")->required();
  family->add_option("-o,--output", o.output, "Output file (default stdout)");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_flag("--csv", o.csv, "Emit CSV instead of text");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gmi) return run_gmi(o);
    if (*alpha_cut) return run_alpha_cut(o);
    if (*lift) return run_lift(o);
    if (*verify) return run_verify_split(o);
    if (*deepest) return run_deepest_cut(o);
    if (*closure) return run_closure(o);
    if (*ip) return run_ip_opt(o);
    if (*gap) return run_gap(o);
    if (*family) return run_family(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
