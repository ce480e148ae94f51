#include <benchmark/benchmark.h>

#include <random>

#include "splitcut/corner.hpp"
#include "splitcut/cut_functions.hpp"
#include "splitcut/experiments.hpp"
#include "splitcut/split_lp.hpp"
#include "splitcut/split_set.hpp"

namespace {

using namespace splitcut;

std::vector<RationalVector> random_vectors(std::size_t count, std::size_t n) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 17);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    RationalVector v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(Rational(Integer(num(rng)), Integer(den(rng))));
    out.push_back(v);
  }
  return out;
}

void BM_Gauge(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalVector f;
  IntVector alpha;
  for (std::size_t i = 0; i < n; ++i) {
    f.push_back(Rational(1, static_cast<long>(i) + 3));
    alpha.push_back(Integer(static_cast<long>(i) + 1));
  }
  const SplitSet s(alpha, f);
  const auto rs = random_vectors(256, n);
  for (auto _ : state) {
    for (const auto& r : rs) benchmark::DoNotOptimize(gauge(s, r));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(rs.size()));
}
BENCHMARK(BM_Gauge)->Arg(1)->Arg(3)->Arg(8);

void BM_AlphaPiSweep(benchmark::State& state) {
  const Rational eps(1, state.range(0));
  const CornerRelaxation rel = make_bad_family(eps);
  const long period = alpha_period(rel).get_si();
  for (auto _ : state) {
    for (long a = 1; a < period; a += 2) {
      benchmark::DoNotOptimize(alpha_cut_coefficients(rel, IntVector{Integer(a)}));
    }
  }
  state.SetItemsProcessed(state.iterations() * period / 2);
}
BENCHMARK(BM_AlphaPiSweep)->Arg(10)->Arg(100)->Arg(1000);

void BM_TrivialLifting(benchmark::State& state) {
  const SplitSet s = lifted_split(IntVector{Integer(3), Integer(-2)}, RationalVector{Rational(1, 3), Rational(1, 5)});
  const auto qs = random_vectors(256, 2);
  for (auto _ : state) {
    for (const auto& q : qs) benchmark::DoNotOptimize(trivial_lifting(s, q));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(qs.size()));
}
BENCHMARK(BM_TrivialLifting);

void BM_Closure(benchmark::State& state) {
  const CornerRelaxation rel = make_bad_family(Rational(1, state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_closure_optimize(rel, {Rational(1), Rational(1)}, {}));
  }
}
BENCHMARK(BM_Closure)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_IpBruteForce(benchmark::State& state) {
  const Rational eps(1, state.range(0));
  const CornerRelaxation rel = make_bad_family(eps);
  const int cap = default_ip_cap(eps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ip_optimum_bruteforce(rel, {Rational(1), Rational(1)}, cap));
  }
}
BENCHMARK(BM_IpBruteForce)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_DeepestCut(benchmark::State& state) {
  const CornerRelaxation rel(RationalVector{Rational(1, 2), Rational(1, 3)},
                             {RationalVector{Rational(1), Rational(0)}, RationalVector{Rational(-1, 2), Rational(1)}},
                             {RationalVector{Rational(1, 2), Rational(1, 2)}, RationalVector{Rational(1, 3), Rational(2, 3)}});
  const Disjunction d{IntVector{Integer(1), Integer(1)}, {Integer(-1), Integer(0)}};
  for (auto _ : state) {
    const CutCoefficients cut = deepest_disjunctive_cut(rel, d);
    benchmark::DoNotOptimize(verify_split_cut(rel, cut, d));
  }
}
BENCHMARK(BM_DeepestCut);

}  // namespace

BENCHMARK_MAIN();
