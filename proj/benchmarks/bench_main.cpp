#include <benchmark/benchmark.h>

#include "lopq/classical.hpp"
#include "lopq/families.hpp"
#include "lopq/moments.hpp"
#include "lopq/operators.hpp"

namespace {

using namespace lopq;

FamilyBundle aw() {
  return aw_bundle({make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 5), make_scalar(1, 7),
                    make_scalar(1, 2)});
}

FamilyBundle racah() {
  return racah_bundle({make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 4), make_scalar(1, 5)});
}

void BM_OperatorRows(benchmark::State& state) {
  const Lattice l = aw().lattice;
  for (auto _ : state) {
    OperatorTable ops(l);
    ops.reserve(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(ops.high_water());
  }
}
BENCHMARK(BM_OperatorRows)->Arg(16)->Arg(32)->Arg(64);

void BM_PearsonMoments(benchmark::State& state) {
  const FamilyBundle f = aw();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pearson_moments(f.lattice, f.pair, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_PearsonMoments)->Arg(16)->Arg(32);

void BM_TtrrTheorem(benchmark::State& state) {
  const FamilyBundle f = racah();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ttrr_coeffs(f.lattice, f.pair, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_TtrrTheorem)->Arg(8)->Arg(20)->Arg(40);

void BM_TtrrOracle(benchmark::State& state) {
  const FamilyBundle f = racah();
  const auto n = static_cast<std::size_t>(state.range(0));
  const MomentSeq u = pearson_moments(f.lattice, f.pair, 2 * n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(ttrr_oracle(u));
}
BENCHMARK(BM_TtrrOracle)->Arg(8)->Arg(20);

void BM_Hankel(benchmark::State& state) {
  const FamilyBundle f = racah();
  const auto n = static_cast<std::size_t>(state.range(0));
  const MomentSeq u = pearson_moments(f.lattice, f.pair, 2 * n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(hankel(u, n));
}
BENCHMARK(BM_Hankel)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
