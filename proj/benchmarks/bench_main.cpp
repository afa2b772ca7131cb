#include <benchmark/benchmark.h>

#include "hullcover/partition.hpp"
#include "hullcover/ramsey.hpp"
#include "hullcover/zoo.hpp"

using namespace hullcover;

namespace {

MatroidInstance full_space(std::uint64_t p, std::size_t d) {
  VectorMatroidSpec spec;
  spec.prime = p;
  spec.full_space_dimension = d;
  return build_vector_matroid(spec);
}

void BM_OracleFp(benchmark::State& state) {
  const auto m = full_space(3, static_cast<std::size_t>(state.range(0)));
  const auto basis = greedy_basis(m);
  const ElementSet f = make_set({basis.begin(), basis.end() - 1});
  Element x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.member(x, f));
    x = (x + 1) % m.size();
  }
}
BENCHMARK(BM_OracleFp)->DenseRange(2, 6, 2);

void BM_OracleGraphic(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto m = build_graphic_matroid({n, {}, true});
  const auto basis = greedy_basis(m);
  const ElementSet f = make_set({basis.begin(), basis.end() - 1});
  Element x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.member(x, f));
    x = (x + 1) % m.size();
  }
}
BENCHMARK(BM_OracleGraphic)->Arg(8)->Arg(32)->Arg(64);

void BM_OracleAbelian(benchmark::State& state) {
  const FiniteAbelianGroup g({2, static_cast<std::uint64_t>(state.range(0))});
  const auto m = build_abelian_linear_matroid(g);
  const Element f[] = {1};
  Element x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.member(x, f));
    x = (x + 1) % m.size();
  }
}
BENCHMARK(BM_OracleAbelian)->Arg(8)->Arg(64)->Arg(512);

void BM_PartitionFp(benchmark::State& state) {
  const auto m = full_space(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_partition(m));
}
BENCHMARK(BM_PartitionFp)->DenseRange(3, 7, 2);

void BM_PartitionComplete(benchmark::State& state) {
  const auto m = build_graphic_matroid({static_cast<std::uint32_t>(state.range(0)), {}, true});
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_partition(m));
}
BENCHMARK(BM_PartitionComplete)->Arg(6)->Arg(10)->Arg(14);

void BM_ExchangeCheck(benchmark::State& state) {
  const auto m = build_graphic_matroid({5, {}, true});
  for (auto _ : state) benchmark::DoNotOptimize(check_exchange(m, ExhaustiveBudget{3}));
}
BENCHMARK(BM_ExchangeCheck);

void BM_Rectangle(benchmark::State& state) {
  const auto c = static_cast<std::uint32_t>(state.range(0));
  const std::uint32_t lambda = 3;
  const std::uint32_t xs = c * (lambda - 1) + 1;
  const auto ys = static_cast<std::uint32_t>(3 * binomial(xs, lambda) * c + 1);
  const ProductColoring chi(xs, ys, c, {ColoringFormula::SeededUniform, 1});
  for (auto _ : state) benchmark::DoNotOptimize(monochrome_rectangle(chi, lambda));
}
BENCHMARK(BM_Rectangle)->Arg(2)->Arg(3)->Arg(4);

void BM_Quad(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<std::uint32_t>(state.range(0)));
  const GroupColoring chi(2, ColoringGenerator{ColoringFormula::SeededUniform, 5});
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_quad(g, chi));
}
BENCHMARK(BM_Quad)->Arg(26)->Arg(101)->Arg(1024);

void BM_PrefixVerify(benchmark::State& state) {
  const auto e = prefix_coloring(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_no_monochrome_odd_cycle(e));
}
BENCHMARK(BM_PrefixVerify)->DenseRange(4, 10, 3);

}  // namespace
BENCHMARK_MAIN();
