// Serial reference vs OpenMP kernel. Pass --benchmark_filter to select; OMP_NUM_THREADS sets the width.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "mckay/groups/fixtures.hpp"
#include "mckay/groups/group.hpp"
#include "mckay/orbifold/quintic.hpp"
#include "mckay/toric/construct.hpp"
#include "mckay/toric/lefschetz.hpp"
#include "mckay/toric/random.hpp"

using namespace mckay;

namespace {

struct TableInput {
  groups::FiniteMatrixGroup g;
  std::map<groups::Key, std::size_t> lookup;
};

const TableInput& table_input() {
  static const TableInput in = [] {
    auto g = groups::FiniteMatrixGroup::close(groups::fixtures::binary_dihedral_generators(24));
    std::map<groups::Key, std::size_t> m;
    for (std::size_t i = 0; i < g.order(); ++i) m.emplace(g.key_of(g.element(i)), i);
    return TableInput{std::move(g), std::move(m)};
  }();
  return in;
}

template <bool Parallel>
void BM_MultiplicationTable(benchmark::State& state) {
  const auto& in = table_input();
  for (auto _ : state) {
    auto t = Parallel ? groups::multiplication_table_parallel(in.g.elements(), in.lookup, in.g.conductor(),
                                                              in.g.normalization())
                      : groups::multiplication_table_serial(in.g.elements(), in.lookup, in.g.conductor(),
                                                            in.g.normalization());
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_TwistedTable(benchmark::State& state) {
  const auto grp = orbifold::quintic::group_exponents();
  const orbifold::quintic::Involution h{1, 0, 2, 3, 4};
  for (auto _ : state) {
    auto t = Parallel ? orbifold::quintic::twisted_table_parallel(h, grp)
                      : orbifold::quintic::twisted_table_serial(h, grp);
    benchmark::DoNotOptimize(t.data());
  }
}

struct ToricInput {
  toric::LatticePair lp;
  toric::PermSymmetry s;
  toric::Triangulation t;
};

const ToricInput& toric_input() {
  static const ToricInput in = [] {
    std::mt19937_64 rng(1);
    toric::RandomInstance best = toric::random_instance(rng);
    for (int i = 0; i < 40; ++i) {
      auto c = toric::random_instance(rng);
      if (c.lp.order > best.lp.order) best = c;
    }
    auto t = toric::adjusted_triangulation(best.lp, best.s);
    return ToricInput{best.lp, best.s, std::move(t)};
  }();
  return in;
}

template <bool Parallel>
void BM_OrbitRecords(benchmark::State& state) {
  const auto& in = toric_input();
  for (auto _ : state) {
    auto r = Parallel ? toric::orbit_records_parallel(in.t, in.lp, in.s) : toric::orbit_records_serial(in.t, in.lp, in.s);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_CountFixed(benchmark::State& state) {
  const auto& in = toric_input();
  for (auto _ : state) {
    auto c = Parallel ? toric::count_fixed_elements_parallel(in.lp, in.s) : toric::count_fixed_elements_serial(in.lp, in.s);
    benchmark::DoNotOptimize(c);
  }
}

template <bool Parallel>
void BM_OverlappingPairs(benchmark::State& state) {
  const auto& in = toric_input();
  for (auto _ : state) {
    auto p = Parallel ? toric::overlapping_pairs_parallel(in.t) : toric::overlapping_pairs_serial(in.t);
    benchmark::DoNotOptimize(p.data());
  }
}

}  // namespace

BENCHMARK(BM_MultiplicationTable<false>)->Name("multiplication_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicationTable<true>)->Name("multiplication_table/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwistedTable<false>)->Name("twisted_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwistedTable<true>)->Name("twisted_table/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitRecords<false>)->Name("orbit_records/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitRecords<true>)->Name("orbit_records/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountFixed<false>)->Name("count_fixed/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CountFixed<true>)->Name("count_fixed/parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OverlappingPairs<false>)->Name("overlapping_pairs/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OverlappingPairs<true>)->Name("overlapping_pairs/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
