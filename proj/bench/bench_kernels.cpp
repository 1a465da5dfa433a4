// Serial vs OpenMP kernels on certificates produced by one lifting step.
//
//   bench_kernels --benchmark_filter=prune

#include <benchmark/benchmark.h>

#include <map>

#include "tverberg/algos.hpp"
#include "tverberg/io.hpp"
#include "tverberg/kernels.hpp"

using namespace tverberg;

namespace {

struct Fixture {
  PointSet points;
  TverbergCertificate lifted;  // unpruned
  TverbergCertificate pruned;
};

Fixture make_fixture(std::size_t d, std::size_t n) {
  Fixture f;
  f.points = generate_points(Distribution::gauss, d, n, 42);
  const PointSet projected = f.points.coordinate_slice(0, d - 1);
  const Flat h = Flat::coordinate(Point(d, 0.0), 0, d - 1);
  f.lifted = lift_partition(f.points, h, simple_tverberg(projected, Exec::serial), Exec::serial);
  f.pruned = f.lifted;
  prune_parts(f.pruned, f.points, Exec::serial);
  return f;
}

const Fixture& fixture(std::size_t d, std::size_t n) {
  static std::map<std::pair<std::size_t, std::size_t>, Fixture> cache;
  auto it = cache.find({d, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(d, n), make_fixture(d, n)).first;
  return it->second;
}

Exec mode(const benchmark::State& state) { return state.range(2) ? Exec::parallel : Exec::serial; }

void BM_PartPoints(benchmark::State& state) {
  const auto& f = fixture(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(part_points(f.points, f.pruned, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.pruned.part_count()));
}

void BM_PruneParts(benchmark::State& state) {
  const auto& f = fixture(state.range(0), state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    TverbergCertificate c = f.lifted;
    state.ResumeTiming();
    prune_parts(c, f.points, mode(state));
    benchmark::DoNotOptimize(c.ids.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.lifted.part_count()));
}

void BM_PartResiduals(benchmark::State& state) {
  const auto& f = fixture(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(part_residuals(f.points, f.pruned, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.pruned.part_count()));
}

void BM_SimpleTverberg(benchmark::State& state) {
  const auto& f = fixture(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(simple_tverberg(f.points, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.points.size()));
}

void matrix(benchmark::internal::Benchmark* b) {
  b->ArgNames({"d", "n", "omp"});
  for (std::int64_t d : {3, 6})
    for (std::int64_t n : {1 << 14, 1 << 18})
      for (std::int64_t omp : {0, 1}) b->Args({d, n, omp});
  b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_PartPoints)->Apply(matrix);
BENCHMARK(BM_PruneParts)->Apply(matrix);
BENCHMARK(BM_PartResiduals)->Apply(matrix);
BENCHMARK(BM_SimpleTverberg)->Apply(matrix);

BENCHMARK_MAIN();
