#include <benchmark/benchmark.h>

#include "hypermoment/equations.hpp"
#include "hypermoment/hypergroup.hpp"
#include "hypermoment/measure.hpp"
#include "hypermoment/recurrence.hpp"

using namespace hypermoment;

namespace {

Point rational_point(std::size_t d) {
  Point p;
  for (std::size_t i = 0; i < d; ++i) p.emplace_back(Rational(static_cast<long>(2 * i + 3), 11));
  return p;
}

void BM_Linearization(benchmark::State& state) {
  const auto n = static_cast<MultiIndex::value_type>(state.range(0));
  using V = std::vector<Rational>;
  const auto h = Hypergroup::product(
      Hypergroup::chebyshev(1),
      Hypergroup::from_recurrence(
          Recurrence1D(V{1}, V{0}, V{0}, Recurrence1D::Tail{Rational(2, 3), 0, Rational(1, 3), 1}), n));
  for (auto _ : state) {
    const Measure m = h.linearization(MultiIndex{n, n}, MultiIndex{n, n / 2});
    benchmark::DoNotOptimize(m.support_size());
  }
}
BENCHMARK(BM_Linearization)->Arg(8)->Arg(32)->Arg(128);

void BM_ExponentialSweep(benchmark::State& state) {
  const auto h = Hypergroup::chebyshev(2);
  const auto m = exponential(h, rational_point(2));
  SweepOptions o;
  o.box = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_exponential(m, o).passed);
}
BENCHMARK(BM_ExponentialSweep)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MomentSweep(benchmark::State& state) {
  const auto h = Hypergroup::chebyshev(2);
  const auto fam = moment_family(h, rational_point(2), MultiIndex{2, 2});
  SweepOptions o;
  o.box = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_moment(fam, o).passed);
}
BENCHMARK(BM_MomentSweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
