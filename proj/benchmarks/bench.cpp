#include <benchmark/benchmark.h>

#include "nablalmo/alexander.hpp"
#include "nablalmo/gaussian.hpp"
#include "nablalmo/mmr.hpp"

using namespace nablalmo;

namespace {

void BM_SeifertDeterminant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  QMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i, j) = static_cast<long>((3 * i + 5 * j) % 7) - 3;
  for (std::size_t i = 0; i + 1 < n; i += 2) v(i, i + 1) = v(i + 1, i) + 1;
  const SeifertMatrix s(v);
  for (auto _ : state) benchmark::DoNotOptimize(seifert_determinant(s));
}
BENCHMARK(BM_SeifertDeterminant)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_GaussianIntegral(benchmark::State& state) {
  const FramedLinkMatrix m({"x", "y", "a", "b"}, {"x", "y"}, QMatrix{{1, 1, 1, 0}, {1, -2, 0, 1}, {1, 0, 0, 2}, {0, 1, 2, 1}});
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_integral(m, degree));
}
BENCHMARK(BM_GaussianIntegral)->Arg(1)->Arg(2)->Arg(3);

void BM_LmoRoundTrip(benchmark::State& state) {
  const ZPoly p({1, 1, 0, 7});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nabla_from_lmo_wheel_data(lmo_wheel_data(p, 25, order), order));
}
BENCHMARK(BM_LmoRoundTrip)->Arg(8)->Arg(16)->Arg(24);

}  // namespace
BENCHMARK_MAIN();
