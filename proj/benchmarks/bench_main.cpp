#include <benchmark/benchmark.h>

#include <array>

#include "excc/approx_rates.hpp"
#include "excc/body.hpp"
#include "excc/measures.hpp"
#include "excc/orthopoly.hpp"

namespace {

void BM_LatticeLpBall(benchmark::State& state) {
  const auto body = excc::Body::lp_ball(0.5, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = excc::lattice(body, n);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_LatticeLpBall)->Arg(16)->Arg(64)->Arg(256);

void BM_LatticeSimplex3(benchmark::State& state) {
  const auto body = excc::Body::simplex(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = excc::lattice(body, n);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_LatticeSimplex3)->Arg(8)->Arg(32);

void BM_BasisTorus(benchmark::State& state) {
  const auto measure = excc::MeasureModel::torus(2);
  const auto body = excc::Body::simplex(2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = excc::orthonormal_basis(measure, body, n);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_BasisTorus)->Arg(16)->Arg(64);

void BM_BergmanLog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const excc::BergmanEvaluator kernel(
      excc::orthonormal_basis(excc::MeasureModel::sphere(2), excc::Body::axis_cross(2), n));
  const std::array<excc::Complex, 2> z{excc::Complex(2.0, 0.0), excc::Complex(0.0, 2.0)};
  for (auto _ : state) benchmark::DoNotOptimize(excc::bergman_log_estimate(kernel, z));
}
BENCHMARK(BM_BergmanLog)->Arg(32)->Arg(128);

void BM_MinimaxXY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = excc::minimax_xy(n);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MinimaxXY)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
