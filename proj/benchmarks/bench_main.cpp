#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "rdl/conjugate.hpp"
#include "rdl/diagnostics.hpp"
#include "rdl/generate.hpp"
#include "rdl/lsip.hpp"
#include "rdl/mappings.hpp"

namespace {

// Scalar grid {-1, ..., 1} on both sides with the product pairing; n is made odd so 0 is a grid point.
rdl::TabulatedFunction random_scalar_function(std::size_t n, std::uint64_t seed) {
  n |= 1;
  std::vector<std::string> labels;
  std::vector<double> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(-1.0 + 2.0 * double(i) / double(n - 1));
    labels.push_back("z" + std::to_string(i));
  }
  std::vector<std::vector<double>> pairing(n, std::vector<double>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) pairing[a][b] = pts[a] * pts[b];
  auto space = std::make_shared<const rdl::PairedSpace>(labels, labels, pairing, labels[n / 2], labels[n / 2]);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  std::vector<rdl::ExtReal> values(n);
  for (auto& v : values) v = rdl::ExtReal(val(rng));
  return rdl::TabulatedFunction(space, rdl::Side::Primal, values);
}

void BM_Conjugate(benchmark::State& state) {
  const auto h = random_scalar_function(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rdl::conjugate(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Conjugate)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_PolygonSolve(benchmark::State& state) {
  const auto inst = rdl::lsip_polygon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rdl::solve_robust_counterpart(inst));
}
BENCHMARK(BM_PolygonSolve)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_PolygonHaarDual(benchmark::State& state) {
  const auto inst = rdl::lsip_polygon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rdl::haar_dual(inst));
}
BENCHMARK(BM_PolygonHaarDual)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_Diagnose(benchmark::State& state) {
  rdl::FamilyGenOptions opts;
  opts.nx = opts.nx_star = static_cast<std::size_t>(state.range(0));
  opts.nu = 4;
  opts.ny = 4;
  const auto fam = rdl::random_family(3, opts);
  for (auto _ : state) benchmark::DoNotOptimize(rdl::diagnose(fam));
}
BENCHMARK(BM_Diagnose)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_AScriptClosedForm(benchmark::State& state) {
  rdl::FamilyGenOptions opts;
  opts.nx = opts.nx_star = 16;
  opts.nu = 8;
  opts.ny = 8;
  const auto fam = rdl::random_family(5, opts);
  const auto& xs = fam.decision().label(rdl::Side::Dual, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rdl::a_script(fam, xs, 0.5));
}
BENCHMARK(BM_AScriptClosedForm);

}  // namespace
BENCHMARK_MAIN();
