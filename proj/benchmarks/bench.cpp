#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "scgeo/bisector.hpp"
#include "scgeo/certificate.hpp"
#include "scgeo/convex.hpp"
#include "scgeo/curves.hpp"
#include "scgeo/norm.hpp"
#include "scgeo/rng.hpp"

using namespace scgeo;

namespace {

NormModel make(const std::string& text) {
  std::string err;
  return NormModel(*NormSpec::parse(text, err));
}

std::vector<Vec2> cloud(int n) {
  SplitMix64 rng(1);
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back({rng.next_double(), rng.next_double()});
  return pts;
}

void BM_Evaluate(benchmark::State& state, const char* spec) {
  const NormModel n = make(spec);
  SplitMix64 rng(2);
  const Vec2 x{rng.next_double() + 0.1, rng.next_double() + 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(n.evaluate(x));
}
BENCHMARK_CAPTURE(BM_Evaluate, euclid, "euclid");
BENCHMARK_CAPTURE(BM_Evaluate, lp4, "lp:4");

void BM_DualDirection(benchmark::State& state) {
  const NormModel n = make("lp:4");
  for (auto _ : state) benchmark::DoNotOptimize(n.dual_direction({0.6, 0.8}));
}
BENCHMARK(BM_DualDirection);

void BM_Alpha0(benchmark::State& state) {
  const NormModel n = make("lp:4");
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n.alpha0(grid));
}
BENCHMARK(BM_Alpha0)->Arg(1024)->Arg(4096);

void BM_ChordEndpoints(benchmark::State& state) {
  const NormModel n = make("lp:4");
  for (auto _ : state) benchmark::DoNotOptimize(chord_endpoints(n, {1, 0}, 0.5));
}
BENCHMARK(BM_ChordEndpoints);

void BM_TraceBisector(benchmark::State& state) {
  const NormModel n = make("lp:4");
  const Segment seg{{0, 0}, {2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(trace_bisector(n, seg, 128));
}
BENCHMARK(BM_TraceBisector)->Unit(benchmark::kMillisecond);

void BM_KappaEstimate(benchmark::State& state) {
  const NormModel n = make("lp:4");
  for (auto _ : state) benchmark::DoNotOptimize(kappa_estimate(n, 256, 256));
}
BENCHMARK(BM_KappaEstimate)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = cloud(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Arg(256)->Arg(4096);

void BM_MeanWidth(benchmark::State& state) {
  const auto pts = cloud(512);
  for (auto _ : state) benchmark::DoNotOptimize(mean_width(pts));
}
BENCHMARK(BM_MeanWidth)->Unit(benchmark::kMillisecond);

void BM_SelfContracted(benchmark::State& state) {
  // monotone segment: self-contracted, so the check never exits early
  const NormModel n = make("lp:4");
  std::vector<Vec2> pts;
  const int count = static_cast<int>(state.range(0));
  pts.reserve(count);
  for (int k = 0; k < count; ++k) pts.push_back({0.01 * k, 0.02 * k});
  for (auto _ : state) benchmark::DoNotOptimize(is_self_contracted(n, pts));
}
BENCHMARK(BM_SelfContracted)->Arg(100)->Arg(400);

void BM_GenerateGreedy(benchmark::State& state) {
  const NormModel n = make("lp:4");
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_greedy(n, static_cast<int>(state.range(0)), 1.0, 3));
}
BENCHMARK(BM_GenerateGreedy)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SeparatingVector(benchmark::State& state) {
  const NormModel n = make("lp:4");
  const auto pts = generate_greedy(n, 120, 1.0, 42).curve.vertices;
  const ConstantsBundle b = derive_constants_from(1.230959417340775, 0.1966599461439313);
  for (auto _ : state)
    benchmark::DoNotOptimize(separating_vector(n, pts, 10, pts.size() / 2, b));
}
BENCHMARK(BM_SeparatingVector);

void BM_WidthDecrement(benchmark::State& state) {
  const NormModel n = make("lp:4");
  const auto pts = generate_greedy(n, 120, 1.0, 42).curve.vertices;
  const ConstantsBundle b = derive_constants_from(1.230959417340775, 0.1966599461439313);
  for (auto _ : state) benchmark::DoNotOptimize(width_decrement_check(pts, n, b));
}
BENCHMARK(BM_WidthDecrement)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
