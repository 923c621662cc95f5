#include <benchmark/benchmark.h>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/families/builders.hpp"
#include "qpoly/graphs/analysis.hpp"
#include "qpoly/scanner/scan.hpp"
#include "qpoly/schemes/qpoly.hpp"
#include "qpoly/tridiag/system.hpp"

namespace {

using namespace qpoly;
namespace fam = qpoly::families;

void BM_IsolateRoots(benchmark::State& state) {
  // Product of (x - i/3) over i = 1..n times x^2 - 2.
  exact::RationalPoly p{-2, 0, 1};
  for (int i = 1; i <= state.range(0); ++i) p *= exact::RationalPoly{exact::Rational(-i, 3), 1};
  for (auto _ : state) benchmark::DoNotOptimize(exact::isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(16);

void BM_TridiagonalSpectrum(benchmark::State& state) {
  tridiag::RandomSystems gen(3);
  const auto s = gen.next(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tridiag::spectrum(s));
}
BENCHMARK(BM_TridiagonalSpectrum)->DenseRange(2, 6, 2);

void BM_TridiagonalBounds(benchmark::State& state) {
  tridiag::RandomSystems gen(4);
  const auto s = gen.next(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto r = tridiag::spectrum(s);
    benchmark::DoNotOptimize(tridiag::thm1_part1(s, r));
    benchmark::DoNotOptimize(tridiag::thm1_part2(s, r));
  }
}
BENCHMARK(BM_TridiagonalBounds)->DenseRange(3, 6, 3);

void BM_GraphSpectrum(benchmark::State& state) {
  const auto g = fam::graph_by_name(state.range(0) == 0 ? "petersen" : "dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(graphs::spectrum_graph(g));
}
BENCHMARK(BM_GraphSpectrum)->Arg(0)->Arg(1);

void BM_VertexBounds(benchmark::State& state) {
  const auto g = fam::heawood();
  for (auto _ : state) benchmark::DoNotOptimize(graphs::kpy_check(g));
}
BENCHMARK(BM_VertexBounds);

void BM_SchemeEigendata(benchmark::State& state) {
  const auto s = schemes::scheme_from_graph(fam::graph_by_name(state.range(0) == 0 ? "heawood" : "biplane11"));
  for (auto _ : state) {
    const auto e = schemes::eigendata(s);
    benchmark::DoNotOptimize(schemes::krein(e));
  }
}
BENCHMARK(BM_SchemeEigendata)->Arg(0)->Arg(1);

void BM_DualTightClassify(benchmark::State& state) {
  const auto s = schemes::scheme_from_graph(fam::heawood());
  for (auto _ : state) benchmark::DoNotOptimize(schemes::thm51_classify(s));
}
BENCHMARK(BM_DualTightClassify);

void BM_ScanGrid(benchmark::State& state) {
  scanner::ScanConfig cfg;
  cfg.m_max = static_cast<long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scanner::scan(cfg, [](const scanner::CandidateResult&) {}));
}
BENCHMARK(BM_ScanGrid)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
