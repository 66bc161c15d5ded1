#include <benchmark/benchmark.h>

#include "omf/montes.hpp"

using namespace omf;

namespace {

IntPoly golden_quartic() { return IntPoly{4, 8, 4, 0, 1}; }

// (x^4 + 4x^2 + 8x + 28)(x^4 + 2): two deep wildly ramified branches
IntPoly degree8() { return IntPoly{28, 8, 4, 0, 1} * IntPoly{2, 0, 0, 0, 1}; }

} // namespace

static void BM_MontesGoldenQuartic(benchmark::State& state) {
    IntPoly f = golden_quartic();
    for (auto _ : state) {
        MontesResult res = montes_factor(f, 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_MontesGoldenQuartic);

static void BM_MontesDegree8(benchmark::State& state) {
    IntPoly f = degree8();
    for (auto _ : state) {
        MontesResult res = montes_factor(f, 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_MontesDegree8);

static void BM_ResultantSubresultant(benchmark::State& state) {
    IntPoly f = degree8();
    IntPoly df = f.derivative();
    for (auto _ : state) {
        Int r = resultant(f, df);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResultantSubresultant);

static void BM_ResValuationWalk(benchmark::State& state) {
    IntPoly P{2, 1};       // x + 2
    IntPoly Q{2 + 64, 1};  // x + 66: several shared orders before separation
    for (auto _ : state) {
        ResBreakdown rb = res_valuation(P, Q, 2);
        benchmark::DoNotOptimize(rb);
    }
}
BENCHMARK(BM_ResValuationWalk);

static void BM_TowerFactorization(benchmark::State& state) {
    FieldTower t(2);
    // y^16 - y over F_2: all irreducibles of degrees dividing 4
    std::vector<TowerElem> cs(17, t.zero(0));
    cs[1] = t.one(0);
    cs[16] = t.one(0);
    TowerPoly g = t.pfrom_coeffs(0, std::move(cs));
    for (auto _ : state) {
        auto fs = factor_poly(t, g);
        benchmark::DoNotOptimize(fs);
    }
}
BENCHMARK(BM_TowerFactorization);

BENCHMARK_MAIN();
