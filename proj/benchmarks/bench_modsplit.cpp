#include <benchmark/benchmark.h>

#include "modsplit/cubic.hpp"
#include "modsplit/residue.hpp"
#include "modsplit/sampling.hpp"
#include "modsplit/splitting.hpp"
#include "modsplit/verifiers.hpp"

using namespace modsplit;

static void BM_Legendre(benchmark::State& st) {
    ExactInt a("123456789012345678901234567890");
    for (auto _ : st) benchmark::DoNotOptimize(legendre(a, 1000003));
}
BENCHMARK(BM_Legendre);

static void BM_SquarefreePart(benchmark::State& st) {
    ExactRat d(ExactInt("-98765432123456"), ExactInt(3600));
    for (auto _ : st) benchmark::DoNotOptimize(squarefree_part(d));
}
BENCHMARK(BM_SquarefreePart);

static void BM_ResultantCubicFamily(benchmark::State& st) {
    const auto& cu = Registry::builtin().cubic();
    IntPoly g = cu.g2 * cu.g6 * cu.g12;
    for (auto _ : st) benchmark::DoNotOptimize(resultant(cu.h12, g));
}
BENCHMARK(BM_ResultantCubicFamily)->Unit(benchmark::kMillisecond);

// Grid size p^(2 ell): the dominant cost of every enumeration.
static void BM_Enumerate22(benchmark::State& st) {
    const auto& c = get_curve(22);
    const int ell = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_form(c.f, c.degree(), 2, ell, {}, 1));
    st.SetComplexityN(1L << (2 * ell));
}
BENCHMARK(BM_Enumerate22)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

static void BM_Table4Row(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(table4_unramified(static_cast<int>(st.range(0)), 1));
}
BENCHMARK(BM_Table4Row)->Arg(22)->Arg(40)->Arg(71)->Unit(benchmark::kMillisecond);

static void BM_Sample(benchmark::State& st) {
    const auto& c = get_curve(30);
    for (auto _ : st) benchmark::DoNotOptimize(sample_points(c, st.range(0), 1));
}
BENCHMARK(BM_Sample)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ClassifyReduction(benchmark::State& st) {
    ExactRat u(ExactInt(-9), ExactInt(8));
    for (auto _ : st) benchmark::DoNotOptimize(classify_reduction(u, 13));
}
BENCHMARK(BM_ClassifyReduction);

BENCHMARK_MAIN();
