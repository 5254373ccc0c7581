#include <benchmark/benchmark.h>

#include "magicsq/charpoly.hpp"
#include "magicsq/compound.hpp"
#include "magicsq/fixtures.hpp"
#include "magicsq/magic_props.hpp"
#include "magicsq/spectral.hpp"

using namespace magicsq;

static void BM_Kron(benchmark::State& state) {
    const IntSquare e = ones_matrix(static_cast<int>(state.range(0)));
    const IntSquare m = fixtures::m3_lo_shu();
    for (auto _ : state) benchmark::DoNotOptimize(kron(e, m));
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(16)->Arg(64);

static void BM_CharpolyExact(benchmark::State& state) {
    const IntSquare m = state.range(0) == 9    ? fixtures::m9_a()
                        : state.range(0) == 12 ? fixtures::m12_a()
                                               : fixtures::m16_a();
    for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(m));
}
BENCHMARK(BM_CharpolyExact)->Arg(9)->Arg(12)->Arg(16);

static void BM_JacobiSingularValues(benchmark::State& state) {
    const IntSquare m = state.range(0) == 9 ? fixtures::m9_a() : fixtures::m16_a();
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_singular_values(m));
}
BENCHMARK(BM_JacobiSingularValues)->Arg(9)->Arg(16);

static void BM_CheckPandiagonal(benchmark::State& state) {
    const IntSquare m = fixtures::m16_a();
    for (auto _ : state) benchmark::DoNotOptimize(check_pandiagonal(m));
}
BENCHMARK(BM_CheckPandiagonal);

static void BM_EulerCompose(benchmark::State& state) {
    const CompoundPair pair =
        make_compound_pair(fixtures::m4_pandiagonal(), fixtures::m4_pandiagonal());
    for (auto _ : state) benchmark::DoNotOptimize(euler_compose(pair));
}
BENCHMARK(BM_EulerCompose);

static void BM_CompoundChainDepth2(benchmark::State& state) {
    const IntSquare m3 = fixtures::m3_lo_shu();
    for (auto _ : state) benchmark::DoNotOptimize(compound_chain(m3, 2));
}
BENCHMARK(BM_CompoundChainDepth2);

BENCHMARK_MAIN();
