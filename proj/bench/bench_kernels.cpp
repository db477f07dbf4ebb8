// Serial reference vs OpenMP for the per-word check kernels. Every iteration
// starts from freshly loaded objects so memo tables do not carry over.
#include "qc/calculus.hpp"
#include "qc/verify_calculus.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace qc;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "omp x" + std::to_string(omp_get_max_threads()) : "serial"); }

void BM_HopfAxioms(benchmark::State& state) {
    const Catalog& cat = Catalog::builtin();
    for (auto _ : state) {
        state.PauseTiming();
        HopfStructure h = load_algebra(cat, "ekappa_dual");
        state.ResumeTiming();
        benchmark::DoNotOptimize(check_hopf_axioms(h, 4, exec_of(state)));
    }
    label(state);
}

void BM_DSquared(benchmark::State& state) {
    const Catalog& cat = Catalog::builtin();
    for (auto _ : state) {
        state.PauseTiming();
        Calculus c = load_calculus(cat, "fourDplus");
        state.ResumeTiming();
        benchmark::DoNotOptimize(check_d_squared(c, 4, exec_of(state)));
    }
    label(state);
}

void BM_Brackets(benchmark::State& state) {
    const Catalog& cat = Catalog::builtin();
    const CatalogEntry& table = cat.get("table.bracket.4dminus");
    for (auto _ : state) {
        state.PauseTiming();
        Calculus c = load_calculus(cat, "fourDminus");
        FunctionalAlgebra fa = FunctionalAlgebra::of(c, cat.get("calculus.fourDminus").list("functionals"));
        state.ResumeTiming();
        benchmark::DoNotOptimize(check_bracket_table(fa, table, 4, exec_of(state)));
    }
    label(state);
}

}  // namespace

BENCHMARK(BM_HopfAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DSquared)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Brackets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
