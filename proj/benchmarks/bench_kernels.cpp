// Microbenchmarks for the coefficient-table kernels and the polynomial
// construction routes they depend on.

#include <benchmark/benchmark.h>

#include "appell/coeffs.hpp"
#include "appell/hermite.hpp"
#include "appell/identities.hpp"
#include "appell/series.hpp"

namespace {

void BM_TableRecurrence(benchmark::State& state) {
    const auto max_n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(appell::CoeffTable::build_recurrence(max_n));
    }
}
BENCHMARK(BM_TableRecurrence)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_ClosedFormRow(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        for (unsigned l = 0; 2 * l <= n; ++l) {
            benchmark::DoNotOptimize(appell::closed_form_coefficient(n, l));
        }
    }
}
BENCHMARK(BM_ClosedFormRow)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_AppellShiftChain(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        appell::BiPoly p(1);
        for (unsigned i = 0; i < n; ++i) {
            p = appell::apply_appell_operator(p);
        }
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_AppellShiftChain)->Arg(8)->Arg(16)->Arg(24)->Arg(48);

void BM_SeriesExpOracle(benchmark::State& state) {
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(appell::exp(appell::TruncSeries::generating_argument(order)));
    }
}
BENCHMARK(BM_SeriesExpOracle)->Arg(8)->Arg(16)->Arg(24);

void BM_Theorem2Point(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto n = static_cast<unsigned>(state.range(1));
    const appell::CoeffTable table = appell::CoeffTable::build_recurrence(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(appell::theorem2_rhs(k, n, table));
    }
}
BENCHMARK(BM_Theorem2Point)->Args({4, 4})->Args({8, 8})->Args({12, 12});

}  // namespace

BENCHMARK_MAIN();
