// bench_core.cpp — Microbenchmarks for the hot paths

#include <benchmark/benchmark.h>

#include "cavex/dynamics.hpp"
#include "cavex/spectra.hpp"

using namespace cavex;

namespace {

SystemParams params_for(int n, int n_ex) {
    SystemParams params;
    params.n_cavities = n;
    params.fock_cutoff = n_ex;
    params.g = 1.0;
    params.chi = 0.8;
    return params;
}

void BM_EnumerateBasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int n_ex = static_cast<int>(state.range(1));
    auto params = params_for(n, n_ex);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_basis(params, n_ex));
    }
}
BENCHMARK(BM_EnumerateBasis)->Args({3, 3})->Args({4, 4});

void BM_Orbits(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int n_ex = static_cast<int>(state.range(1));
    auto params = params_for(n, n_ex);
    auto basis = enumerate_basis(params, n_ex);
    auto group = SymmetryGroup::make(GroupKind::dihedral, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbits(basis, group));
    }
}
BENCHMARK(BM_Orbits)->Args({3, 3})->Args({4, 4});

void BM_BurnsideCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int n_ex = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(burnside_count(n, n_ex, GroupKind::dihedral));
    }
}
BENCHMARK(BM_BurnsideCount)->Args({3, 3})->Args({4, 4});

void BM_CollectiveBlockSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int n_ex = static_cast<int>(state.range(1));
    auto params = params_for(n, n_ex);
    auto basis = enumerate_basis(params, n_ex);
    auto group = SymmetryGroup::make(GroupKind::dihedral, n);
    auto collective = collective_basis(params, n_ex, group, PhaseSelector::zero);
    auto block = restrict_to(interaction_hamiltonian(params, RingTopology::ring(n), basis),
                             collective);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize(block));
    }
}
BENCHMARK(BM_CollectiveBlockSpectrum)->Args({3, 2})->Args({4, 4});

void BM_FullManifoldSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int n_ex = static_cast<int>(state.range(1));
    auto params = params_for(n, n_ex);
    auto basis = enumerate_basis(params, n_ex);
    auto h = interaction_hamiltonian(params, RingTopology::ring(n), basis);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize(h));
    }
}
BENCHMARK(BM_FullManifoldSpectrum)->Args({3, 3})->Args({4, 4});

void BM_IntegrateMoments(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_moments({1.0, 0.0, 0.0, 0.0}, 1.0, 3.0, 10.0, 1e-3));
    }
}
BENCHMARK(BM_IntegrateMoments);

void BM_ClosedFormMoments(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_moments({1.0, 0.0, 0.0, 0.0}, 1.0, 3.0, 5.0));
    }
}
BENCHMARK(BM_ClosedFormMoments);

}  // namespace

BENCHMARK_MAIN();
