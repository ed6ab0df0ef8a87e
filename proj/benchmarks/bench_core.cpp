#include <benchmark/benchmark.h>

#include <cmath>

#include "kdsim/catalogue.hpp"
#include "kdsim/classical.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/quantum.hpp"
#include "kdsim/regime.hpp"

using namespace kdsim;

namespace {

EvolutionConfig raman_nath(double area)
{
    EvolutionConfig cfg;
    cfg.potential.depth = constants.hbar * area;
    cfg.potential.k = 1.0;
    cfg.potential.envelope = Envelope::rectangular(1.0);
    cfg.total_time = 1.0;
    cfg.samples = 50;
    return cfg;
}

TrajectoryConfig sodium(double omega_osc_dt)
{
    TrajectoryConfig tc;
    tc.mass = find_builtin_particle("Na").mass;
    tc.velocity = 1000.0;
    tc.potential.k = units::two_pi / 589e-9;
    tc.potential.kind = PotentialKind::lightshift;
    tc.potential.envelope = Envelope::rectangular(5e-8);
    const double w = omega_osc_dt / 5e-8;
    tc.potential.depth = 0.5 * tc.mass * std::pow(w / tc.potential.k, 2);
    return tc;
}

}  // namespace

static void BM_evolve_rectangular(benchmark::State& state)
{
    const auto cfg = raman_nath(static_cast<double>(state.range(0)));
    const auto lattice = default_lattice(cfg.potential, 0.0);
    for (auto _ : state) {
        auto r = evolve(lattice, ModeAmplitudes::single(0), cfg);
        benchmark::DoNotOptimize(r.norm_drift);
    }
}
BENCHMARK(BM_evolve_rectangular)->Arg(4)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_evolve_gaussian(benchmark::State& state)
{
    auto cfg = raman_nath(20.0);
    cfg.potential.envelope = Envelope::gaussian(1.0 / 6.0);
    cfg.total_time = cfg.potential.envelope.end_time();
    const auto lattice = default_lattice(cfg.potential, 0.0);
    for (auto _ : state) {
        auto r = evolve(lattice, ModeAmplitudes::single(0), cfg);
        benchmark::DoNotOptimize(r.norm_drift);
    }
}
BENCHMARK(BM_evolve_gaussian)->Unit(benchmark::kMillisecond);

static void BM_trajectory(benchmark::State& state)
{
    auto tc = sodium(0.3);
    tc.x0 = 1.1e-7;
    for (auto _ : state) {
        auto r = integrate_trajectory(tc);
        benchmark::DoNotOptimize(r.angle);
    }
}
BENCHMARK(BM_trajectory)->Unit(benchmark::kMicrosecond);

static void BM_ensemble(benchmark::State& state)
{
    const auto tc = sodium(0.3);
    EnsembleConfig ens;
    ens.trajectories = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto h = ensemble_histogram(ens, tc);
        benchmark::DoNotOptimize(h.total);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ensemble)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_regime_map(benchmark::State& state)
{
    for (auto _ : state) {
        auto cells = regime_map(1e-2, 1e6, 1e-3, 1e4, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(cells.data());
    }
}
BENCHMARK(BM_regime_map)->Arg(41)->Arg(201);
BENCHMARK_MAIN();
