#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lipreg/admm.hpp"
#include "lipreg/fit.hpp"
#include "lipreg/prox.hpp"
#include "lipreg/sparsest.hpp"
#include "lipreg/synthetic.hpp"

namespace {

lipreg::DataSet make_data(std::size_t m, std::uint64_t seed) {
    lipreg::GenConfig cfg;
    cfg.m = m;
    cfg.ground_truth = lipreg::preset_six_region();
    cfg.sigma = 0.02;
    cfg.seed = seed;
    return lipreg::generate_data(cfg);
}

void BM_AdmmLipschitz(benchmark::State& state) {
    const auto data = make_data(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) {
        auto rep = lipreg::admm_lipschitz(data, 0.029);
        benchmark::DoNotOptimize(rep.z.data());
    }
}
BENCHMARK(BM_AdmmLipschitz)->Arg(64)->Arg(256)->Arg(1024);

void BM_AdmmHybrid(benchmark::State& state) {
    const auto data = make_data(static_cast<std::size_t>(state.range(0)), 18);
    for (auto _ : state) {
        auto rep = lipreg::admm_hybrid(data, 1e-3, 0.66);
        benchmark::DoNotOptimize(rep.z.data());
    }
}
BENCHMARK(BM_AdmmHybrid)->Arg(64)->Arg(256)->Arg(1024);

void BM_SparsestInterpolant(benchmark::State& state) {
    const auto data = make_data(static_cast<std::size_t>(state.range(0)), 19);
    for (auto _ : state) {
        auto f = lipreg::sparsest_interpolant(data);
        benchmark::DoNotOptimize(f.num_knots());
    }
}
BENCHMARK(BM_SparsestInterpolant)->Arg(64)->Arg(1024)->Arg(16384);

void BM_ProxSupNorm(benchmark::State& state) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v) x = dist(rng);
    for (auto _ : state) {
        auto u = lipreg::prox_linf_norm(v, 0.5);
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_ProxSupNorm)->Arg(64)->Arg(1024)->Arg(16384);

} // namespace

BENCHMARK_MAIN();
