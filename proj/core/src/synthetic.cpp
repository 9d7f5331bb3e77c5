#include "lipreg/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lipreg {

namespace {

double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - next_uniform(rng);  // (0, 1]
    const double u2 = next_uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

DataSet generate_data(const GenConfig& cfg) {
    if (cfg.m < 1) throw std::invalid_argument("generate_data: m must be >= 1");
    if (cfg.sigma < 0.0 || cfg.outlier_sigma < 0.0)
        throw std::invalid_argument("generate_data: negative standard deviation");
    if (cfg.outlier_frac < 0.0 || cfg.outlier_frac >= 1.0)
        throw std::invalid_argument("generate_data: outlier_frac must lie in [0, 1)");

    std::mt19937_64 rng(cfg.seed);
    std::vector<double> xs(cfg.m);
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
        for (auto& x : xs) x = next_uniform(rng);
        std::sort(xs.begin(), xs.end());
        ok = true;
        for (std::size_t i = 1; i < cfg.m; ++i)
            if (xs[i] - xs[i - 1] < 1e-12) { ok = false; break; }
    }
    if (!ok) throw std::runtime_error("generate_data: could not separate abscissas");

    const std::size_t n_out =
        static_cast<std::size_t>(std::llround(cfg.outlier_frac * static_cast<double>(cfg.m)));
    std::vector<std::size_t> order(cfg.m);
    for (std::size_t i = 0; i < cfg.m; ++i) order[i] = i;
    std::vector<bool> outlier(cfg.m, false);
    for (std::size_t i = 0; i < n_out; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(next_uniform(rng) * static_cast<double>(cfg.m - i));
        std::swap(order[i], order[std::min(j, cfg.m - 1)]);
        outlier[order[i]] = true;
    }

    std::vector<double> ys(cfg.m);
    for (std::size_t i = 0; i < cfg.m; ++i) {
        const double sd = outlier[i] ? cfg.outlier_sigma : cfg.sigma;
        ys[i] = cfg.ground_truth(xs[i]) + (sd > 0.0 ? sd * next_normal(rng) : 0.0);
    }
    return DataSet(std::move(xs), std::move(ys));
}

CpwlFunction preset_six_region() {
    return CpwlFunction(0.3, 0.6, {0.15, 0.3, 0.5, 0.7, 0.85}, {-1.0, 0.9, -1.1, 0.9, -0.8});
}

CpwlFunction preset_relu_half() {
    return CpwlFunction(0.0, 0.0, {0.5}, {1.0});
}

} // namespace lipreg
