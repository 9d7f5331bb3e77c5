#pragma once

#include <optional>
#include <vector>

#include "lipreg/admm.hpp"
#include "lipreg/cpwl.hpp"
#include "lipreg/dataset.hpp"

namespace lipreg {

struct FitMetrics {
    double loss = 0.0;       ///< 1/2 sum (z_m - y_m)^2
    double lipschitz = 0.0;  ///< Lipschitz constant of the model
    double tv2 = 0.0;        ///< second-order total variation of the model
    std::size_t num_regions = 1;
    double objective = 0.0;  ///< loss + lambda * (regularizer of the mode)
    double lambda = 0.0;
    std::optional<double> lbar;  ///< set for the constrained mode
};

struct FitResult {
    CpwlFunction model{0.0, 0.0};
    std::vector<double> z;
    FitMetrics metrics;
    AdmmReport solver;
};

/// End-to-end pipelines: solve the reduced problem for the optimal sample
/// vector z, then reconstruct the sparsest CPWL interpolant of (x, z).
FitResult fit_lipschitz(const DataSet& data, double lambda, const AdmmConfig& cfg = {});
FitResult fit_hybrid(const DataSet& data, double lambda, double lbar,
                     const AdmmConfig& cfg = {});

enum class FitMode { lipschitz, hybrid };

/// Independent fits over a lambda grid, ordered as given. Warm starting
/// reuses the previous converged z; results match cold starts within solver
/// tolerance because the reduced optima are unique.
std::vector<FitResult> sweep(const DataSet& data, const std::vector<double>& lambdas,
                             FitMode mode, std::optional<double> lbar = std::nullopt,
                             const AdmmConfig& cfg = {}, bool warm_start = true);

} // namespace lipreg
