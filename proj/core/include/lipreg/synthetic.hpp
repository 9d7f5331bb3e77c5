#pragma once

#include <cstdint>

#include "lipreg/cpwl.hpp"
#include "lipreg/dataset.hpp"

namespace lipreg {

/// Synthetic-data recipe. Reproducibility contract: the stream is
/// std::mt19937_64 seeded with `seed`; uniforms take the top 53 bits;
/// normals come from Box-Muller on two uniforms (cosine branch only).
/// Draw order: abscissas (whole batch redrawn on a sub-1e-12 collision),
/// then the outlier subset via partial Fisher-Yates, then one normal per
/// sample in index order. Identical seeds give identical data sets.
struct GenConfig {
    std::size_t m = 50;
    CpwlFunction ground_truth{0.0, 0.0};
    double sigma = 0.0;             ///< noise standard deviation, >= 0
    std::uint64_t seed = 0;
    double outlier_frac = 0.0;      ///< fraction of samples drawn with outlier_sigma
    double outlier_sigma = 0.0;
};

/// Samples x_m uniformly on [0, 1] (sorted) and y_m = f0(x_m) + noise.
DataSet generate_data(const GenConfig& cfg);

/// Bundled ground truths. The six-region preset is a fixed CPWL function on
/// [0, 1] with knots (0.15, 0.3, 0.5, 0.7, 0.85), region slopes
/// (0.6, -0.4, 0.5, -0.6, 0.3, -0.5) and f(0) = 0.3; its Lipschitz constant
/// is 0.6. The other preset is the shifted ramp max(0, x - 1/2).
CpwlFunction preset_six_region();
CpwlFunction preset_relu_half();

} // namespace lipreg
