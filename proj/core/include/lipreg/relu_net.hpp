#pragma once

#include <cstddef>
#include <vector>

#include "lipreg/cpwl.hpp"

namespace lipreg {

/// Parameters theta = (K, v, w, b, c0, c1) of a univariate two-layer ReLU
/// network with a skip connection:
///
///     f(x) = c0 + c1*x + sum_k v_k * ReLU(w_k*x - b_k).
///
/// The conversion to CPWL form requires every inner weight w_k to be
/// nonzero (a zero inner weight contributes only a constant, which belongs
/// in c0).
struct ReluNetParams {
    std::vector<double> v;  ///< outer weights
    std::vector<double> w;  ///< inner weights
    std::vector<double> b;  ///< inner biases
    double c0 = 0.0;        ///< output bias
    double c1 = 0.0;        ///< skip-connection weight

    std::size_t width() const noexcept { return v.size(); }
};

/// Direct evaluation of the network, independent of any CPWL conversion.
double evaluate(const ReluNetParams& p, double x);

/// Weight decay R(theta) = sum_k (v_k^2 + w_k^2) / 2.
double weight_decay(const ReluNetParams& p);

/// Balanced-weight conversion: v_k = sign(a_k)*sqrt(|a_k|), w_k = sqrt(|a_k|),
/// b_k = sqrt(|a_k|)*tau_k. Guarantees |v_k| = |w_k| exactly and
/// weight_decay(theta) = tv2(f).
ReluNetParams cpwl_to_relu_network(const CpwlFunction& f);

/// Inverse direction. Positive-homogeneity folds each neuron into a knot at
/// b_k/w_k with slope change v_k*|w_k|; neurons with w_k < 0 additionally
/// shed an affine part into (c0, c1). Coincident knots merge and cancelled
/// coefficients drop. Throws std::invalid_argument if any w_k is zero.
CpwlFunction relu_network_to_cpwl(const ReluNetParams& p);

} // namespace lipreg
