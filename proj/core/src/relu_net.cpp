#include "lipreg/relu_net.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lipreg {

namespace {

void check_shapes(const ReluNetParams& p) {
    if (p.v.size() != p.w.size() || p.v.size() != p.b.size())
        throw std::invalid_argument("ReluNetParams: v, w, b must have equal length");
}

} // namespace

double evaluate(const ReluNetParams& p, double x) {
    check_shapes(p);
    double value = p.c0 + p.c1 * x;
    for (std::size_t k = 0; k < p.width(); ++k)
        value += p.v[k] * std::max(0.0, p.w[k] * x - p.b[k]);
    return value;
}

double weight_decay(const ReluNetParams& p) {
    check_shapes(p);
    double r = 0.0;
    for (std::size_t k = 0; k < p.width(); ++k)
        r += 0.5 * (p.v[k] * p.v[k] + p.w[k] * p.w[k]);
    return r;
}

ReluNetParams cpwl_to_relu_network(const CpwlFunction& f) {
    ReluNetParams p;
    p.c0 = f.c0();
    p.c1 = f.c1();
    const std::size_t K = f.num_knots();
    p.v.reserve(K);
    p.w.reserve(K);
    p.b.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double a = f.coeffs()[k];
        const double root = std::sqrt(std::abs(a));
        p.w.push_back(root);
        p.v.push_back(std::copysign(root, a));  // |v_k| == |w_k| bit-exactly
        p.b.push_back(root * f.knots()[k]);
    }
    return p;
}

CpwlFunction relu_network_to_cpwl(const ReluNetParams& p) {
    check_shapes(p);
    double c0 = p.c0;
    double c1 = p.c1;
    std::vector<double> knots;
    std::vector<double> coeffs;
    knots.reserve(p.width());
    coeffs.reserve(p.width());
    for (std::size_t k = 0; k < p.width(); ++k) {
        const double w = p.w[k];
        if (w == 0.0)
            throw std::invalid_argument("relu_network_to_cpwl: zero inner weight");
        const double tau = p.b[k] / w;
        const double a = p.v[k] * std::abs(w);
        knots.push_back(tau);
        coeffs.push_back(a);
        if (w < 0.0) {
            // v*ReLU(w*x - b) = a*ReLU(x - tau) - a*(x - tau) for w < 0
            c1 -= a;
            c0 += a * tau;
        }
    }
    return CpwlFunction(c0, c1, std::move(knots), std::move(coeffs));
}

} // namespace lipreg
