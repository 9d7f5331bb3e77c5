#include "lipreg/prox.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace lipreg {

namespace {

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

std::vector<double> prox_l1_norm(std::span<const double> v, double tau) {
    check_positive(tau, "prox_l1_norm: tau");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = std::copysign(std::max(0.0, std::abs(v[i]) - tau), v[i]);
    return out;
}

std::vector<double> prox_linf_norm(std::span<const double> v, double tau) {
    check_positive(tau, "prox_linf_norm: tau");
    std::vector<double> p = project_l1_ball(v, tau);
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] - p[i];
    return p;
}

std::vector<double> project_l1_ball(std::span<const double> v, double radius) {
    check_positive(radius, "project_l1_ball: radius");
    double norm1 = 0.0;
    for (double x : v) norm1 += std::abs(x);
    std::vector<double> out(v.begin(), v.end());
    if (norm1 <= radius) return out;

    std::vector<double> mag(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mag[i] = std::abs(v[i]);
    std::sort(mag.begin(), mag.end(), std::greater<double>());
    double cumsum = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < mag.size(); ++j) {
        cumsum += mag[j];
        const double candidate = (cumsum - radius) / static_cast<double>(j + 1);
        if (mag[j] - candidate > 0.0)
            theta = candidate;
        else
            break;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::copysign(std::max(0.0, std::abs(out[i]) - theta), out[i]);
    return out;
}

std::vector<double> project_linf_ball(std::span<const double> v, double radius) {
    check_positive(radius, "project_linf_ball: radius");
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x = std::clamp(x, -radius, radius);
    return out;
}

} // namespace lipreg
