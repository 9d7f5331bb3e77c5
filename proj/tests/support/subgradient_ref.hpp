#pragma once

// Long-run projected-subgradient references for the two reduced problems,
// independent of the ADMM implementation. Both run in the sample domain
// with diminishing steps 1/(1+t) and best-iterate tracking; the quadratic
// fidelity makes the objectives strongly convex with unit modulus there.
// The constrained problem projects exactly onto the chain of slope slabs
// with a small self-verifying active-set solve.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lipreg/banded.hpp"
#include "lipreg/dataset.hpp"

namespace testref {

inline double subgradient_reference_lipschitz(const lipreg::DataSet& data, double lambda,
                                              long iters) {
    const std::size_t m = data.size();
    const auto& xs = data.xs();
    const auto& ys = data.ys();
    std::vector<double> z(ys);
    if (m == 1) return 0.0;
    std::vector<double> grad(m), slopes(m - 1);

    const auto objective = [&](const std::vector<double>& zz) {
        double loss = 0.0, sup = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = zz[i] - ys[i];
            loss += 0.5 * r * r;
        }
        for (std::size_t i = 0; i + 1 < m; ++i)
            sup = std::max(sup, std::abs((zz[i + 1] - zz[i]) / (xs[i + 1] - xs[i])));
        return loss + lambda * sup;
    };

    double best = objective(z);
    for (long t = 0; t < iters; ++t) {
        for (std::size_t i = 0; i < m; ++i) grad[i] = z[i] - ys[i];
        double sup = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            slopes[i] = (z[i + 1] - z[i]) / (xs[i + 1] - xs[i]);
            sup = std::max(sup, std::abs(slopes[i]));
        }
        if (sup > 0.0) {
            // averaging over near-ties stays inside the subdifferential and
            // damps the flip-flopping between tied chords
            int ties = 0;
            for (std::size_t i = 0; i + 1 < m; ++i)
                if (std::abs(slopes[i]) >= sup * (1.0 - 1e-9)) ++ties;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                if (std::abs(slopes[i]) < sup * (1.0 - 1e-9)) continue;
                const double v = 1.0 / (xs[i + 1] - xs[i]);
                const double sgn = slopes[i] > 0.0 ? 1.0 : -1.0;
                grad[i] -= lambda * sgn * v / ties;
                grad[i + 1] += lambda * sgn * v / ties;
            }
        }
        const double step = 1.0 / (1.0 + static_cast<double>(t));
        for (std::size_t i = 0; i < m; ++i) z[i] -= step * grad[i];
        best = std::min(best, objective(z));
    }
    return best;
}

/// Exact Euclidean projection onto { z : |z_{i+1} - z_i| <= bound_i } by
/// active-set exchange; the active set persists across calls as a warm
/// start. Throws if the exchange fails to settle.
class ChainProjector {
public:
    explicit ChainProjector(std::vector<double> bounds)
        : bounds_(std::move(bounds)), active_(bounds_.size(), 0) {}

    std::vector<double> operator()(const std::vector<double>& v) {
        const std::size_t n = bounds_.size();
        for (int guard = 0; guard < 500; ++guard) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (active_[i] != 0) idx.push_back(i);
            std::vector<double> z(v);
            std::vector<double> nu(idx.size(), 0.0);
            if (!idx.empty()) {
                lipreg::SymmetricBandMatrix bbt(idx.size(), 1);
                std::vector<double> rhs(idx.size());
                for (std::size_t k = 0; k < idx.size(); ++k) {
                    bbt.add(k, k, 2.0);
                    if (k + 1 < idx.size() && idx[k + 1] == idx[k] + 1) bbt.add(k, k + 1, -1.0);
                    const std::size_t i = idx[k];
                    rhs[k] = (v[i + 1] - v[i]) - active_[i] * bounds_[i];
                }
                nu = bbt.solve(rhs);
                for (std::size_t k = 0; k < idx.size(); ++k) {
                    z[idx[k]] += nu[k];
                    z[idx[k] + 1] -= nu[k];
                }
            }
            int worst_i = -1, worst_kind = 0;
            double worst = 1e-12;
            for (std::size_t i = 0; i < n; ++i) {
                if (active_[i] != 0) continue;
                const double d = z[i + 1] - z[i];
                if (d - bounds_[i] > worst) {
                    worst = d - bounds_[i];
                    worst_i = static_cast<int>(i);
                    worst_kind = 1;
                }
                if (-bounds_[i] - d > worst) {
                    worst = -bounds_[i] - d;
                    worst_i = static_cast<int>(i);
                    worst_kind = -1;
                }
            }
            if (worst_i >= 0) {
                active_[worst_i] = worst_kind;
                continue;
            }
            int drop = -1;
            double worst_dual = 1e-12;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                const double signed_nu = nu[k] * active_[idx[k]];
                if (signed_nu < -worst_dual) {
                    worst_dual = -signed_nu;
                    drop = static_cast<int>(idx[k]);
                }
            }
            if (drop >= 0) {
                active_[drop] = 0;
                continue;
            }
            return z;
        }
        throw std::runtime_error("ChainProjector: active set did not settle");
    }

private:
    std::vector<double> bounds_;
    std::vector<int> active_;
};

inline double subgradient_reference_hybrid(const lipreg::DataSet& data, double lambda,
                                           double lbar, long iters) {
    const std::size_t m = data.size();
    const auto& xs = data.xs();
    const auto& ys = data.ys();
    if (m == 1) return 0.0;
    std::vector<double> bounds(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) bounds[i] = lbar * (xs[i + 1] - xs[i]);
    ChainProjector project(bounds);

    const auto objective = [&](const std::vector<double>& zz) {
        double loss = 0.0, tv = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = zz[i] - ys[i];
            loss += 0.5 * r * r;
        }
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double sl = (zz[i] - zz[i - 1]) / (xs[i] - xs[i - 1]);
            const double sr = (zz[i + 1] - zz[i]) / (xs[i + 1] - xs[i]);
            tv += std::abs(sl - sr);
        }
        return loss + lambda * tv;
    };

    std::vector<double> z(m, 0.0);
    {
        double mean = 0.0;
        for (double y : ys) mean += y;
        z.assign(m, mean / static_cast<double>(m));  // feasible start
    }
    double best = objective(z);
    std::vector<double> g(m), slopes(m - 1);
    for (long t = 0; t < iters; ++t) {
        for (std::size_t i = 0; i < m; ++i) g[i] = z[i] - ys[i];
        for (std::size_t i = 0; i + 1 < m; ++i)
            slopes[i] = (z[i + 1] - z[i]) / (xs[i + 1] - xs[i]);
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double diff = slopes[i - 1] - slopes[i];
            if (diff == 0.0) continue;
            const double sgn = diff > 0.0 ? 1.0 : -1.0;
            const double va = 1.0 / (xs[i] - xs[i - 1]);
            const double vb = 1.0 / (xs[i + 1] - xs[i]);
            g[i - 1] -= lambda * sgn * va;
            g[i] += lambda * sgn * (va + vb);
            g[i + 1] -= lambda * sgn * vb;
        }
        const double step = 1.0 / (1.0 + static_cast<double>(t));
        for (std::size_t i = 0; i < m; ++i) z[i] -= step * g[i];
        z = project(z);
        best = std::min(best, objective(z));
    }
    return best;
}

} // namespace testref
