#include "lipreg/detail/linear_feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lipreg::detail {

namespace {
constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
}

// Phase-1 simplex on: minimize t subject to A(x+ - x-) - t <= b with
// x+, x-, t >= 0. The system is feasible iff the optimum is t ~ 0.
bool linear_system_feasible(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& rhs) {
    const std::size_t m = rows.size();
    if (m == 0) return true;
    const std::size_t n = rows[0].size();
    const std::size_t tcol = 2 * n;
    const std::size_t ncols = 2 * n + 1 + m;

    std::vector<std::vector<double>> tab(m, std::vector<double>(ncols + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            tab[i][j] = rows[i][j];
            tab[i][n + j] = -rows[i][j];
        }
        tab[i][tcol] = -1.0;
        tab[i][tcol + 1 + i] = 1.0;
        tab[i][ncols] = rhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = tcol + 1 + i;
    std::vector<double> obj(ncols + 1, 0.0);
    obj[tcol] = 1.0;

    const auto pivot = [&](std::size_t r, std::size_t c) {
        const double piv = tab[r][c];
        for (double& v : tab[r]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || tab[i][c] == 0.0) continue;
            const double f = tab[i][c];
            for (std::size_t j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[r][j];
        }
        if (obj[c] != 0.0) {
            const double f = obj[c];
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * tab[r][j];
        }
        basis[r] = c;
    };

    // drive t into the basis if the slack start is infeasible
    std::size_t worst = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (tab[i][ncols] < tab[worst][ncols]) worst = i;
    if (tab[worst][ncols] < 0.0) pivot(worst, tcol);

    for (long iter = 0; iter < 1000000; ++iter) {
        // Bland: first column with negative reduced cost
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (obj[j] < -kCostTol) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) break;
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] > kPivotTol) {
                const double ratio = tab[i][ncols] / tab[i][enter];
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (leave == m || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) break;  // numerically unbounded; t >= 0 rules it out exactly
        pivot(leave, enter);
    }

    double tvalue = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] == tcol) tvalue = tab[i][ncols];
    double bscale = 1.0;
    for (double b : rhs) bscale = std::max(bscale, std::abs(b));
    return tvalue <= 1e-9 * bscale;
}

} // namespace lipreg::detail
