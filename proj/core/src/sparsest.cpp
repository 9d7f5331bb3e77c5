#include "lipreg/sparsest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lipreg/detail/linear_feasibility.hpp"

namespace lipreg {

namespace {

struct Line {
    double slope;
    double intercept;

    static Line through(const InterpolationInstance& inst, std::size_t a, std::size_t b) {
        Line l;
        l.slope = (inst.y(b) - inst.y(a)) / (inst.x(b) - inst.x(a));
        l.intercept = inst.y(a) - l.slope * inst.x(a);
        return l;
    }
};

// Slope-change classification of the canonical interpolant: sign of the
// coefficient at each interior point, with near-zero snapped to 0.
std::vector<int> coefficient_signs(const InterpolationInstance& inst,
                                   const std::vector<double>& chords) {
    std::vector<int> sign(inst.size(), 0);
    for (std::size_t i = 1; i + 1 < inst.size(); ++i) {
        const double a = chords[i] - chords[i - 1];
        const double scale = 1.0 + std::max(std::abs(chords[i]), std::abs(chords[i - 1]));
        if (std::abs(a) <= kCollinearTol * scale)
            sign[i] = 0;
        else
            sign[i] = a > 0.0 ? 1 : -1;
    }
    return sign;
}

// Line sequence for points [lo, hi]; first line is always the chord of the
// first two points and the last line the chord of the last two, so adjacent
// blocks share their boundary line and stitch without extra knots.
void build_lines(const InterpolationInstance& inst, const std::vector<int>& sign,
                 std::size_t lo, std::size_t hi, std::vector<Line>& out) {
    const auto append = [&](const Line& l) {
        // boundary lines of adjacent blocks coincide; keep one
        if (!out.empty() && out.back().slope == l.slope && out.back().intercept == l.intercept)
            return;
        out.push_back(l);
    };

    if (hi - lo == 1) {
        append(Line::through(inst, lo, hi));
        return;
    }
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (sign[i] == 0) {  // collinear triple: split at the shared point
            build_lines(inst, sign, lo, i, out);
            // the two boundary chords differ only below the collinear
            // threshold; drop the right one in favor of the left
            std::vector<Line> right;
            build_lines(inst, sign, i, hi, right);
            for (std::size_t k = 1; k < right.size(); ++k) out.push_back(right[k]);
            return;
        }
    }
    for (std::size_t i = lo + 1; i + 1 < hi; ++i) {
        if (sign[i] * sign[i + 1] < 0) {  // freeze the chord between i and i+1
            build_lines(inst, sign, lo, i + 1, out);
            std::vector<Line> right;
            build_lines(inst, sign, i, hi, right);
            for (std::size_t k = 1; k < right.size(); ++k) out.push_back(right[k]);
            return;
        }
    }
    // maximal convex/concave run: pair consecutive points
    append(Line::through(inst, lo, lo + 1));
    std::size_t k = lo + 2;
    while (k + 1 <= hi) {
        append(Line::through(inst, k, k + 1));
        k += 2;
    }
    if (k == hi) append(Line::through(inst, hi - 1, hi));
}

} // namespace

CpwlFunction sparsest_interpolant(const InterpolationInstance& inst) {
    if (inst.size() < 2)
        throw std::invalid_argument("sparsest_interpolant: at least two samples required");
    const std::vector<double> chords = chord_slopes(inst);
    const std::vector<int> sign = coefficient_signs(inst, chords);

    std::vector<Line> lines;
    build_lines(inst, sign, 0, inst.size() - 1, lines);

    std::vector<double> knots(lines.size() - 1);
    std::vector<double> coeffs(lines.size() - 1);
    for (std::size_t j = 0; j + 1 < lines.size(); ++j) {
        knots[j] = (lines[j].intercept - lines[j + 1].intercept) /
                   (lines[j + 1].slope - lines[j].slope);
        coeffs[j] = lines[j + 1].slope - lines[j].slope;
        if (j > 0 && knots[j] < knots[j - 1] - kKnotMergeTol)
            throw std::logic_error("sparsest_interpolant: knot ordering violated");
    }
    return CpwlFunction(lines.front().intercept, lines.front().slope, std::move(knots),
                        std::move(coeffs));
}

int brute_force_min_knots(const InterpolationInstance& inst, int max_knots) {
    const std::size_t m = inst.size();
    if (m > 8) throw std::invalid_argument("brute_force_min_knots: instance too large");
    if (m < 2) return 0;
    const int cap = std::min<int>(max_knots, static_cast<int>(m) - 2);

    // per-point tolerance band shared with the LP
    std::vector<double> eps(m);
    for (std::size_t p = 0; p < m; ++p) eps[p] = 1e-9 * (1.0 + std::abs(inst.y(p)));
    double xbar = 0.0;
    for (std::size_t p = 0; p < m; ++p) xbar += inst.x(p);
    xbar /= static_cast<double>(m);

    for (int k = 0; k <= cap; ++k) {
        // compositions of m points into k+1 nonempty consecutive groups,
        // encoded by the k interior cut positions
        std::vector<std::size_t> cuts(k);
        for (int j = 0; j < k; ++j) cuts[j] = j + 1;  // cut before point cuts[j]

        const auto feasible_assignment = [&](const std::vector<std::size_t>& cut) -> bool {
            // group g covers points [start_g, end_g)
            std::vector<std::size_t> start(k + 1), end(k + 1);
            for (int g = 0; g <= k; ++g) {
                start[g] = g == 0 ? 0 : cut[g - 1];
                end[g] = g == k ? m : cut[g];
            }
            // prune: a group's points must be nearly collinear
            for (int g = 0; g <= k; ++g) {
                if (end[g] - start[g] < 3) continue;
                const Line l = Line::through(inst, start[g], end[g] - 1);
                for (std::size_t p = start[g] + 1; p + 1 < end[g]; ++p) {
                    const double dev = std::abs(l.slope * inst.x(p) + l.intercept - inst.y(p));
                    if (dev > 4.0 * eps[p] * (1.0 + std::abs(l.slope))) return false;
                }
            }
            // LP over (slope_g, value_at_xbar_g) per group, for each pattern of
            // knot slope-difference signs
            const std::size_t nvars = 2 * static_cast<std::size_t>(k + 1);
            for (int mask = 0; mask < (1 << k); ++mask) {
                std::vector<std::vector<double>> rows;
                std::vector<double> rhs;
                const auto var_m = [&](int g) { return 2 * static_cast<std::size_t>(g); };
                const auto var_c = [&](int g) { return 2 * static_cast<std::size_t>(g) + 1; };
                for (int g = 0; g <= k; ++g) {
                    for (std::size_t p = start[g]; p < end[g]; ++p) {
                        std::vector<double> row(nvars, 0.0);
                        row[var_m(g)] = inst.x(p) - xbar;
                        row[var_c(g)] = 1.0;
                        rows.push_back(row);
                        rhs.push_back(inst.y(p) + eps[p]);
                        for (double& v : row) v = -v;
                        rows.push_back(row);
                        rhs.push_back(-(inst.y(p) - eps[p]));
                    }
                }
                for (int j = 0; j < k; ++j) {
                    const double sgn = (mask >> j) & 1 ? 1.0 : -1.0;
                    const double a = inst.x(end[j] - 1) - xbar;   // knot >= last covered abscissa
                    const double b = inst.x(start[j + 1]) - xbar;  // knot <= next covered abscissa
                    // knot = (c_{j+1} - c_j) / (m_j - m_{j+1}) in centered coords;
                    // with sigma = sign(m_j - m_{j+1}) both bounds become linear
                    std::vector<double> row(nvars, 0.0);
                    row[var_m(j)] = sgn * a;
                    row[var_m(j + 1)] = -sgn * a;
                    row[var_c(j + 1)] = -sgn;
                    row[var_c(j)] = sgn;
                    rows.push_back(row);  // sigma*(m_j - m_{j+1})*a <= sigma*(c_{j+1} - c_j)
                    rhs.push_back(0.0);
                    std::vector<double> row2(nvars, 0.0);
                    row2[var_c(j + 1)] = sgn;
                    row2[var_c(j)] = -sgn;
                    row2[var_m(j)] = -sgn * b;
                    row2[var_m(j + 1)] = sgn * b;
                    rows.push_back(row2);  // sigma*(c_{j+1} - c_j) <= sigma*(m_j - m_{j+1})*b
                    rhs.push_back(0.0);
                }
                if (detail::linear_system_feasible(rows, rhs)) return true;
            }
            return false;
        };

        if (k == 0) {
            if (feasible_assignment({})) return 0;
            continue;
        }
        // iterate strictly increasing cut tuples in {1, ..., m-1}
        while (true) {
            if (feasible_assignment(cuts)) return k;
            int j = k - 1;
            while (j >= 0 && cuts[j] == m - static_cast<std::size_t>(k - j)) --j;
            if (j < 0) break;
            ++cuts[j];
            for (int l = j + 1; l < k; ++l) cuts[l] = cuts[l - 1] + 1;
        }
    }
    return static_cast<int>(m) - 2;  // canonical interpolant always achieves this
}

} // namespace lipreg
