// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line
// each. Exit code is the number of failed criteria.
//
//  1. Closed-form optimal Lipschitz constant reached through the pipeline.
//  2. Sparsest interpolant attains the closed-form optimal TV2 cost.
//  3. Knot count equals the brute-force oracle on >= 10^4 fuzz instances.
//  4. Lipschitz/TV2 bound with saturation on monotone one-sign functions.
//  5. Solver objectives agree with long projected-subgradient references.
//  6. Six-region scenario: monotone trade-off and region counts.
//  7. Ramp scenario: constrained fits are sparser than penalized ones.
//  8. Outlier scenario: the slope bound caps the Lipschitz constant.
//  9. Two-layer network round trip and weight-decay identity.
// 10. Solution-set envelope contains solutions and excludes non-solutions.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lipreg/envelope.hpp"
#include "lipreg/fit.hpp"
#include "lipreg/io.hpp"
#include "lipreg/relu_net.hpp"
#include "lipreg/sparsest.hpp"
#include "lipreg/synthetic.hpp"
#include "support/fuzz_instances.hpp"
#include "support/random_gen.hpp"
#include "support/subgradient_ref.hpp"

using namespace lipreg;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

AdmmConfig tight(double tol, int max_iter = 400000) {
    AdmmConfig cfg;
    cfg.tol_primal = cfg.tol_dual = tol;
    cfg.max_iter = max_iter;
    return cfg;
}

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
    testgen::Rng rng(101);
    const auto t0 = std::chrono::steady_clock::now();
    int bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = testgen::uniform_int(rng, 2, 50);
        std::vector<double> xs = testgen::jittered_grid(rng, m);
        std::vector<double> ys(m);
        for (auto& y : ys) y = testgen::uniform(rng, -1.0, 1.0);
        const DataSet data(xs, ys);
        const auto fit = fit_lipschitz(data, 1e-10, tight(1e-11, 100000));
        const double err = std::abs(fit.metrics.lipschitz - lmin(data));
        worst = std::max(worst, err);
        if (!(err <= 1e-9)) ++bad;
    }
    const double elapsed = seconds_since(t0);
    report(1, bad == 0 && elapsed < 5.0, "pipeline reaches the optimal Lipschitz constant",
           "1000 instances, worst |L - max chord| = " + sci(worst) + ", " + sci(elapsed) + " s");
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
    testgen::Rng rng(102);
    int bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto inst = testgen::fuzz_instance(rng, 50);
        const auto f = sparsest_interpolant(inst);
        const double err = std::abs(tv2(f) - tvmin(inst));
        worst = std::max(worst, err);
        if (!(err <= 1e-9)) ++bad;
    }
    report(2, bad == 0, "sparsest interpolant attains the optimal TV2 cost",
           "1000 instances, worst |tv2 - tvmin| = " + sci(worst));
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
    testgen::Rng rng(103);
    const auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    const int total = 10000;
    for (int trial = 0; trial < total; ++trial) {
        const auto inst = testgen::fuzz_instance(rng, 8);
        const auto f = sparsest_interpolant(inst);
        const int oracle = brute_force_min_knots(inst, static_cast<int>(inst.size()));
        if (static_cast<int>(f.num_knots()) != oracle) ++mismatches;
    }
    const double elapsed = seconds_since(t0);
    report(3, mismatches == 0 && elapsed < 120.0, "knot count equals the brute-force oracle",
           std::to_string(total) + " instances, " + std::to_string(mismatches) +
               " mismatches, " + sci(elapsed) + " s");
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
    testgen::Rng rng(104);
    int bad_bound = 0, bad_saturation = 0;
    for (int trial = 0; trial < 6000; ++trial) {
        const auto r = check_lip_tv_bound(testgen::random_cpwl(rng, 12));
        if (!(r.slack >= -1e-9)) ++bad_bound;
    }
    for (int trial = 0; trial < 4000; ++trial) {
        const auto r = check_lip_tv_bound(testgen::random_monotone_onesign(rng, 10));
        if (!(r.slack >= -1e-9)) ++bad_bound;
        if (!(std::abs(r.slack) <= 1e-9)) ++bad_saturation;
    }
    report(4, bad_bound == 0 && bad_saturation == 0,
           "TV2 + min-slope bounds the Lipschitz constant, tight when monotone one-sign",
           "10000 functions, " + std::to_string(bad_bound) + " bound / " +
               std::to_string(bad_saturation) + " saturation violations");
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
    testgen::Rng rng(20260810);
    int bad_lip = 0, bad_hyb = 0, infeasible = 0;
    double worst_lip = 0.0, worst_hyb = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = testgen::uniform_int(rng, 2, 30);
        std::vector<double> xs = testgen::jittered_grid(rng, m, 0.2);
        std::vector<double> ys(m);
        for (auto& y : ys) y = testgen::uniform(rng, -1.0, 1.0);
        const DataSet data(xs, ys);
        const double lambda = testgen::uniform(rng, 0.01, 0.3);
        const double lbar = testgen::uniform(rng, 0.3, 1.5);

        const auto lip = admm_lipschitz(data, lambda, tight(1e-12, 200000));
        const double lip_ref = testref::subgradient_reference_lipschitz(data, lambda, 1000000);
        const double rel_lip = std::abs(lip.objective - lip_ref) / std::abs(lip_ref);
        worst_lip = std::max(worst_lip, rel_lip);
        if (!(rel_lip <= 1e-6)) ++bad_lip;

        const auto hyb = admm_hybrid(data, lambda, lbar, tight(1e-12, 200000));
        const double hyb_ref =
            testref::subgradient_reference_hybrid(data, lambda, lbar, 1000000);
        const double rel_hyb = std::abs(hyb.objective - hyb_ref) / std::abs(hyb_ref);
        worst_hyb = std::max(worst_hyb, rel_hyb);
        if (!(rel_hyb <= 1e-6)) ++bad_hyb;
        for (std::size_t i = 0; i + 1 < data.size(); ++i) {
            const double s = (hyb.z[i + 1] - hyb.z[i]) / (xs[i + 1] - xs[i]);
            if (!(std::abs(s) <= lbar + 1e-7)) {
                ++infeasible;
                break;
            }
        }
    }
    report(5, bad_lip == 0 && bad_hyb == 0 && infeasible == 0,
           "solver objectives match the projected-subgradient references",
           "100 instances x 1e6 iterations, worst rel: lip " + sci(worst_lip) +
               ", hybrid " + sci(worst_hyb) + ", " + std::to_string(infeasible) +
               " bound violations");
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
    GenConfig gc;
    gc.m = 50;
    gc.ground_truth = preset_six_region();
    gc.sigma = 0.02;
    gc.seed = 3;
    const auto data = generate_data(gc);
    const std::vector<double> grid{1e-4, 1e-3, 0.01, 0.029, 0.1, 0.3, 1.0, 1e6};
    const auto results = sweep(data, grid, FitMode::lipschitz, std::nullopt, tight(1e-12));

    bool monotone = true, window = false, collapsed = false, converged = true;
    double prev_fid = -1.0, prev_reg = 1e300;
    std::string counts;
    for (const auto& r : results) {
        converged = converged && r.solver.converged;
        const double fid = r.metrics.loss;
        const double reg = lmin(InterpolationInstance(data.xs(), r.z));
        if (fid < prev_fid - 1e-7 || reg > prev_reg + 1e-7) monotone = false;
        prev_fid = fid;
        prev_reg = reg;
        if (r.metrics.num_regions >= 6 && r.metrics.num_regions <= 14) window = true;
        counts += std::to_string(r.metrics.num_regions) + " ";
    }
    collapsed = results.back().metrics.num_regions == 1;
    report(6, monotone && window && collapsed && converged,
           "six-region sweep: monotone trade-off, 6..14-region fit, collapse at huge lambda",
           "regions per lambda: " + counts);
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
    int sparse_ok = 0, ordered = 0, converged = 0;
    for (int seed = 1; seed <= 100; ++seed) {
        GenConfig gc;
        gc.m = 30;
        gc.ground_truth = preset_relu_half();
        gc.sigma = 0.02;
        gc.seed = static_cast<std::uint64_t>(seed);
        const auto data = generate_data(gc);
        const auto hyb = fit_hybrid(data, 0.01, 10.0, tight(1e-12));
        const auto lip = fit_lipschitz(data, 0.02, tight(1e-12));
        if (hyb.solver.converged && lip.solver.converged) ++converged;
        if (hyb.metrics.num_regions <= 3) ++sparse_ok;
        if (lip.metrics.num_regions > hyb.metrics.num_regions) ++ordered;
    }
    report(7, sparse_ok >= 90 && ordered >= 90 && converged == 100,
           "ramp scenario: constrained fits sparse, penalized fits busier",
           "<=3 regions: " + std::to_string(sparse_ok) + "/100, lip > hybrid: " +
               std::to_string(ordered) + "/100, converged: " + std::to_string(converged) +
               "/100");
}

// ---------------------------------------------------------------- criterion 8
void criterion_8() {
    int capped = 0, proxy_over = 0;
    for (int seed = 1; seed <= 100; ++seed) {
        GenConfig gc;
        gc.m = 50;
        gc.ground_truth = preset_six_region();
        gc.sigma = 1e-3;
        gc.outlier_frac = 0.1;
        gc.outlier_sigma = 3.5e-2;
        gc.seed = static_cast<std::uint64_t>(seed);
        const auto data = generate_data(gc);
        const auto bounded = fit_hybrid(data, 1e-4, 0.66, tight(1e-12));
        const auto proxy = fit_hybrid(data, 1e-4, 1e6, tight(1e-12));
        if (bounded.metrics.lipschitz <= 0.66 + 1e-7) ++capped;
        if (proxy.metrics.lipschitz > 0.66) ++proxy_over;
    }
    report(8, capped == 100 && proxy_over >= 80,
           "outlier scenario: the slope bound caps the Lipschitz constant",
           "capped: " + std::to_string(capped) + "/100, unbounded proxy above 0.66: " +
               std::to_string(proxy_over) + "/100");
}

// ---------------------------------------------------------------- criterion 9
void criterion_9() {
    testgen::Rng rng(109);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = testgen::random_cpwl(rng, 15);
        const auto theta = cpwl_to_relu_network(f);
        bool ok = std::abs(weight_decay(theta) - tv2(f)) <= 1e-12;
        for (std::size_t k = 0; k < theta.width(); ++k)
            ok = ok && std::abs(theta.v[k]) == std::abs(theta.w[k]);
        const auto g = relu_network_to_cpwl(theta);
        ok = ok && g.num_knots() == f.num_knots() && std::abs(g.c0() - f.c0()) <= 1e-12 &&
             std::abs(g.c1() - f.c1()) <= 1e-12;
        for (std::size_t k = 0; ok && k < f.num_knots(); ++k)
            ok = std::abs(g.knots()[k] - f.knots()[k]) <= 1e-12 &&
                 std::abs(g.coeffs()[k] - f.coeffs()[k]) <= 1e-12;
        if (!ok) ++bad;
    }
    report(9, bad == 0, "two-layer network round trip and weight-decay identity",
           "1000 functions, " + std::to_string(bad) + " violations");
}

// --------------------------------------------------------------- criterion 10
void criterion_10() {
    testgen::Rng rng(110);
    int outside = 0, not_increased = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto inst = testgen::random_instance(rng, testgen::uniform_int(rng, 2, 12));
        const auto cano = canonical_interpolant(inst);
        const auto sparse = sparsest_interpolant(inst);
        const double base = lmin(inst);
        for (int i = 0; i < 100; ++i) {
            const double x = testgen::uniform(rng, -0.25, 1.25);
            const auto band = envelope_band(inst, x);
            if (cano(x) < band.lo - 1e-9 || cano(x) > band.hi + 1e-9) ++outside;
            if (sparse(x) < band.lo - 1e-9 || sparse(x) > band.hi + 1e-9) ++outside;
        }
        for (int i = 0; i < 5; ++i) {
            const double x = testgen::uniform(rng, -0.25, 1.25);
            bool collides = false;
            for (std::size_t m = 0; m < inst.size(); ++m)
                if (std::abs(x - inst.x(m)) < 1e-9) collides = true;
            if (collides) continue;
            const auto band = envelope_band(inst, x);
            const double off = testgen::uniform(rng, 0.05, 1.0);
            for (const double y : {band.hi + off, band.lo - off}) {
                std::vector<double> xs = inst.xs();
                std::vector<double> ys = inst.ys();
                const auto pos = std::upper_bound(xs.begin(), xs.end(), x);
                ys.insert(ys.begin() + (pos - xs.begin()), y);
                xs.insert(pos, x);
                if (!(lmin(InterpolationInstance(xs, ys)) > base)) ++not_increased;
            }
        }
    }
    report(10, outside == 0 && not_increased == 0,
           "envelope bands contain solutions; outside points raise the optimal constant",
           std::to_string(outside) + " band escapes, " + std::to_string(not_increased) +
               " non-increasing augmentations");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
