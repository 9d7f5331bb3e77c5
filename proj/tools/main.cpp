// lipreg: one-dimensional Lipschitz-aware regression.
//
// Subcommands: gen-data, fit-lip, fit-hybrid, sparsify, envelope, sweep.
// Exit codes: 0 success, 1 usage or input error, 2 solver non-convergence.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipreg/fit.hpp"
#include "lipreg/io.hpp"
#include "lipreg/sparsest.hpp"
#include "lipreg/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;

lipreg::DataSet load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return lipreg::read_xy_csv(in);
}

void store(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

lipreg::CpwlFunction resolve_ground_truth(const std::vector<std::string>& gt) {
    if (gt.size() == 1 && gt[0] == "6region") return lipreg::preset_six_region();
    if (gt.size() == 1 && gt[0] == "relu_half") return lipreg::preset_relu_half();
    if (gt.size() == 2 && gt[0] == "file") {
        std::ifstream in(gt[1]);
        if (!in) throw std::runtime_error("cannot open ground-truth file: " + gt[1]);
        std::stringstream buf;
        buf << in.rdbuf();
        return lipreg::cpwl_from_json(buf.str());
    }
    throw std::runtime_error("--gt expects 6region, relu_half, or: file PATH");
}

std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error("--lambdas: empty list");
    return out;
}

struct SolverFlags {
    double rho = 1.0;
    double rho1 = 1.0;
    double rhoinf = 1.0;
    int max_iter = 50000;
    double tol = 1e-8;

    lipreg::AdmmConfig to_config() const {
        lipreg::AdmmConfig cfg;
        cfg.rho = rho;
        cfg.rho1 = rho1;
        cfg.rhoinf = rhoinf;
        cfg.max_iter = max_iter;
        cfg.tol_primal = tol;
        cfg.tol_dual = tol;
        return cfg;
    }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags, bool hybrid) {
    if (hybrid) {
        cmd->add_option("--rho1", flags.rho1, "penalty multiplier, slope-change split");
        cmd->add_option("--rhoinf", flags.rhoinf, "penalty multiplier, slope-bound split");
    } else {
        cmd->add_option("--rho", flags.rho, "penalty multiplier");
    }
    cmd->add_option("--max-iter", flags.max_iter, "iteration cap");
    cmd->add_option("--tol", flags.tol, "primal and dual residual tolerance");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional Lipschitz-aware regression"};
    app.require_subcommand(1);

    // gen-data ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen-data", "Sample a synthetic data set to CSV");
    std::size_t gen_m = 50;
    std::vector<std::string> gen_gt{"6region"};
    double gen_sigma = 0.0;
    std::uint64_t gen_seed = 0;
    double gen_ofrac = 0.0, gen_osigma = 0.0;
    std::string gen_out;
    gen->add_option("--m", gen_m, "sample count")->required();
    gen->add_option("--gt", gen_gt, "ground truth: 6region | relu_half | file PATH")
        ->expected(1, 2)
        ->required();
    gen->add_option("--sigma", gen_sigma, "noise standard deviation")->required();
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_option("--outlier-frac", gen_ofrac, "fraction of outlier samples");
    gen->add_option("--outlier-sigma", gen_osigma, "outlier standard deviation");
    gen->add_option("--out", gen_out, "output CSV path")->required();

    // fit-lip ----------------------------------------------------------------
    auto* fitlip = app.add_subcommand("fit-lip", "Lipschitz-regularized fit");
    std::string fl_input, fl_out;
    double fl_lambda = 0.0;
    SolverFlags fl_flags;
    fitlip->add_option("--input", fl_input, "input CSV")->required();
    fitlip->add_option("--lambda", fl_lambda, "regularization weight")->required();
    fitlip->add_option("--out", fl_out, "output JSON path")->required();
    add_solver_flags(fitlip, fl_flags, false);

    // fit-hybrid ---------------------------------------------------------------
    auto* fithyb = app.add_subcommand("fit-hybrid", "TV2-regularized fit with a slope bound");
    std::string fh_input, fh_out;
    double fh_lambda = 0.0, fh_lbar = 0.0;
    SolverFlags fh_flags;
    fithyb->add_option("--input", fh_input, "input CSV")->required();
    fithyb->add_option("--lambda", fh_lambda, "regularization weight")->required();
    fithyb->add_option("--lbar", fh_lbar, "Lipschitz bound")->required();
    fithyb->add_option("--out", fh_out, "output JSON path")->required();
    add_solver_flags(fithyb, fh_flags, true);

    // sparsify ---------------------------------------------------------------
    auto* sparse = app.add_subcommand("sparsify", "Sparsest interpolant of exact samples");
    std::string sp_input, sp_out;
    sparse->add_option("--input", sp_input, "input CSV (y treated as exact values)")->required();
    sparse->add_option("--out", sp_out, "output JSON path")->required();

    // envelope ---------------------------------------------------------------
    auto* env = app.add_subcommand("envelope", "Solution-set envelope bands to CSV");
    std::string env_input, env_out;
    int env_grid = 0;
    double env_xmin = 0.0, env_xmax = 0.0;
    bool env_has_xmin = false, env_has_xmax = false;
    env->add_option("--input", env_input, "input CSV (y treated as exact values)")->required();
    env->add_option("--grid", env_grid, "number of grid abscissas")->required();
    env->add_option("--out", env_out, "output CSV path")->required();
    env->add_option("--xmin", env_xmin, "grid start (default: first sample)")
        ->each([&](const std::string&) { env_has_xmin = true; });
    env->add_option("--xmax", env_xmax, "grid end (default: last sample)")
        ->each([&](const std::string&) { env_has_xmax = true; });

    // sweep --------------------------------------------------------------------
    auto* sw = app.add_subcommand("sweep", "Fits over a lambda grid");
    std::string sw_input, sw_out, sw_lambdas, sw_mode;
    double sw_lbar = 0.0;
    bool sw_has_lbar = false;
    SolverFlags sw_flags;
    sw->add_option("--input", sw_input, "input CSV")->required();
    sw->add_option("--lambdas", sw_lambdas, "comma-separated lambda list")->required();
    sw->add_option("--mode", sw_mode, "lip | hybrid")
        ->required()
        ->check(CLI::IsMember({"lip", "hybrid"}));
    sw->add_option("--lbar", sw_lbar, "Lipschitz bound (hybrid mode)")
        ->each([&](const std::string&) { sw_has_lbar = true; });
    sw->add_option("--out", sw_out, "output JSON path")->required();
    add_solver_flags(sw, sw_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // --help exits cleanly
    }

    try {
        if (*gen) {
            lipreg::GenConfig cfg;
            cfg.m = gen_m;
            cfg.ground_truth = resolve_ground_truth(gen_gt);
            cfg.sigma = gen_sigma;
            cfg.seed = gen_seed;
            cfg.outlier_frac = gen_ofrac;
            cfg.outlier_sigma = gen_osigma;
            const auto data = lipreg::generate_data(cfg);
            std::ostringstream out;
            lipreg::write_xy_csv(out, data);
            store(gen_out, out.str());
            return kExitOk;
        }
        if (*fitlip) {
            const auto data = load_csv(fl_input);
            const auto result = lipreg::fit_lipschitz(data, fl_lambda, fl_flags.to_config());
            store(fl_out, lipreg::to_json(result));
            return result.solver.converged ? kExitOk : kExitNoConvergence;
        }
        if (*fithyb) {
            const auto data = load_csv(fh_input);
            const auto result =
                lipreg::fit_hybrid(data, fh_lambda, fh_lbar, fh_flags.to_config());
            store(fh_out, lipreg::to_json(result));
            return result.solver.converged ? kExitOk : kExitNoConvergence;
        }
        if (*sparse) {
            const auto inst = load_csv(sp_input);
            store(sp_out, lipreg::to_json(lipreg::sparsest_interpolant(inst)));
            return kExitOk;
        }
        if (*env) {
            const auto inst = load_csv(env_input);
            const double from = env_has_xmin ? env_xmin : inst.x(0);
            const double to = env_has_xmax ? env_xmax : inst.x(inst.size() - 1);
            std::ostringstream out;
            lipreg::write_envelope_csv(out, inst, env_grid, from, to);
            store(env_out, out.str());
            return kExitOk;
        }
        if (*sw) {
            const auto data = load_csv(sw_input);
            const auto lambdas = parse_lambda_list(sw_lambdas);
            const auto mode =
                sw_mode == "lip" ? lipreg::FitMode::lipschitz : lipreg::FitMode::hybrid;
            if (mode == lipreg::FitMode::hybrid && !sw_has_lbar)
                throw std::runtime_error("sweep --mode hybrid requires --lbar");
            const auto results =
                lipreg::sweep(data, lambdas, mode,
                              sw_has_lbar ? std::optional<double>(sw_lbar) : std::nullopt,
                              sw_flags.to_config());
            store(sw_out, lipreg::to_json(results));
            for (const auto& r : results)
                if (!r.solver.converged) return kExitNoConvergence;
            return kExitOk;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
