#include "lipreg/fit.hpp"

#include <stdexcept>
#include <utility>

#include "lipreg/sparsest.hpp"

namespace lipreg {

namespace {

FitResult assemble(const DataSet& data, double lambda, std::optional<double> lbar,
                   AdmmReport report) {
    FitResult out;
    out.z = report.z;
    out.model = data.size() >= 2
        ? sparsest_interpolant(InterpolationInstance(data.xs(), report.z))
        : CpwlFunction(report.z.front(), 0.0);
    out.metrics.loss = empirical_loss(out.z, data.ys());
    out.metrics.lipschitz = lipschitz_constant(out.model);
    out.metrics.tv2 = tv2(out.model);
    out.metrics.num_regions = out.model.num_regions();
    out.metrics.lambda = lambda;
    out.metrics.lbar = lbar;
    out.metrics.objective =
        out.metrics.loss + lambda * (lbar ? out.metrics.tv2 : out.metrics.lipschitz);
    out.solver = std::move(report);
    return out;
}

} // namespace

FitResult fit_lipschitz(const DataSet& data, double lambda, const AdmmConfig& cfg) {
    return assemble(data, lambda, std::nullopt, admm_lipschitz(data, lambda, cfg));
}

FitResult fit_hybrid(const DataSet& data, double lambda, double lbar, const AdmmConfig& cfg) {
    return assemble(data, lambda, lbar, admm_hybrid(data, lambda, lbar, cfg));
}

std::vector<FitResult> sweep(const DataSet& data, const std::vector<double>& lambdas,
                             FitMode mode, std::optional<double> lbar, const AdmmConfig& cfg,
                             bool warm_start) {
    if (lambdas.empty()) throw std::invalid_argument("sweep: empty lambda grid");
    if (mode == FitMode::hybrid && !lbar)
        throw std::invalid_argument("sweep: hybrid mode requires lbar");
    std::vector<FitResult> results;
    results.reserve(lambdas.size());
    AdmmConfig item_cfg = cfg;
    for (double lambda : lambdas) {
        FitResult r = mode == FitMode::lipschitz ? fit_lipschitz(data, lambda, item_cfg)
                                                 : fit_hybrid(data, lambda, *lbar, item_cfg);
        if (warm_start) item_cfg.z_init = r.z;
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace lipreg
