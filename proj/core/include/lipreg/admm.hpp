#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lipreg/cpwl.hpp"
#include "lipreg/dataset.hpp"
#include "lipreg/difference_ops.hpp"

namespace lipreg {

/// Tuning knobs for the two ADMM schemes on the reduced problems.
///
/// The stopping rule uses scaled residual norms: primal convergence needs
/// ||L z - u||_2 <= tol_primal * sqrt(rows) for every split, and dual
/// convergence needs ||sum_i rho_i L_i^T (u_i - u_i_prev)||_2 <=
/// tol_dual * sqrt(M).
struct AdmmConfig {
    double rho = 1.0;      ///< penalty, Lipschitz-regularized problem
    double rho1 = 1.0;     ///< penalty on the slope-change split (hybrid)
    double rhoinf = 1.0;   ///< penalty on the chord-slope split (hybrid)
    int max_iter = 50000;
    double tol_primal = 1e-8;
    double tol_dual = 1e-8;
    std::optional<std::vector<double>> z_init;  ///< warm start; defaults to y
};

struct AdmmReport {
    std::vector<double> z;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double objective = 0.0;
    bool converged = false;
};

/// Quadratic data fidelity F(z) = 1/2 sum (z_m - y_m)^2.
double empirical_loss(std::span<const double> z, std::span<const double> ys);

struct SplitTerm {
    const DifferenceOperator& op;
    std::span<const double> u;
    std::span<const double> w;
    double rho;
};

/// Exact minimizer of
///   1/2 ||z - y||^2 + sum_i [ rho_i/2 ||L_i z - u_i||^2 + w_i^T (L_i z - u_i) ]
/// through the banded normal equations
///   (I + sum_i rho_i L_i^T L_i) z = y + sum_i L_i^T (rho_i u_i - w_i).
std::vector<double> solve_z_update(std::span<const double> ys, std::span<const SplitTerm> terms);

/// Minimizes F(z) + lambda * ||L_slope z||_inf by ADMM: the z-update above,
/// the sup-norm prox with step lambda/rho, and dual ascent. Non-convergence
/// within max_iter is reported, not thrown.
AdmmReport admm_lipschitz(const DataSet& data, double lambda, const AdmmConfig& cfg = {});

/// Minimizes F(z) + lambda * ||L_curv z||_1 subject to ||L_slope z||_inf <= lbar,
/// with one soft-threshold split and one box-projection split. The reported
/// objective excludes the indicator; feasibility holds at convergence up to
/// the primal residual. M == 2 degenerates to a slope-constrained fit.
AdmmReport admm_hybrid(const DataSet& data, double lambda, double lbar,
                       const AdmmConfig& cfg = {});

/// Full-problem objectives evaluated on a candidate CPWL model.
double lipschitz_objective(const DataSet& data, double lambda, const CpwlFunction& f);
double hybrid_objective(const DataSet& data, double lambda, const CpwlFunction& f);

} // namespace lipreg
