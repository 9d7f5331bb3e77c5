#pragma once

#include <span>
#include <vector>

namespace lipreg {

/// Componentwise soft threshold: prox of tau*||.||_1.
std::vector<double> prox_l1_norm(std::span<const double> v, double tau);

/// prox of tau*||.||_inf via Moreau decomposition,
///   prox(v) = v - project_l1_ball(v, tau).
std::vector<double> prox_linf_norm(std::span<const double> v, double tau);

/// Euclidean projection onto {u : ||u||_1 <= radius}; exact sort-based
/// threshold search, O(n log n).
std::vector<double> project_l1_ball(std::span<const double> v, double radius);

/// Componentwise clamp to [-radius, radius].
std::vector<double> project_linf_ball(std::span<const double> v, double radius);

} // namespace lipreg
