#pragma once

#include <cstddef>
#include <string>

#include "igk/markov.hpp"
#include "igk/models.hpp"

namespace igk::builtins {

/// p = (xi, 1 - xi) on atoms "1", "0", xi in (0, 1).
ParametrizedMeasureModel bernoulli();

/// n outcomes, parameters (p_1, ..., p_{n-1}), p_n = 1 - sum.
ParametrizedMeasureModel categorical(std::size_t n);

/// Normal density with parameters (mean, sigma) discretized on a midpoint
/// grid of [-half_width, half_width] and renormalized to unit mass.
ParametrizedMeasureModel gaussian_grid(double half_width = 5.0, std::size_t points = 201);

/// Family on (0, pi) with density 1 + xi (sin^2(t - 1/xi))^{1/xi^2}, and 1 at
/// xi = 0, for xi in (-1, inf). Differentiable in L^1 at xi = 0 with zero
/// derivative, although the pointwise derivative does not exist there; the
/// gradient evaluator returns that L^1 derivative at 0 and the pointwise one
/// elsewhere.
ParametrizedMeasureModel nonregular(std::size_t points = 1000);

/// h(xi) = exp(-1/|xi|), h(0) = 0.
double suff_h(double xi);
/// h'(xi) = sign(xi) h(xi) / xi^2, h'(0) = 0.
double suff_h_prime(double xi);

/// Statistical model on (-1, 1) x (0, 1) discretized into s_cells x t_cells:
///   h(xi)        for xi >= 0, s >= 0
///   2 h(xi) t    for xi < 0,  s >= 0
///   1 - h(xi)    for s < 0
/// It has no information loss under projection to s, yet admits no global
/// Fisher-Neyman factorization.
ParametrizedMeasureModel sufficiency_without_factorization(std::size_t s_cells = 200,
                                                           std::size_t t_cells = 100);

/// Projection (s, t) -> s for the grid of sufficiency_without_factorization.
Statistic first_coordinate_projection(std::size_t s_cells = 200, std::size_t t_cells = 100);

/// ||(p(xi) - p(base)) / (xi - base)||_TV for a one-parameter model.
double difference_quotient_l1(const ParametrizedMeasureModel& model, double base, double xi);

struct RegistryOptions {
  std::size_t grid_points = 0;  // 0: builtin default
  std::size_t s_cells = 200;
  std::size_t t_cells = 100;
};

/// Looks up "bernoulli", "categorical(n)", "gaussian-grid", "ex4.1" or
/// "ex-suff". Throws ValidationError for unknown names.
ParametrizedMeasureModel by_name(const std::string& name, const RegistryOptions& options = {});

}  // namespace igk::builtins
