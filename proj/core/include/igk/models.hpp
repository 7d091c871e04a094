#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igk/markov.hpp"
#include "igk/measures.hpp"
#include "igk/power_measure.hpp"

namespace igk {

struct Interval {
  double lower;
  double upper;
};

/// Open box in R^d; bounds may be infinite.
class ParameterDomain {
 public:
  explicit ParameterDomain(std::vector<Interval> bounds);
  static ParameterDomain box(std::size_t dim, double lower, double upper);

  std::size_t dim() const noexcept { return bounds_.size(); }
  const std::vector<Interval>& bounds() const noexcept { return bounds_; }
  bool contains(std::span<const double> xi) const;
  /// Throws DomainError when xi is outside the open box or has the wrong size.
  void require_inside(std::span<const double> xi) const;

 private:
  std::vector<Interval> bounds_;
};

/// Default relative tolerance for derivative mass on atoms where p(xi) vanishes.
inline constexpr double kDegenerateAtomTolerance = 1e-10;

/// Per-atom densities against the atom base weights, evaluated at xi.
using DensityFn = std::function<std::vector<double>(std::span<const double> xi)>;
/// Per-atom partial derivative of the density with respect to xi_j.
using DensityGradFn =
    std::function<std::vector<double>(std::span<const double> xi, std::size_t j)>;

/// A parametrized measure model (M, Omega, p) on an atomic space: the mass of
/// atom i at xi is density(xi)_i * base_weight_i.
class ParametrizedMeasureModel {
 public:
  ParametrizedMeasureModel(std::string name, ParameterDomain domain, SpacePtr space,
                           DensityFn density, std::optional<DensityGradFn> density_grad = std::nullopt,
                           bool statistical = false);

  const std::string& name() const noexcept { return name_; }
  const ParameterDomain& domain() const noexcept { return domain_; }
  std::size_t dim() const noexcept { return domain_.dim(); }
  const SpacePtr& space() const noexcept { return space_; }
  bool statistical() const noexcept { return statistical_; }
  bool has_analytic_gradient() const noexcept { return density_grad_.has_value(); }

  /// Derivative mass allowed on zero-mass atoms, relative to
  /// tv(p(xi)) + tv(d p(xi)). Models derived from this one inherit it.
  double domination_tolerance() const noexcept { return domination_tolerance_; }
  ParametrizedMeasureModel with_domination_tolerance(double tol) const;

  /// Raw density vector, size-checked but not sign-checked.
  std::vector<double> density(std::span<const double> xi) const;
  /// Raw analytic partial; throws UnsupportedError without an analytic gradient.
  std::vector<double> density_partial(std::span<const double> xi, std::size_t j) const;

 private:
  std::string name_;
  ParameterDomain domain_;
  SpacePtr space_;
  DensityFn density_;
  std::optional<DensityGradFn> density_grad_;
  bool statistical_;
  double domination_tolerance_ = kDegenerateAtomTolerance;
};

using Direction = std::vector<double>;

/// p(xi) as a measure. Throws DomainError, NegativeDensityError, or
/// ModelError (non-finite density, statistical model off unit mass).
Measure evaluate(const ParametrizedMeasureModel& model, std::span<const double> xi);

/// Partial derivative of the atom masses with respect to xi_j; analytic when
/// available, otherwise central differences with step 1e-6 * max(1, |xi_j|).
std::vector<double> mass_partial(const ParametrizedMeasureModel& model, std::span<const double> xi,
                                 std::size_t j);

/// d_xi p(V) as a signed measure.
SignedMeasure mass_derivative(const ParametrizedMeasureModel& model, std::span<const double> xi,
                              std::span<const double> direction);

/// d_V log p(xi) per atom, 0 on atoms of zero mass. Throws DominationError when
/// the derivative charges an atom of zero mass.
std::vector<double> log_derivative(const ParametrizedMeasureModel& model,
                                   std::span<const double> xi, std::span<const double> direction);

/// ||d_V log p(xi)||_{L^k(p(xi))}; k >= 1, may be infinite.
double k_norm(const ParametrizedMeasureModel& model, std::span<const double> xi,
              std::span<const double> direction, double k);

struct IntegrabilityReport {
  double k = 2.0;
  double tolerance = 0.0;
  std::vector<std::vector<double>> grid;
  std::vector<Direction> directions;
  /// norms[d][g]: k-norm along direction d at grid point g.
  std::vector<std::vector<double>> norms;
  double max_jump = 0.0;
  /// max_jump divided by the largest norm seen along the same direction.
  double max_relative_jump = 0.0;
  std::size_t jump_direction = 0;
  std::size_t jump_index = 0;  // jump between grid points jump_index and jump_index + 1
  bool continuous = true;
};

/// Samples k_norm along an ordered grid; consecutive points are neighbours.
/// Flags a discontinuity when a jump exceeds tolerance times the largest norm
/// along that direction, or when a norm is not finite.
IntegrabilityReport check_k_integrability(const ParametrizedMeasureModel& model,
                                          const std::vector<std::vector<double>>& grid,
                                          const std::vector<Direction>& directions, double k,
                                          double tolerance);

struct PowerPath {
  PowerMeasure base;        // p(xi)^{1/k}
  PowerMeasure derivative;  // d_xi p^{1/k}(V) = (1/k) d_V log p(xi) p(xi)^{1/k}
};

PowerPath power_path(const ParametrizedMeasureModel& model, std::span<const double> xi,
                     std::span<const double> direction, double k);

/// n^n sum_i prod_k coeff^{(k)}_i for n arguments in S^{1/n}.
double canonical_tensor(std::span<const PowerMeasure> args);

/// tau^n(V_1, ..., V_n) = sum_i prod_k (d_{V_k} log p)_i p_i.
double tau_n(const ParametrizedMeasureModel& model, std::span<const double> xi,
             std::span<const Direction> directions);

/// Dense symmetric d x ... x d array, row-major.
struct TensorValue {
  std::size_t order = 0;
  std::size_t dim = 0;
  std::vector<double> values;

  double at(std::span<const std::size_t> index) const;
  double operator()(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * dim + j) * dim + k];
  }
};

/// tau^n over coordinate directions.
TensorValue canonical_tensor_field(const ParametrizedMeasureModel& model,
                                   std::span<const double> xi, std::size_t order);
TensorValue fisher_metric(const ParametrizedMeasureModel& model, std::span<const double> xi);
TensorValue amari_chentsov(const ParametrizedMeasureModel& model, std::span<const double> xi);

/// Smallest eigenvalue of an order-2 tensor.
double min_eigenvalue(const TensorValue& matrix);

/// Divides densities by the total mass; the gradient follows the quotient rule.
ParametrizedMeasureModel normalize_model(const ParametrizedMeasureModel& model);

/// xi -> K_* p(xi) on the kernel's target.
ParametrizedMeasureModel induced_model(const ParametrizedMeasureModel& model,
                                       const MarkovKernel& K);
ParametrizedMeasureModel induced_model(const ParametrizedMeasureModel& model,
                                       const Statistic& kappa);

/// Model whose density is a density-language expression in x1..xm (atom
/// coordinates) and t1..td (parameters). Without explicit gradient
/// expressions the gradient is derived symbolically; if that is not possible
/// the model falls back to finite differences.
ParametrizedMeasureModel dsl_model(std::string name, ParameterDomain domain, SpacePtr space,
                                   const std::string& density,
                                   const std::optional<std::vector<std::string>>& density_grad,
                                   bool statistical);

}  // namespace igk
