#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igk/markov.hpp"
#include "igk/models.hpp"

namespace igk {

/// Loss of order k at one (xi, V): ||d_V log p||_k^k - ||d_V log p'||_k^k.
struct LossEntry {
  std::vector<double> xi;
  Direction direction;
  double source = 0.0;   // ||d_V log p(xi)||_k^k
  double induced = 0.0;  // ||d_V log p'(xi)||_k^k
  double loss = 0.0;
};

struct LossReport {
  double k = 2.0;
  std::vector<LossEntry> entries;
  double max_loss = 0.0;
  std::size_t argmax = 0;
};

/// Information loss of order k through K (or kappa) at xi in direction V.
double information_loss(const ParametrizedMeasureModel& model, const MarkovKernel& K,
                        std::span<const double> xi, std::span<const double> direction, double k);
double information_loss(const ParametrizedMeasureModel& model, const Statistic& kappa,
                        std::span<const double> xi, std::span<const double> direction, double k);

/// Loss table of `model` against an already induced model, over a grid of
/// parameters and a set of directions.
LossReport loss_report(const ParametrizedMeasureModel& model,
                       const ParametrizedMeasureModel& induced,
                       const std::vector<std::vector<double>>& grid,
                       const std::vector<Direction>& directions, double k);

/// Coordinate basis of R^d.
std::vector<Direction> basis_directions(std::size_t dim);

struct MonotonicityReport {
  TensorValue fisher;          // g at xi
  TensorValue induced_fisher;  // g' at xi
  double min_gap_eigenvalue = 0.0;  // smallest eigenvalue of g - g'
  std::vector<Direction> directions;
  std::vector<double> gaps;    // g(V,V) - g'(V,V) per direction
  std::size_t violations = 0;  // gaps below -tolerance
  double tolerance = 1e-10;
  bool holds = true;
};

/// Compares Fisher forms of the model and its pushforward over the basis and
/// `random_directions` seeded random directions.
MonotonicityReport check_monotonicity(const ParametrizedMeasureModel& model,
                                      const MarkovKernel& K, std::span<const double> xi,
                                      std::size_t random_directions = 8, std::uint64_t seed = 0);

struct SufficiencyReport {
  bool sufficient = false;
  double tolerance = 0.0;
  LossReport primary;        // at the requested k
  LossReport cross_check;    // at a second k
  bool k_disagreement = false;
};

/// Sufficiency of K for the model on a grid: max loss over the grid and the
/// coordinate basis is at most tol. A second order (`cross_check_k`, default
/// 3 when k == 2 and 2 otherwise) is evaluated and disagreement is flagged.
SufficiencyReport is_sufficient(const ParametrizedMeasureModel& model, const MarkovKernel& K,
                                const std::vector<std::vector<double>>& grid, double k, double tol,
                                std::optional<double> cross_check_k = std::nullopt);
SufficiencyReport is_sufficient(const ParametrizedMeasureModel& model, const Statistic& kappa,
                                const std::vector<std::vector<double>>& grid, double k, double tol,
                                std::optional<double> cross_check_k = std::nullopt);

/// True iff d_V log p(xi) equals kappa^*(d_V log p'(xi)) on atoms of positive
/// mass, within 1e-8 * max(1, |value|).
bool equality_direction_check(const ParametrizedMeasureModel& model, const Statistic& kappa,
                              std::span<const double> xi, std::span<const double> direction);

enum class FactorizationStatus { Factorizable, NotFactorizable, Inapplicable };

std::string to_string(FactorizationStatus status);

/// Ratios p_i / p'_{kappa(i)} on one run of grid points sharing a support pattern.
struct SupportRun {
  std::size_t first = 0;  // grid indices [first, last]
  std::size_t last = 0;
  bool positive = true;   // every atom has positive mass on the run
  /// Candidate mu0 mass per atom; NaN where the fiber has zero mass on the run.
  std::vector<double> mu0;
  double max_variation = 0.0;
};

struct FactorizationWitness {
  std::vector<double> xi_a;
  std::vector<double> xi_b;
  std::size_t atom = 0;
  std::string atom_label;
  double value_a = 0.0;
  double value_b = 0.0;
  double variation = 0.0;
  bool across_runs = false;  // mismatch between support runs (mu+ != mu-)
};

struct FactorizationResult {
  FactorizationStatus status = FactorizationStatus::Inapplicable;
  bool positive = true;  // density strictly positive on the whole grid
  std::vector<double> mu0;             // when factorizable
  double residual = 0.0;               // max |reconstructed - p| over the grid
  std::optional<FactorizationWitness> witness;
  std::vector<SupportRun> runs;
  std::string note;
};

/// Relative ratio spread threshold used by fisher_neyman_check.
inline constexpr double kRatioVariationTolerance = 1e-9;

/// Searches for p(xi) = phi'(kappa(.), xi) mu0 on the grid.
FactorizationResult fisher_neyman_check(const ParametrizedMeasureModel& model,
                                        const Statistic& kappa,
                                        const std::vector<std::vector<double>>& grid);

/// p(xi) := phi'(kappa(.), xi) mu0 where phi' is the density of `target_model`
/// against its base weights; requires kappa_* mu0 = base weights of the target
/// (within 1e-12 relative).
ParametrizedMeasureModel fisher_neyman_model(const ParametrizedMeasureModel& target_model,
                                             const Statistic& kappa, const Measure& mu0);

/// CSV with one row per loss entry.
std::string loss_report_csv(const LossReport& report);

}  // namespace igk
