#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igk/measures.hpp"
#include "igk/power_measure.hpp"

namespace igk {

/// Deterministic map between atomic spaces, kappa: source -> target.
class Statistic {
 public:
  Statistic(SpacePtr source, SpacePtr target, std::vector<std::size_t> map);

  static Statistic identity(SpacePtr space);
  /// Everything to the single atom of `target`.
  static Statistic collapse(SpacePtr source, SpacePtr target);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t operator()(std::size_t atom) const { return map_[atom]; }

  /// Source atoms mapped to `target_atom`.
  std::vector<std::size_t> fiber(std::size_t target_atom) const;

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::size_t> map_;
};

/// Row-stochastic matrix: row i is the probability measure K(omega_i) on the target.
class MarkovKernel {
 public:
  static constexpr double kRowTolerance = 1e-12;

  /// `entries` is row-major, source.size() x target.size().
  MarkovKernel(SpacePtr source, SpacePtr target, std::vector<double> entries);

  static MarkovKernel identity(SpacePtr space);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return source_->size(); }
  std::size_t cols() const noexcept { return target_->size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * cols(), cols()}; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<double> entries_;
};

/// Per target atom, a probability measure on the source carried by the fiber
/// kappa^{-1}(target atom). Empty fibers are absent.
struct TransverseFamily {
  Statistic statistic;
  std::vector<std::optional<ProbabilityMeasure>> fibers;
};

/// Statistic, congruent kernel and projections with K = (kernel of to_target) o congruent.
struct KernelDecomposition {
  SpacePtr product;  // source x target, labels "omega|omega'"
  MarkovKernel congruent;
  Statistic to_source;
  Statistic to_target;
};

/// Row i is the Dirac measure at kappa(i).
MarkovKernel kernel_of_statistic(const Statistic& kappa);

SignedMeasure pushforward(const MarkovKernel& K, const SignedMeasure& mu);
Measure pushforward(const MarkovKernel& K, const Measure& mu);
SignedMeasure pushforward(const Statistic& kappa, const SignedMeasure& mu);
Measure pushforward(const Statistic& kappa, const Measure& mu);

/// kappa^* psi = psi o kappa.
std::vector<double> pullback(const Statistic& kappa, std::span<const double> psi);

/// phi' with K_*(phi mu) = phi' K_*mu; 0 on K_*mu-null target atoms.
std::vector<double> conditional_expectation(const MarkovKernel& K, const Measure& mu,
                                            std::span<const double> phi);

/// K2 o K1: first K1, then K2.
MarkovKernel compose(const MarkovKernel& K2, const MarkovKernel& K1);
Statistic compose(const Statistic& k2, const Statistic& k1);

/// True iff kappa_* K(omega') = delta_{omega'} entrywise within tol, for K from
/// kappa's target back to its source.
bool is_congruent(const MarkovKernel& K, const Statistic& kappa, double tol = 1e-12);

/// (kappa^* phi') mu with phi' = d nu' / d kappa_*mu. Throws DominationError.
SignedMeasure congruent_embedding(const Statistic& kappa, const Measure& mu,
                                  const SignedMeasure& nu_target);

/// Disintegration of mu along kappa. Null fibers carry the uniform measure.
TransverseFamily transverse_measures(const Statistic& kappa, const Measure& mu);

/// Kernel whose row omega' is the transverse fiber measure; throws
/// EmptyFiberError when some target atom has an empty preimage.
MarkovKernel congruent_kernel_from_embedding(const Statistic& kappa, const Measure& mu);

KernelDecomposition decompose_kernel(const MarkovKernel& K);

/// K_*^r(nu) = pow_signed(K_* pow_signed(nu, 1/r), r).
PowerMeasure power_pushforward(const MarkovKernel& K, const PowerMeasure& nu);

/// Formal derivative of K_*^r at mu^r in direction rho = phi mu^r: returns
/// phi' (K_*mu)^r with phi' the conditional expectation of phi.
PowerMeasure formal_power_derivative(const MarkovKernel& K, const Measure& mu,
                                     const PowerMeasure& rho);

/// Plain matrix with a header row of target labels.
std::string kernel_to_csv(const MarkovKernel& K);

}  // namespace igk
