#pragma once

#include <span>
#include <vector>

#include "igk/measures.hpp"

namespace igk {

/// Element of S^r(Omega) in canonical atomic form: sum_i coeff_i * (delta_i)^r
/// where delta_i is the unit point mass at atom i. For r = 1 the coefficients
/// are ordinary signed masses.
class PowerMeasure {
 public:
  /// Exponents within this slack of 1 are treated as 1.
  static constexpr double kExponentSlack = 1e-12;

  /// Throws ExponentError unless 0 < r <= 1, ValidationError on bad coefficients.
  PowerMeasure(SpacePtr space, double r, std::vector<double> coeff);

  /// Rebases phi * mu^r onto the canonical form: coeff_i = phi_i * mu_i^r.
  static PowerMeasure from_density(std::span<const double> phi, const Measure& mu, double r);

  const SpacePtr& space() const noexcept { return space_; }
  double exponent() const noexcept { return r_; }
  std::span<const double> coeff() const noexcept { return coeff_; }
  double operator[](std::size_t i) const { return coeff_[i]; }
  std::size_t size() const noexcept { return coeff_.size(); }

  /// The r = 1 element as a signed measure; throws ExponentError otherwise.
  SignedMeasure to_signed_measure() const;

 private:
  SpacePtr space_;
  double r_;
  std::vector<double> coeff_;
};

PowerMeasure as_power_measure(const SignedMeasure& nu);

/// mu^r: coeff_i = mu_i^r.
PowerMeasure power_of_measure(const Measure& mu, double r);

/// (sum_i |coeff_i|^{1/r})^r; equals tv_norm for r = 1.
double power_norm(const PowerMeasure& nu);

/// Componentwise product S^r x S^s -> S^{r+s}; requires r + s <= 1.
PowerMeasure multiply(const PowerMeasure& nu, const PowerMeasure& rho);

/// pi^k: coeff -> |coeff|^k, exponent r*k. Requires k > 0 and r*k <= 1.
PowerMeasure pow_abs(const PowerMeasure& nu, double k);

/// Signed power: coeff -> sign(coeff) |coeff|^k, exponent r*k.
PowerMeasure pow_signed(const PowerMeasure& nu, double k);

/// Derivative of pow_signed at nu in direction rho: k |nu|^{k-1} rho.
/// Requires 1 < k <= 1/r and nu, rho in the same S^r.
PowerMeasure d_pow_signed(const PowerMeasure& nu, const PowerMeasure& rho, double k);

/// Derivative of pow_abs at nu in direction rho: k sign(nu) |nu|^{k-1} rho.
PowerMeasure d_pow_abs(const PowerMeasure& nu, const PowerMeasure& rho, double k);

}  // namespace igk
