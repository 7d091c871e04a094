#include "igk/power_measure.hpp"

#include <cmath>
#include <string>

#include "igk/error.hpp"

namespace igk {
namespace {

double clamp_exponent(double r) {
  return std::abs(r - 1.0) <= PowerMeasure::kExponentSlack ? 1.0 : r;
}

void require_exponent(double r, const char* what) {
  if (!(r > 0.0) || r > 1.0 + PowerMeasure::kExponentSlack)
    throw ExponentError(std::string(what) + ": exponent " + std::to_string(r) + " outside (0, 1]");
}

double signed_pow(double x, double k) {
  if (x == 0.0) return 0.0;
  const double p = std::pow(std::abs(x), k);
  return x < 0.0 ? -p : p;
}

void require_same(const PowerMeasure& a, const PowerMeasure& b, const char* what) {
  require_same_space(a.space(), b.space(), what);
}

}  // namespace

PowerMeasure::PowerMeasure(SpacePtr space, double r, std::vector<double> coeff)
    : space_(std::move(space)), r_(clamp_exponent(r)), coeff_(std::move(coeff)) {
  require_exponent(r, "PowerMeasure");
  if (!space_) throw ValidationError("PowerMeasure: null sample space");
  if (coeff_.size() != space_->size())
    throw ValidationError("PowerMeasure: coefficient count does not match the space");
  for (double c : coeff_)
    if (!std::isfinite(c)) throw ValidationError("PowerMeasure: non-finite coefficient");
}

PowerMeasure PowerMeasure::from_density(std::span<const double> phi, const Measure& mu, double r) {
  require_exponent(r, "from_density");
  if (phi.size() != mu.size()) throw ValidationError("from_density: size mismatch");
  std::vector<double> c(phi.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = phi[i] * std::pow(mu[i], r);
  return PowerMeasure(mu.space(), r, std::move(c));
}

SignedMeasure PowerMeasure::to_signed_measure() const {
  if (r_ != 1.0) throw ExponentError("to_signed_measure: exponent is not 1");
  return SignedMeasure(space_, coeff_);
}

PowerMeasure as_power_measure(const SignedMeasure& nu) {
  return PowerMeasure(nu.space(), 1.0, std::vector<double>(nu.mass().begin(), nu.mass().end()));
}

PowerMeasure power_of_measure(const Measure& mu, double r) {
  require_exponent(r, "power_of_measure");
  std::vector<double> c(mu.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r == 1.0 ? mu[i] : std::pow(mu[i], r);
  return PowerMeasure(mu.space(), r, std::move(c));
}

double power_norm(const PowerMeasure& nu) {
  const double r = nu.exponent();
  double s = 0.0;
  if (r == 1.0) {
    for (double c : nu.coeff()) s += std::abs(c);
    return s;
  }
  for (double c : nu.coeff()) s += std::pow(std::abs(c), 1.0 / r);
  return std::pow(s, r);
}

PowerMeasure multiply(const PowerMeasure& nu, const PowerMeasure& rho) {
  require_same(nu, rho, "multiply");
  const double r = nu.exponent() + rho.exponent();
  if (r > 1.0 + PowerMeasure::kExponentSlack)
    throw ExponentError("multiply: exponent sum " + std::to_string(r) + " exceeds 1");
  std::vector<double> c(nu.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = nu[i] * rho[i];
  return PowerMeasure(nu.space(), r, std::move(c));
}

namespace {

double checked_power_exponent(const PowerMeasure& nu, double k, const char* what) {
  if (!(k > 0.0)) throw ExponentError(std::string(what) + ": k must be positive");
  const double rk = nu.exponent() * k;
  if (rk > 1.0 + PowerMeasure::kExponentSlack)
    throw ExponentError(std::string(what) + ": resulting exponent " + std::to_string(rk) +
                        " exceeds 1");
  return rk;
}

}  // namespace

PowerMeasure pow_abs(const PowerMeasure& nu, double k) {
  const double rk = checked_power_exponent(nu, k, "pow_abs");
  std::vector<double> c(nu.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = nu[i] == 0.0 ? 0.0 : std::pow(std::abs(nu[i]), k);
  return PowerMeasure(nu.space(), rk, std::move(c));
}

PowerMeasure pow_signed(const PowerMeasure& nu, double k) {
  const double rk = checked_power_exponent(nu, k, "pow_signed");
  std::vector<double> c(nu.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = signed_pow(nu[i], k);
  return PowerMeasure(nu.space(), rk, std::move(c));
}

namespace {

void check_derivative_args(const PowerMeasure& nu, const PowerMeasure& rho, double k,
                           const char* what) {
  require_same(nu, rho, what);
  if (nu.exponent() != rho.exponent())
    throw ExponentError(std::string(what) + ": base point and direction exponents differ");
  if (!(k > 1.0) || nu.exponent() * k > 1.0 + PowerMeasure::kExponentSlack)
    throw ExponentError(std::string(what) + ": k must lie in (1, 1/r]");
}

}  // namespace

PowerMeasure d_pow_signed(const PowerMeasure& nu, const PowerMeasure& rho, double k) {
  check_derivative_args(nu, rho, k, "d_pow_signed");
  std::vector<double> c(nu.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = k * (nu[i] == 0.0 ? 0.0 : std::pow(std::abs(nu[i]), k - 1.0)) * rho[i];
  return PowerMeasure(nu.space(), nu.exponent() * k, std::move(c));
}

PowerMeasure d_pow_abs(const PowerMeasure& nu, const PowerMeasure& rho, double k) {
  check_derivative_args(nu, rho, k, "d_pow_abs");
  std::vector<double> c(nu.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * signed_pow(nu[i], k - 1.0) * rho[i];
  return PowerMeasure(nu.space(), nu.exponent() * k, std::move(c));
}

}  // namespace igk
