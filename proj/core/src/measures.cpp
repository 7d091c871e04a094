#include "igk/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "igk/error.hpp"

namespace igk {

SignedMeasure::SignedMeasure(SpacePtr space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (!space_) throw ValidationError("measure: null sample space");
  if (mass_.size() != space_->size())
    throw ValidationError("measure: expected " + std::to_string(space_->size()) + " masses, got " +
                          std::to_string(mass_.size()));
  for (double m : mass_)
    if (!std::isfinite(m)) throw ValidationError("measure: non-finite mass");
}

SignedMeasure SignedMeasure::zero(SpacePtr space) {
  const std::size_t n = space ? space->size() : 0;
  return SignedMeasure(std::move(space), std::vector<double>(n, 0.0));
}

double SignedMeasure::total() const {
  double s = 0.0;
  for (double m : mass_) s += m;
  return s;
}

Measure::Measure(SpacePtr space, std::vector<double> mass)
    : SignedMeasure(std::move(space), std::move(mass)) {
  for (double m : mass_)
    if (m < 0.0) throw ValidationError("measure: negative mass");
}

Measure Measure::base(SpacePtr space) {
  std::vector<double> w(space->size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = space->base_weight(i);
  return Measure(std::move(space), std::move(w));
}

ProbabilityMeasure::ProbabilityMeasure(SpacePtr space, std::vector<double> mass)
    : Measure(std::move(space), std::move(mass)) {
  if (std::abs(total() - 1.0) > kMassTolerance)
    throw ValidationError("probability measure: total mass " + std::to_string(total()) + " != 1");
}

ProbabilityMeasure ProbabilityMeasure::uniform(SpacePtr space) {
  const std::size_t n = space->size();
  return ProbabilityMeasure(std::move(space), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityMeasure ProbabilityMeasure::dirac(SpacePtr space, std::size_t atom) {
  std::vector<double> m(space->size(), 0.0);
  m.at(atom) = 1.0;
  return ProbabilityMeasure(std::move(space), std::move(m));
}

double tv_norm(const SignedMeasure& nu) {
  double s = 0.0;
  for (double m : nu.mass()) s += std::abs(m);
  return s;
}

JordanParts jordan_decompose(const SignedMeasure& nu) {
  std::vector<double> pos(nu.size(), 0.0);
  std::vector<double> neg(nu.size(), 0.0);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] > 0.0) pos[i] = nu[i];
    else if (nu[i] < 0.0) neg[i] = -nu[i];
  }
  return {Measure(nu.space(), std::move(pos)), Measure(nu.space(), std::move(neg))};
}

bool dominates(const Measure& mu, const SignedMeasure& nu, double tol) {
  require_same_space(mu.space(), nu.space(), "dominates");
  const double bound = tol * tv_norm(nu);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] != 0.0) continue;
    if (tol == 0.0 ? nu[i] != 0.0 : std::abs(nu[i]) > bound) return false;
  }
  return true;
}

std::vector<double> radon_nikodym(const SignedMeasure& nu, const Measure& mu) {
  require_same_space(mu.space(), nu.space(), "radon_nikodym");
  std::vector<double> density(nu.size(), 0.0);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (mu[i] > 0.0) {
      density[i] = nu[i] / mu[i];
    } else if (nu[i] != 0.0) {
      throw DominationError("radon_nikodym: mass " + std::to_string(nu[i]) + " on null atom '" +
                            mu.space()->label(i) + "'");
    }
  }
  return density;
}

ProbabilityMeasure normalize(const Measure& mu) {
  const double total = tv_norm(mu);
  if (total == 0.0) throw ZeroMassError("normalize: measure has zero total mass");
  std::vector<double> m(mu.mass().begin(), mu.mass().end());
  for (double& v : m) v /= total;
  return ProbabilityMeasure(mu.space(), std::move(m));
}

double lk_norm(std::span<const double> phi, const Measure& mu, double k) {
  if (phi.size() != mu.size()) throw ValidationError("lk_norm: function/measure size mismatch");
  if (!(k >= 1.0)) throw ValidationError("lk_norm: k must be >= 1");
  if (std::isinf(k)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (mu[i] > 0.0) sup = std::max(sup, std::abs(phi[i]));
    return sup;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (mu[i] > 0.0) s += std::pow(std::abs(phi[i]), k) * mu[i];
  return std::pow(s, 1.0 / k);
}

}  // namespace igk
