#pragma once

#include <limits>
#include <span>
#include <vector>

#include "igk/sample_space.hpp"

namespace igk {

/// Finite signed measure on an atomic space: one real mass per atom.
class SignedMeasure {
 public:
  /// Throws ValidationError on size mismatch or non-finite masses.
  SignedMeasure(SpacePtr space, std::vector<double> mass);

  static SignedMeasure zero(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::span<const double> mass() const noexcept { return mass_; }
  double operator[](std::size_t i) const { return mass_[i]; }
  std::size_t size() const noexcept { return mass_.size(); }

  /// Sum of masses (not the total variation).
  double total() const;

 protected:
  SpacePtr space_;
  std::vector<double> mass_;
};

/// Nonnegative finite measure.
class Measure : public SignedMeasure {
 public:
  Measure(SpacePtr space, std::vector<double> mass);
  /// The quadrature weights of `space` (counting measure without weights).
  static Measure base(SpacePtr space);
};

/// Nonnegative measure with total mass 1 within 1e-12.
class ProbabilityMeasure : public Measure {
 public:
  static constexpr double kMassTolerance = 1e-12;
  ProbabilityMeasure(SpacePtr space, std::vector<double> mass);
  static ProbabilityMeasure uniform(SpacePtr space);
  static ProbabilityMeasure dirac(SpacePtr space, std::size_t atom);
};

/// Total variation norm, the sum of absolute masses.
double tv_norm(const SignedMeasure& nu);

struct JordanParts {
  Measure positive;
  Measure negative;
};

/// Unique split nu = positive - negative with disjoint per-atom support.
JordanParts jordan_decompose(const SignedMeasure& nu);

/// True iff nu puts (up to tol * tv_norm(nu)) no mass on mu-null atoms.
bool dominates(const Measure& mu, const SignedMeasure& nu, double tol = 0.0);

/// Per-atom density d nu / d mu, with 0 on mu-null atoms.
/// Throws DominationError when nu charges a mu-null atom.
std::vector<double> radon_nikodym(const SignedMeasure& nu, const Measure& mu);

/// mu / tv_norm(mu); throws ZeroMassError for the zero measure.
ProbabilityMeasure normalize(const Measure& mu);

/// L^k(mu) norm of a per-atom function; k may be +infinity (essential sup
/// over atoms of positive mass). Requires k >= 1.
double lk_norm(std::span<const double> phi, const Measure& mu, double k);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace igk
