#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace igk {

class SampleSpace;
using SpacePtr = std::shared_ptr<const SampleSpace>;

/// Finite, ordered set of labeled atoms. Atoms may carry coordinates (used by
/// density expressions) and quadrature weights (the base mass of each atom).
class SampleSpace {
 public:
  /// Validates labels (non-empty, distinct), coordinates (uniform dimension,
  /// finite) and weights (finite, > 0).
  static SpacePtr make(std::vector<std::string> atoms,
                       std::optional<std::vector<std::vector<double>>> coords = std::nullopt,
                       std::optional<std::vector<double>> weights = std::nullopt);

  /// Atoms labeled "0", "1", ..., "n-1" without coordinates or weights.
  static SpacePtr indexed(std::size_t n);

  /// Midpoint grid of `points` cells on (a, b): coordinate = cell midpoint,
  /// weight = cell width.
  static SpacePtr grid(double a, double b, std::size_t points);

  /// Product of two spaces, row-major with `outer` varying slowest. Labels are
  /// "outer|inner", coordinates concatenate and weights multiply.
  static SpacePtr product(const SampleSpace& outer, const SampleSpace& inner);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& label(std::size_t i) const { return atoms_.at(i); }
  std::optional<std::size_t> find(const std::string& label) const;

  bool has_coords() const noexcept { return coords_.has_value(); }
  /// Coordinate dimension, 0 when the space carries no coordinates.
  std::size_t coord_dim() const noexcept;
  std::span<const double> coords(std::size_t i) const;

  bool has_weights() const noexcept { return weights_.has_value(); }
  /// Base mass of atom i: its quadrature weight, or 1 without weights.
  double base_weight(std::size_t i) const { return weights_ ? (*weights_)[i] : 1.0; }
  const std::optional<std::vector<double>>& weights() const noexcept { return weights_; }
  const std::optional<std::vector<std::vector<double>>>& coord_table() const noexcept {
    return coords_;
  }

  friend bool operator==(const SampleSpace& a, const SampleSpace& b);

 private:
  SampleSpace() = default;

  std::vector<std::string> atoms_;
  std::optional<std::vector<std::vector<double>>> coords_;
  std::optional<std::vector<double>> weights_;
};

/// Structural equality, with a pointer fast path.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Throws SpaceMismatchError naming `what` unless the spaces agree.
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what);

}  // namespace igk
