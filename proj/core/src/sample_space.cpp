#include "igk/sample_space.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "igk/error.hpp"

namespace igk {

SpacePtr SampleSpace::make(std::vector<std::string> atoms,
                           std::optional<std::vector<std::vector<double>>> coords,
                           std::optional<std::vector<double>> weights) {
  if (atoms.empty()) throw ValidationError("SampleSpace: at least one atom is required");
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms) {
    if (!seen.insert(a).second) throw ValidationError("SampleSpace: duplicate atom label '" + a + "'");
  }
  if (coords) {
    if (coords->size() != atoms.size())
      throw ValidationError("SampleSpace: coords must have one entry per atom");
    const std::size_t dim = coords->front().size();
    for (const auto& c : *coords) {
      if (c.size() != dim) throw ValidationError("SampleSpace: coords have inconsistent dimension");
      for (double v : c)
        if (!std::isfinite(v)) throw ValidationError("SampleSpace: non-finite coordinate");
    }
  }
  if (weights) {
    if (weights->size() != atoms.size())
      throw ValidationError("SampleSpace: weights must have one entry per atom");
    for (double w : *weights)
      if (!std::isfinite(w) || w <= 0.0)
        throw ValidationError("SampleSpace: weights must be finite and strictly positive");
  }
  auto space = std::shared_ptr<SampleSpace>(new SampleSpace());
  space->atoms_ = std::move(atoms);
  space->coords_ = std::move(coords);
  space->weights_ = std::move(weights);
  return space;
}

SpacePtr SampleSpace::indexed(std::size_t n) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::to_string(i));
  return make(std::move(atoms));
}

SpacePtr SampleSpace::grid(double a, double b, std::size_t points) {
  if (points == 0) throw ValidationError("grid: at least one point is required");
  if (!(std::isfinite(a) && std::isfinite(b) && a < b))
    throw ValidationError("grid: interval must be finite with a < b");
  const double width = (b - a) / static_cast<double>(points);
  std::vector<std::string> atoms;
  std::vector<std::vector<double>> coords;
  atoms.reserve(points);
  coords.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    atoms.push_back(std::to_string(i));
    coords.push_back({a + (static_cast<double>(i) + 0.5) * width});
  }
  return make(std::move(atoms), std::move(coords), std::vector<double>(points, width));
}

SpacePtr SampleSpace::product(const SampleSpace& outer, const SampleSpace& inner) {
  std::vector<std::string> atoms;
  atoms.reserve(outer.size() * inner.size());
  const bool with_coords = outer.has_coords() || inner.has_coords();
  const bool with_weights = outer.has_weights() || inner.has_weights();
  std::vector<std::vector<double>> coords;
  std::vector<double> weights;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t j = 0; j < inner.size(); ++j) {
      atoms.push_back(outer.label(i) + "|" + inner.label(j));
      if (with_coords) {
        std::vector<double> c;
        if (outer.has_coords()) c.insert(c.end(), outer.coords(i).begin(), outer.coords(i).end());
        if (inner.has_coords()) c.insert(c.end(), inner.coords(j).begin(), inner.coords(j).end());
        coords.push_back(std::move(c));
      }
      if (with_weights) weights.push_back(outer.base_weight(i) * inner.base_weight(j));
    }
  }
  std::optional<std::vector<std::vector<double>>> c;
  std::optional<std::vector<double>> w;
  if (with_coords) c = std::move(coords);
  if (with_weights) w = std::move(weights);
  return make(std::move(atoms), std::move(c), std::move(w));
}

std::optional<std::size_t> SampleSpace::find(const std::string& label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == label) return i;
  return std::nullopt;
}

std::size_t SampleSpace::coord_dim() const noexcept {
  return coords_ ? coords_->front().size() : 0;
}

std::span<const double> SampleSpace::coords(std::size_t i) const {
  if (!coords_) return {};
  return (*coords_)[i];
}

bool operator==(const SampleSpace& a, const SampleSpace& b) {
  return a.atoms_ == b.atoms_ && a.coords_ == b.coords_ && a.weights_ == b.weights_;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!same_space(a, b)) throw SpaceMismatchError(std::string(what) + ": sample spaces differ");
}

}  // namespace igk
