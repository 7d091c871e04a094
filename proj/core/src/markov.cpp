#include "igk/markov.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "igk/error.hpp"

namespace igk {
namespace {

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Statistic::Statistic(SpacePtr source, SpacePtr target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw ValidationError("Statistic: null sample space");
  if (map_.size() != source_->size())
    throw ValidationError("Statistic: map needs one entry per source atom");
  for (std::size_t j : map_)
    if (j >= target_->size())
      throw ValidationError("Statistic: target index " + std::to_string(j) + " out of range");
}

Statistic Statistic::identity(SpacePtr space) {
  std::vector<std::size_t> map(space->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return Statistic(space, space, std::move(map));
}

Statistic Statistic::collapse(SpacePtr source, SpacePtr target) {
  if (target->size() != 1) throw ValidationError("collapse: target must have exactly one atom");
  const std::size_t n = source->size();
  return Statistic(std::move(source), std::move(target), std::vector<std::size_t>(n, 0));
}

std::vector<std::size_t> Statistic::fiber(std::size_t target_atom) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] == target_atom) out.push_back(i);
  return out;
}

MarkovKernel::MarkovKernel(SpacePtr source, SpacePtr target, std::vector<double> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (!source_ || !target_) throw ValidationError("MarkovKernel: null sample space");
  if (entries_.size() != source_->size() * target_->size())
    throw ValidationError("MarkovKernel: expected a " + std::to_string(source_->size()) + "x" +
                          std::to_string(target_->size()) + " matrix");
  for (std::size_t i = 0; i < rows(); ++i) {
    double s = 0.0;
    for (double v : row(i)) {
      if (!std::isfinite(v) || v < 0.0)
        throw ValidationError("MarkovKernel: entries must be finite and nonnegative");
      s += v;
    }
    if (std::abs(s - 1.0) > kRowTolerance)
      throw ValidationError("MarkovKernel: row " + std::to_string(i) + " sums to " +
                            std::to_string(s));
  }
}

MarkovKernel MarkovKernel::identity(SpacePtr space) {
  return kernel_of_statistic(Statistic::identity(std::move(space)));
}

MarkovKernel kernel_of_statistic(const Statistic& kappa) {
  const std::size_t n = kappa.source()->size();
  const std::size_t m = kappa.target()->size();
  std::vector<double> entries(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * m + kappa(i)] = 1.0;
  return MarkovKernel(kappa.source(), kappa.target(), std::move(entries));
}

SignedMeasure pushforward(const MarkovKernel& K, const SignedMeasure& mu) {
  require_same_space(K.source(), mu.space(), "pushforward");
  std::vector<double> out(K.cols(), 0.0);
  for (std::size_t i = 0; i < K.rows(); ++i) {
    const double m = mu[i];
    if (m == 0.0) continue;
    const auto row = K.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j] * m;
  }
  return SignedMeasure(K.target(), std::move(out));
}

Measure pushforward(const MarkovKernel& K, const Measure& mu) {
  const SignedMeasure& base = mu;
  auto out = pushforward(K, base);
  return Measure(out.space(), std::vector<double>(out.mass().begin(), out.mass().end()));
}

SignedMeasure pushforward(const Statistic& kappa, const SignedMeasure& mu) {
  require_same_space(kappa.source(), mu.space(), "pushforward");
  std::vector<double> out(kappa.target()->size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) out[kappa(i)] += mu[i];
  return SignedMeasure(kappa.target(), std::move(out));
}

Measure pushforward(const Statistic& kappa, const Measure& mu) {
  const SignedMeasure& base = mu;
  auto out = pushforward(kappa, base);
  return Measure(out.space(), std::vector<double>(out.mass().begin(), out.mass().end()));
}

std::vector<double> pullback(const Statistic& kappa, std::span<const double> psi) {
  if (psi.size() != kappa.target()->size())
    throw ValidationError("pullback: function size does not match the target space");
  std::vector<double> out(kappa.source()->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi[kappa(i)];
  return out;
}

std::vector<double> conditional_expectation(const MarkovKernel& K, const Measure& mu,
                                            std::span<const double> phi) {
  require_same_space(K.source(), mu.space(), "conditional_expectation");
  if (phi.size() != mu.size())
    throw ValidationError("conditional_expectation: function size does not match the space");
  std::vector<double> num(K.cols(), 0.0);
  std::vector<double> den(K.cols(), 0.0);
  for (std::size_t i = 0; i < K.rows(); ++i) {
    if (mu[i] == 0.0) continue;
    const auto row = K.row(i);
    for (std::size_t j = 0; j < K.cols(); ++j) {
      const double w = row[j] * mu[i];
      num[j] += w * phi[i];
      den[j] += w;
    }
  }
  for (std::size_t j = 0; j < num.size(); ++j) num[j] = den[j] > 0.0 ? num[j] / den[j] : 0.0;
  return num;
}

MarkovKernel compose(const MarkovKernel& K2, const MarkovKernel& K1) {
  require_same_space(K1.target(), K2.source(), "compose");
  const std::size_t n = K1.rows(), mid = K1.cols(), m = K2.cols();
  std::vector<double> out(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < mid; ++l) {
      const double a = K1(i, l);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i * m + j] += a * K2(l, j);
    }
  }
  return MarkovKernel(K1.source(), K2.target(), std::move(out));
}

Statistic compose(const Statistic& k2, const Statistic& k1) {
  require_same_space(k1.target(), k2.source(), "compose");
  std::vector<std::size_t> map(k1.source()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = k2(k1(i));
  return Statistic(k1.source(), k2.target(), std::move(map));
}

bool is_congruent(const MarkovKernel& K, const Statistic& kappa, double tol) {
  require_same_space(K.source(), kappa.target(), "is_congruent");
  require_same_space(K.target(), kappa.source(), "is_congruent");
  const std::size_t m = kappa.target()->size();
  std::vector<double> image(m);
  for (std::size_t a = 0; a < K.rows(); ++a) {
    std::fill(image.begin(), image.end(), 0.0);
    const auto row = K.row(a);
    for (std::size_t i = 0; i < row.size(); ++i) image[kappa(i)] += row[i];
    for (std::size_t b = 0; b < m; ++b)
      if (std::abs(image[b] - (a == b ? 1.0 : 0.0)) > tol) return false;
  }
  return true;
}

SignedMeasure congruent_embedding(const Statistic& kappa, const Measure& mu,
                                  const SignedMeasure& nu_target) {
  require_same_space(kappa.source(), mu.space(), "congruent_embedding");
  require_same_space(kappa.target(), nu_target.space(), "congruent_embedding");
  const Measure image = pushforward(kappa, mu);
  const auto density = radon_nikodym(nu_target, image);
  const auto pulled = pullback(kappa, density);
  std::vector<double> out(mu.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pulled[i] * mu[i];
  return SignedMeasure(mu.space(), std::move(out));
}

TransverseFamily transverse_measures(const Statistic& kappa, const Measure& mu) {
  require_same_space(kappa.source(), mu.space(), "transverse_measures");
  const Measure image = pushforward(kappa, mu);
  const std::size_t n = mu.size();
  TransverseFamily family{kappa, {}};
  family.fibers.reserve(image.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    const auto fiber = kappa.fiber(j);
    if (fiber.empty()) {
      if (image[j] > 0.0)
        throw EmptyFiberError("transverse_measures: empty fiber over '" +
                              kappa.target()->label(j) + "' carries mass");
      family.fibers.emplace_back(std::nullopt);
      continue;
    }
    std::vector<double> m(n, 0.0);
    if (image[j] > 0.0) {
      for (std::size_t i : fiber) m[i] = mu[i] / image[j];
    } else {
      for (std::size_t i : fiber) m[i] = 1.0 / static_cast<double>(fiber.size());
    }
    // Summation order can leave the fiber total a few ulps off 1.
    double s = 0.0;
    for (std::size_t i : fiber) s += m[i];
    for (std::size_t i : fiber) m[i] /= s;
    family.fibers.emplace_back(ProbabilityMeasure(mu.space(), std::move(m)));
  }
  return family;
}

MarkovKernel congruent_kernel_from_embedding(const Statistic& kappa, const Measure& mu) {
  const auto family = transverse_measures(kappa, mu);
  const std::size_t n = kappa.source()->size();
  const std::size_t m = kappa.target()->size();
  std::vector<double> entries(m * n, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (!family.fibers[j])
      throw EmptyFiberError("congruent_kernel_from_embedding: target atom '" +
                            kappa.target()->label(j) + "' has an empty preimage");
    const auto mass = family.fibers[j]->mass();
    std::copy(mass.begin(), mass.end(), entries.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  return MarkovKernel(kappa.target(), kappa.source(), std::move(entries));
}

KernelDecomposition decompose_kernel(const MarkovKernel& K) {
  const auto& src = K.source();
  const auto& tgt = K.target();
  auto product = SampleSpace::product(*src, *tgt);
  const std::size_t n = src->size(), m = tgt->size();
  std::vector<double> entries(n * n * m, 0.0);
  std::vector<std::size_t> to_source(n * m), to_target(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      entries[i * (n * m) + i * m + j] = K(i, j);
      to_source[i * m + j] = i;
      to_target[i * m + j] = j;
    }
  }
  return KernelDecomposition{
      product,
      MarkovKernel(src, product, std::move(entries)),
      Statistic(product, src, std::move(to_source)),
      Statistic(product, tgt, std::move(to_target)),
  };
}

PowerMeasure power_pushforward(const MarkovKernel& K, const PowerMeasure& nu) {
  require_same_space(K.source(), nu.space(), "power_pushforward");
  const double r = nu.exponent();
  const auto linear = pow_signed(nu, 1.0 / r).to_signed_measure();
  return pow_signed(as_power_measure(pushforward(K, linear)), r);
}

PowerMeasure formal_power_derivative(const MarkovKernel& K, const Measure& mu,
                                     const PowerMeasure& rho) {
  require_same_space(K.source(), mu.space(), "formal_power_derivative");
  require_same_space(rho.space(), mu.space(), "formal_power_derivative");
  const double r = rho.exponent();
  std::vector<double> phi(mu.size(), 0.0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (mu[i] > 0.0) {
      phi[i] = rho[i] / std::pow(mu[i], r);
    } else if (rho[i] != 0.0) {
      throw DominationError("formal_power_derivative: direction charges null atom '" +
                            mu.space()->label(i) + "'");
    }
  }
  const auto conditioned = conditional_expectation(K, mu, phi);
  return PowerMeasure::from_density(conditioned, pushforward(K, mu), r);
}

std::string kernel_to_csv(const MarkovKernel& K) {
  std::string out;
  for (std::size_t j = 0; j < K.cols(); ++j) {
    if (j) out += ',';
    out += csv_field(K.target()->label(j));
  }
  out += '\n';
  for (std::size_t i = 0; i < K.rows(); ++i) {
    for (std::size_t j = 0; j < K.cols(); ++j) {
      if (j) out += ',';
      out += format_number(K(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace igk
