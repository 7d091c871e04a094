#include "igk/builtins.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "igk/error.hpp"

namespace igk::builtins {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SpacePtr sufficiency_space(std::size_t s_cells, std::size_t t_cells) {
  if (s_cells == 0 || s_cells % 2 != 0)
    throw ValidationError("ex-suff: the s direction needs an even, positive number of cells");
  if (t_cells == 0) throw ValidationError("ex-suff: the t direction needs at least one cell");
  return SampleSpace::product(*SampleSpace::grid(-1.0, 1.0, s_cells),
                              *SampleSpace::grid(0.0, 1.0, t_cells));
}

// (sin^2(t - 1/xi))^{1/xi^2} and its xi-derivative; both vanish where sin does.
struct Bump {
  double value;
  double derivative;
};

Bump nonregular_bump(double t, double xi) {
  const double a = t - 1.0 / xi;
  const double s = std::sin(a);
  const double u = s * s;
  if (u == 0.0) return {0.0, 0.0};
  const double log_u = std::log(u);
  const double f = std::exp(log_u / (xi * xi));
  if (f == 0.0) return {0.0, 0.0};
  const double xi2 = xi * xi;
  const double dg = -2.0 * log_u / (xi2 * xi) + 2.0 * (std::cos(a) / s) / (xi2 * xi2);
  return {f, f * dg};
}

}  // namespace

ParametrizedMeasureModel bernoulli() {
  auto space = SampleSpace::make({"1", "0"});
  DensityFn density = [](std::span<const double> xi) {
    return std::vector<double>{xi[0], 1.0 - xi[0]};
  };
  DensityGradFn grad = [](std::span<const double>, std::size_t) {
    return std::vector<double>{1.0, -1.0};
  };
  return ParametrizedMeasureModel("bernoulli", ParameterDomain::box(1, 0.0, 1.0), std::move(space),
                                  std::move(density), std::move(grad), true);
}

ParametrizedMeasureModel categorical(std::size_t n) {
  if (n < 2) throw ValidationError("categorical: at least two outcomes are required");
  DensityFn density = [n](std::span<const double> xi) {
    std::vector<double> p(n);
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      p[i] = xi[i];
      rest -= xi[i];
    }
    p[n - 1] = rest;
    return p;
  };
  DensityGradFn grad = [n](std::span<const double>, std::size_t j) {
    std::vector<double> g(n, 0.0);
    g[j] = 1.0;
    g[n - 1] = -1.0;
    return g;
  };
  return ParametrizedMeasureModel("categorical(" + std::to_string(n) + ")",
                                  ParameterDomain::box(n - 1, 0.0, 1.0), SampleSpace::indexed(n),
                                  std::move(density), std::move(grad), true);
}

ParametrizedMeasureModel gaussian_grid(double half_width, std::size_t points) {
  auto space = SampleSpace::grid(-half_width, half_width, points);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  DensityFn density = [space, norm](std::span<const double> xi) {
    const double mean = xi[0], sigma = xi[1];
    std::vector<double> p(space->size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double z = (space->coords(i)[0] - mean) / sigma;
      p[i] = norm / sigma * std::exp(-0.5 * z * z);
    }
    return p;
  };
  DensityGradFn grad = [space, norm](std::span<const double> xi, std::size_t j) {
    const double mean = xi[0], sigma = xi[1];
    std::vector<double> g(space->size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double z = (space->coords(i)[0] - mean) / sigma;
      const double p = norm / sigma * std::exp(-0.5 * z * z);
      g[i] = j == 0 ? p * z / sigma : p * (z * z - 1.0) / sigma;
    }
    return g;
  };
  ParametrizedMeasureModel raw("gaussian", ParameterDomain({{-kInf, kInf}, {0.0, kInf}}), space,
                               std::move(density), std::move(grad), false);
  auto normalized = normalize_model(raw);
  return ParametrizedMeasureModel("gaussian-grid", normalized.domain(), normalized.space(),
                                  [normalized](std::span<const double> xi) {
                                    return normalized.density(xi);
                                  },
                                  [normalized](std::span<const double> xi, std::size_t j) {
                                    return normalized.density_partial(xi, j);
                                  },
                                  true);
}

ParametrizedMeasureModel nonregular(std::size_t points) {
  auto space = SampleSpace::grid(0.0, std::numbers::pi, points);
  DensityFn density = [space](std::span<const double> xi) {
    std::vector<double> p(space->size(), 1.0);
    if (xi[0] == 0.0) return p;
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] = 1.0 + xi[0] * nonregular_bump(space->coords(i)[0], xi[0]).value;
    return p;
  };
  DensityGradFn grad = [space](std::span<const double> xi, std::size_t) {
    std::vector<double> g(space->size(), 0.0);
    if (xi[0] == 0.0) return g;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto b = nonregular_bump(space->coords(i)[0], xi[0]);
      g[i] = b.value + xi[0] * b.derivative;
    }
    return g;
  };
  return ParametrizedMeasureModel("ex4.1", ParameterDomain::box(1, -1.0, kInf), std::move(space),
                                  std::move(density), std::move(grad), false);
}

double suff_h(double xi) { return xi == 0.0 ? 0.0 : std::exp(-1.0 / std::abs(xi)); }

double suff_h_prime(double xi) {
  if (xi == 0.0) return 0.0;
  const double d = suff_h(xi) / (xi * xi);
  return xi > 0.0 ? d : -d;
}

ParametrizedMeasureModel sufficiency_without_factorization(std::size_t s_cells,
                                                           std::size_t t_cells) {
  auto space = sufficiency_space(s_cells, t_cells);
  DensityFn density = [space](std::span<const double> xi) {
    const double h = suff_h(xi[0]);
    std::vector<double> p(space->size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto c = space->coords(i);
      if (c[0] < 0.0) p[i] = 1.0 - h;
      else p[i] = xi[0] >= 0.0 ? h : 2.0 * h * c[1];
    }
    return p;
  };
  DensityGradFn grad = [space](std::span<const double> xi, std::size_t) {
    const double dh = suff_h_prime(xi[0]);
    std::vector<double> g(space->size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto c = space->coords(i);
      if (c[0] < 0.0) g[i] = -dh;
      else g[i] = xi[0] >= 0.0 ? dh : 2.0 * dh * c[1];
    }
    return g;
  };
  return ParametrizedMeasureModel("ex-suff", ParameterDomain::box(1, -kInf, kInf),
                                  std::move(space), std::move(density), std::move(grad), true);
}

Statistic first_coordinate_projection(std::size_t s_cells, std::size_t t_cells) {
  auto source = sufficiency_space(s_cells, t_cells);
  auto target = SampleSpace::grid(-1.0, 1.0, s_cells);
  std::vector<std::size_t> map(source->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i / t_cells;
  return Statistic(std::move(source), std::move(target), std::move(map));
}

double difference_quotient_l1(const ParametrizedMeasureModel& model, double base, double xi) {
  if (model.dim() != 1) throw ValidationError("difference_quotient_l1: one-parameter model required");
  if (xi == base) throw ValidationError("difference_quotient_l1: xi must differ from the base point");
  const double a[1] = {base};
  const double b[1] = {xi};
  const Measure p0 = evaluate(model, a);
  const Measure p1 = evaluate(model, b);
  double s = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) s += std::abs(p1[i] - p0[i]);
  return s / std::abs(xi - base);
}

ParametrizedMeasureModel by_name(const std::string& name, const RegistryOptions& options) {
  if (name == "bernoulli") return bernoulli();
  if (name == "gaussian-grid")
    return options.grid_points ? gaussian_grid(5.0, options.grid_points) : gaussian_grid();
  if (name == "ex4.1") return options.grid_points ? nonregular(options.grid_points) : nonregular();
  if (name == "ex-suff") return sufficiency_without_factorization(options.s_cells, options.t_cells);
  const std::string prefix = "categorical(";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
    std::size_t n = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size() - 1;
    const auto res = std::from_chars(first, last, n);
    if (res.ec == std::errc() && res.ptr == last) return categorical(n);
  }
  throw ValidationError("unknown builtin model '" + name + "'");
}

}  // namespace igk::builtins
