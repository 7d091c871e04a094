#include "igk/models.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "igk/dsl.hpp"
#include "igk/error.hpp"

namespace igk {
namespace {

std::string format_point(std::span<const double> xi) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t j = 0; j < xi.size(); ++j) os << (j ? ", " : "") << xi[j];
  os << ')';
  return os.str();
}

std::vector<double> density_partial_any(const ParametrizedMeasureModel& model,
                                        std::span<const double> xi, std::size_t j) {
  if (j >= model.dim()) throw ValidationError("partial derivative index out of range");
  if (model.has_analytic_gradient()) return model.density_partial(xi, j);

  const double h = 1e-6 * std::max(1.0, std::abs(xi[j]));
  std::vector<double> plus(xi.begin(), xi.end());
  std::vector<double> minus(xi.begin(), xi.end());
  plus[j] += h;
  minus[j] -= h;
  const auto& dom = model.domain();
  // Central differences, falling back to one-sided ones at the domain edge.
  double span = 2.0 * h;
  if (!dom.contains(plus)) {
    plus[j] = xi[j];
    span = h;
  } else if (!dom.contains(minus)) {
    minus[j] = xi[j];
    span = h;
  }
  auto hi = model.density(plus);
  const auto lo = model.density(minus);
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = (hi[i] - lo[i]) / span;
  return hi;
}

}  // namespace

ParameterDomain::ParameterDomain(std::vector<Interval> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw ValidationError("ParameterDomain: dimension must be at least 1");
  for (const auto& b : bounds_)
    if (!(b.lower < b.upper)) throw ValidationError("ParameterDomain: require lower < upper");
}

ParameterDomain ParameterDomain::box(std::size_t dim, double lower, double upper) {
  return ParameterDomain(std::vector<Interval>(dim, Interval{lower, upper}));
}

bool ParameterDomain::contains(std::span<const double> xi) const {
  if (xi.size() != bounds_.size()) return false;
  for (std::size_t j = 0; j < xi.size(); ++j)
    if (!(xi[j] > bounds_[j].lower && xi[j] < bounds_[j].upper)) return false;
  return true;
}

void ParameterDomain::require_inside(std::span<const double> xi) const {
  if (xi.size() != bounds_.size())
    throw DomainError("parameter has " + std::to_string(xi.size()) + " coordinates, expected " +
                      std::to_string(bounds_.size()));
  if (!contains(xi)) throw DomainError("parameter " + format_point(xi) + " outside the domain");
}

ParametrizedMeasureModel::ParametrizedMeasureModel(std::string name, ParameterDomain domain,
                                                   SpacePtr space, DensityFn density,
                                                   std::optional<DensityGradFn> density_grad,
                                                   bool statistical)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      space_(std::move(space)),
      density_(std::move(density)),
      density_grad_(std::move(density_grad)),
      statistical_(statistical) {
  if (!space_) throw ValidationError("model: null sample space");
  if (!density_) throw ValidationError("model: missing density evaluator");
}

ParametrizedMeasureModel ParametrizedMeasureModel::with_domination_tolerance(double tol) const {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw ValidationError("model: domination tolerance must be finite and >= 0");
  auto copy = *this;
  copy.domination_tolerance_ = tol;
  return copy;
}

std::vector<double> ParametrizedMeasureModel::density(std::span<const double> xi) const {
  auto p = density_(xi);
  if (p.size() != space_->size())
    throw ModelError("model '" + name_ + "': density returned " + std::to_string(p.size()) +
                     " values for " + std::to_string(space_->size()) + " atoms");
  return p;
}

std::vector<double> ParametrizedMeasureModel::density_partial(std::span<const double> xi,
                                                              std::size_t j) const {
  if (!density_grad_) throw UnsupportedError("model '" + name_ + "' has no analytic gradient");
  auto g = (*density_grad_)(xi, j);
  if (g.size() != space_->size())
    throw ModelError("model '" + name_ + "': gradient has wrong size");
  return g;
}

Measure evaluate(const ParametrizedMeasureModel& model, std::span<const double> xi) {
  model.domain().require_inside(xi);
  auto p = model.density(xi);
  const auto& space = *model.space();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]))
      throw ModelError("model '" + model.name() + "': non-finite density at atom '" +
                       space.label(i) + "', xi = " + format_point(xi));
    if (p[i] < 0.0)
      throw NegativeDensityError("model '" + model.name() + "': density " + std::to_string(p[i]) +
                                 " at atom '" + space.label(i) + "', xi = " + format_point(xi));
    p[i] *= space.base_weight(i);
  }
  Measure m(model.space(), std::move(p));
  if (model.statistical() && std::abs(m.total() - 1.0) > 1e-10)
    throw ModelError("model '" + model.name() + "' is declared statistical but has mass " +
                     std::to_string(m.total()) + " at xi = " + format_point(xi));
  return m;
}

std::vector<double> mass_partial(const ParametrizedMeasureModel& model, std::span<const double> xi,
                                 std::size_t j) {
  model.domain().require_inside(xi);
  auto g = density_partial_any(model, xi, j);
  const auto& space = *model.space();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i]))
      throw ModelError("model '" + model.name() + "': non-finite derivative at xi = " +
                       format_point(xi));
    g[i] *= space.base_weight(i);
  }
  return g;
}

SignedMeasure mass_derivative(const ParametrizedMeasureModel& model, std::span<const double> xi,
                              std::span<const double> direction) {
  if (direction.size() != model.dim())
    throw ValidationError("direction has " + std::to_string(direction.size()) +
                          " components, expected " + std::to_string(model.dim()));
  model.domain().require_inside(xi);
  std::vector<double> out(model.space()->size(), 0.0);
  for (std::size_t j = 0; j < direction.size(); ++j) {
    if (direction[j] == 0.0) continue;
    const auto g = mass_partial(model, xi, j);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += direction[j] * g[i];
  }
  return SignedMeasure(model.space(), std::move(out));
}

namespace {

std::vector<double> log_derivative_of(const ParametrizedMeasureModel& model,
                                      std::span<const double> xi, const Measure& m,
                                      std::span<const double> direction) {
  const auto dm = mass_derivative(model, xi, direction);
  const double scale = tv_norm(m) + tv_norm(dm);
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0.0) {
      out[i] = dm[i] / m[i];
    } else if (std::abs(dm[i]) > model.domination_tolerance() * scale) {
      throw DominationError("model '" + model.name() + "': derivative " + std::to_string(dm[i]) +
                            " on zero-mass atom '" + model.space()->label(i) +
                            "' at xi = " + format_point(xi));
    }
  }
  return out;
}

}  // namespace

std::vector<double> log_derivative(const ParametrizedMeasureModel& model,
                                   std::span<const double> xi, std::span<const double> direction) {
  return log_derivative_of(model, xi, evaluate(model, xi), direction);
}

double k_norm(const ParametrizedMeasureModel& model, std::span<const double> xi,
              std::span<const double> direction, double k) {
  const Measure m = evaluate(model, xi);
  return lk_norm(log_derivative_of(model, xi, m, direction), m, k);
}

IntegrabilityReport check_k_integrability(const ParametrizedMeasureModel& model,
                                          const std::vector<std::vector<double>>& grid,
                                          const std::vector<Direction>& directions, double k,
                                          double tolerance) {
  if (grid.empty()) throw ValidationError("check_k_integrability: empty grid");
  if (directions.empty()) throw ValidationError("check_k_integrability: no directions");
  if (!(k >= 1.0)) throw ValidationError("check_k_integrability: k must be >= 1");
  IntegrabilityReport report;
  report.k = k;
  report.tolerance = tolerance;
  report.grid = grid;
  report.directions = directions;
  report.norms.assign(directions.size(), std::vector<double>(grid.size(), 0.0));
  for (std::size_t d = 0; d < directions.size(); ++d) {
    auto& row = report.norms[d];
    for (std::size_t g = 0; g < grid.size(); ++g) row[g] = k_norm(model, grid[g], directions[d], k);

    double scale = 0.0;
    for (double v : row) scale = std::max(scale, std::abs(v));
    for (double v : row)
      if (!std::isfinite(v)) report.continuous = false;
    for (std::size_t g = 0; g + 1 < row.size(); ++g) {
      const double jump = std::abs(row[g + 1] - row[g]);
      const double relative = scale > 0.0 ? jump / scale : 0.0;
      if (jump > report.max_jump) report.max_jump = jump;
      if (relative > report.max_relative_jump) {
        report.max_relative_jump = relative;
        report.jump_direction = d;
        report.jump_index = g;
      }
    }
  }
  if (report.max_relative_jump > tolerance) report.continuous = false;
  return report;
}

PowerPath power_path(const ParametrizedMeasureModel& model, std::span<const double> xi,
                     std::span<const double> direction, double k) {
  if (!(k >= 1.0)) throw ExponentError("power_path: k must be >= 1");
  const Measure m = evaluate(model, xi);
  const auto logd = log_derivative_of(model, xi, m, direction);
  const double r = 1.0 / k;
  auto base = power_of_measure(m, r);
  std::vector<double> d(m.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = r * logd[i] * base[i];
  return {std::move(base), PowerMeasure(model.space(), r, std::move(d))};
}

double canonical_tensor(std::span<const PowerMeasure> args) {
  if (args.empty()) throw ValidationError("canonical_tensor: no arguments");
  const double n = static_cast<double>(args.size());
  const auto& space = args.front().space();
  for (const auto& a : args) {
    require_same_space(space, a.space(), "canonical_tensor");
    if (std::abs(a.exponent() - 1.0 / n) > 1e-12)
      throw ExponentError("canonical_tensor: every argument must lie in S^{1/" +
                          std::to_string(args.size()) + "}");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < space->size(); ++i) {
    double prod = 1.0;
    for (const auto& a : args) prod *= a[i];
    s += prod;
  }
  return std::pow(n, n) * s;
}

double tau_n(const ParametrizedMeasureModel& model, std::span<const double> xi,
             std::span<const Direction> directions) {
  if (directions.empty()) throw ValidationError("tau_n: at least one direction is required");
  const Measure m = evaluate(model, xi);
  std::vector<std::vector<double>> logd;
  logd.reserve(directions.size());
  for (const auto& v : directions) logd.push_back(log_derivative_of(model, xi, m, v));
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0.0) continue;
    double prod = m[i];
    for (const auto& l : logd) prod *= l[i];
    s += prod;
  }
  return s;
}

double TensorValue::at(std::span<const std::size_t> index) const {
  if (index.size() != order) throw ValidationError("TensorValue: index has wrong order");
  std::size_t flat = 0;
  for (std::size_t i : index) flat = flat * dim + i;
  return values.at(flat);
}

TensorValue canonical_tensor_field(const ParametrizedMeasureModel& model,
                                   std::span<const double> xi, std::size_t order) {
  if (order == 0) throw ValidationError("canonical_tensor_field: order must be >= 1");
  const std::size_t d = model.dim();
  const Measure m = evaluate(model, xi);
  std::vector<std::vector<double>> logd(d);
  for (std::size_t j = 0; j < d; ++j) {
    Direction e(d, 0.0);
    e[j] = 1.0;
    logd[j] = log_derivative_of(model, xi, m, e);
  }

  std::size_t total = 1;
  for (std::size_t k = 0; k < order; ++k) total *= d;
  TensorValue t{order, d, std::vector<double>(total, 0.0)};
  std::vector<std::size_t> index(order), sorted(order);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = order; k-- > 0;) {
      index[k] = rest % d;
      rest /= d;
    }
    sorted = index;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != index) {
      // The sorted permutation is lexicographically smallest, hence already filled.
      std::size_t source = 0;
      for (std::size_t i : sorted) source = source * d + i;
      t.values[flat] = t.values[source];
      continue;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0.0) continue;
      double prod = m[i];
      for (std::size_t k : index) prod *= logd[k][i];
      s += prod;
    }
    t.values[flat] = s;
  }
  return t;
}

TensorValue fisher_metric(const ParametrizedMeasureModel& model, std::span<const double> xi) {
  return canonical_tensor_field(model, xi, 2);
}

TensorValue amari_chentsov(const ParametrizedMeasureModel& model, std::span<const double> xi) {
  return canonical_tensor_field(model, xi, 3);
}

double min_eigenvalue(const TensorValue& matrix) {
  if (matrix.order != 2) throw ValidationError("min_eigenvalue: order-2 tensor required");
  const auto d = static_cast<Eigen::Index>(matrix.dim);
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      a(i, j) = matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

ParametrizedMeasureModel normalize_model(const ParametrizedMeasureModel& model) {
  auto total_of = [model](std::span<const double> xi, const std::vector<double>& p) {
    double t = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i] * model.space()->base_weight(i);
    if (!(t > 0.0))
      throw ZeroMassError("normalize_model: zero total mass at xi = " + format_point(xi));
    return t;
  };
  DensityFn density = [model, total_of](std::span<const double> xi) {
    auto p = model.density(xi);
    const double t = total_of(xi, p);
    for (double& v : p) v /= t;
    return p;
  };
  DensityGradFn grad = [model, total_of](std::span<const double> xi, std::size_t j) {
    const auto p = model.density(xi);
    const double t = total_of(xi, p);
    auto g = density_partial_any(model, xi, j);
    double dt = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) dt += g[i] * model.space()->base_weight(i);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = (g[i] * t - p[i] * dt) / (t * t);
    return g;
  };
  return ParametrizedMeasureModel("normalized(" + model.name() + ")", model.domain(),
                                  model.space(), std::move(density), std::move(grad), true)
      .with_domination_tolerance(model.domination_tolerance());
}

namespace {

template <typename Push>
ParametrizedMeasureModel induced(const ParametrizedMeasureModel& model, SpacePtr target,
                                 Push push, const std::string& how) {
  auto to_density = [target](std::vector<double> mass) {
    for (std::size_t j = 0; j < mass.size(); ++j) mass[j] /= target->base_weight(j);
    return mass;
  };
  DensityFn density = [model, push, to_density](std::span<const double> xi) {
    auto p = model.density(xi);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] *= model.space()->base_weight(i);
    return to_density(push(p));
  };
  DensityGradFn grad = [model, push, to_density](std::span<const double> xi, std::size_t j) {
    auto g = density_partial_any(model, xi, j);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] *= model.space()->base_weight(i);
    return to_density(push(g));
  };
  return ParametrizedMeasureModel(how + "(" + model.name() + ")", model.domain(), std::move(target),
                                  std::move(density), std::move(grad), model.statistical())
      .with_domination_tolerance(model.domination_tolerance());
}

}  // namespace

ParametrizedMeasureModel induced_model(const ParametrizedMeasureModel& model,
                                       const MarkovKernel& K) {
  require_same_space(model.space(), K.source(), "induced_model");
  auto push = [K](const std::vector<double>& mass) {
    std::vector<double> out(K.cols(), 0.0);
    for (std::size_t i = 0; i < K.rows(); ++i) {
      if (mass[i] == 0.0) continue;
      const auto row = K.row(i);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j] * mass[i];
    }
    return out;
  };
  return induced(model, K.target(), push, "pushforward");
}

ParametrizedMeasureModel induced_model(const ParametrizedMeasureModel& model,
                                       const Statistic& kappa) {
  require_same_space(model.space(), kappa.source(), "induced_model");
  auto push = [kappa](const std::vector<double>& mass) {
    std::vector<double> out(kappa.target()->size(), 0.0);
    for (std::size_t i = 0; i < mass.size(); ++i) out[kappa(i)] += mass[i];
    return out;
  };
  return induced(model, kappa.target(), push, "pushforward");
}

ParametrizedMeasureModel dsl_model(std::string name, ParameterDomain domain, SpacePtr space,
                                   const std::string& density,
                                   const std::optional<std::vector<std::string>>& density_grad,
                                   bool statistical) {
  const dsl::ParseOptions options{space->coord_dim(), domain.dim(), false};
  auto expr = dsl::parse(density, options);

  std::optional<std::vector<dsl::Expr>> grads;
  if (density_grad) {
    if (density_grad->size() != domain.dim())
      throw ValidationError("density_grad must list one expression per parameter");
    grads.emplace();
    for (const auto& g : *density_grad) grads->push_back(dsl::parse(g, options));
  } else {
    try {
      grads.emplace();
      for (std::size_t j = 0; j < domain.dim(); ++j) grads->push_back(dsl::differentiate(expr, j));
    } catch (const UnsupportedError&) {
      grads.reset();
    }
  }

  auto eval_all = [space](const dsl::Expr& e, std::span<const double> xi) {
    std::vector<double> out(space->size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dsl::eval(e, space->coords(i), xi);
    return out;
  };
  DensityFn fn = [expr, eval_all](std::span<const double> xi) { return eval_all(expr, xi); };
  std::optional<DensityGradFn> grad_fn;
  if (grads) {
    grad_fn = [g = *grads, eval_all](std::span<const double> xi, std::size_t j) {
      return eval_all(g.at(j), xi);
    };
  }
  return ParametrizedMeasureModel(std::move(name), std::move(domain), std::move(space),
                                  std::move(fn), std::move(grad_fn), statistical);
}

}  // namespace igk
