#include "igk/infoloss.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <random>

#include "igk/error.hpp"
#include "igk/parallel.hpp"

namespace igk {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// sum_i |d_V log p(xi)|_i^k p_i, i.e. the k-th power of the k-norm.
double norm_power(const ParametrizedMeasureModel& model, std::span<const double> xi,
                  std::span<const double> direction, double k) {
  if (!(k >= 1.0) || std::isinf(k)) throw ValidationError("information loss needs finite k >= 1");
  const Measure m = evaluate(model, xi);
  const auto logd = log_derivative(model, xi, direction);
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0.0) s += std::pow(std::abs(logd[i]), k) * m[i];
  return s;
}

double quadratic_form(const TensorValue& g, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) s += v[i] * g(i, j) * v[j];
  return s;
}

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_number(v[i]);
  }
  return out;
}

SufficiencyReport sufficiency(const ParametrizedMeasureModel& model,
                              const ParametrizedMeasureModel& induced,
                              const std::vector<std::vector<double>>& grid, double k, double tol,
                              std::optional<double> cross_check_k) {
  if (!(k > 1.0)) throw ValidationError("is_sufficient: k must be > 1");
  if (grid.empty()) throw ValidationError("is_sufficient: empty grid");
  const double k2 = cross_check_k.value_or(k == 2.0 ? 3.0 : 2.0);
  const auto directions = basis_directions(model.dim());
  SufficiencyReport report;
  report.tolerance = tol;
  report.primary = loss_report(model, induced, grid, directions, k);
  report.cross_check = loss_report(model, induced, grid, directions, k2);
  report.sufficient = report.primary.max_loss <= tol;
  report.k_disagreement = (report.cross_check.max_loss <= tol) != report.sufficient;
  return report;
}

}  // namespace

double information_loss(const ParametrizedMeasureModel& model, const MarkovKernel& K,
                        std::span<const double> xi, std::span<const double> direction, double k) {
  const auto induced = induced_model(model, K);
  return norm_power(model, xi, direction, k) - norm_power(induced, xi, direction, k);
}

double information_loss(const ParametrizedMeasureModel& model, const Statistic& kappa,
                        std::span<const double> xi, std::span<const double> direction, double k) {
  const auto induced = induced_model(model, kappa);
  return norm_power(model, xi, direction, k) - norm_power(induced, xi, direction, k);
}

std::vector<Direction> basis_directions(std::size_t dim) {
  std::vector<Direction> out(dim, Direction(dim, 0.0));
  for (std::size_t j = 0; j < dim; ++j) out[j][j] = 1.0;
  return out;
}

LossReport loss_report(const ParametrizedMeasureModel& model,
                       const ParametrizedMeasureModel& induced,
                       const std::vector<std::vector<double>>& grid,
                       const std::vector<Direction>& directions, double k) {
  LossReport report;
  report.k = k;
  report.max_loss = -std::numeric_limits<double>::infinity();
  const std::size_t nd = directions.size();
  report.entries.resize(grid.size() * nd);
  parallel_for(report.entries.size(), [&](std::size_t slot) {
    const auto& xi = grid[slot / nd];
    const auto& v = directions[slot % nd];
    LossEntry e{xi, v, norm_power(model, xi, v, k), norm_power(induced, xi, v, k), 0.0};
    e.loss = e.source - e.induced;
    report.entries[slot] = std::move(e);
  });
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (report.entries[i].loss > report.max_loss) {
      report.max_loss = report.entries[i].loss;
      report.argmax = i;
    }
  }
  if (report.entries.empty()) report.max_loss = 0.0;
  return report;
}

MonotonicityReport check_monotonicity(const ParametrizedMeasureModel& model,
                                      const MarkovKernel& K, std::span<const double> xi,
                                      std::size_t random_directions, std::uint64_t seed) {
  const auto induced = induced_model(model, K);
  MonotonicityReport report;
  report.fisher = fisher_metric(model, xi);
  report.induced_fisher = fisher_metric(induced, xi);

  TensorValue gap = report.fisher;
  for (std::size_t i = 0; i < gap.values.size(); ++i) gap.values[i] -= report.induced_fisher.values[i];
  report.min_gap_eigenvalue = min_eigenvalue(gap);

  report.directions = basis_directions(model.dim());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (std::size_t r = 0; r < random_directions; ++r) {
    Direction v(model.dim());
    for (double& c : v) c = normal(rng);
    report.directions.push_back(std::move(v));
  }
  for (const auto& v : report.directions) {
    const double g = quadratic_form(report.fisher, v) - quadratic_form(report.induced_fisher, v);
    report.gaps.push_back(g);
    if (g < -report.tolerance) ++report.violations;
  }
  report.holds = report.violations == 0;
  return report;
}

SufficiencyReport is_sufficient(const ParametrizedMeasureModel& model, const MarkovKernel& K,
                                const std::vector<std::vector<double>>& grid, double k, double tol,
                                std::optional<double> cross_check_k) {
  return sufficiency(model, induced_model(model, K), grid, k, tol, cross_check_k);
}

SufficiencyReport is_sufficient(const ParametrizedMeasureModel& model, const Statistic& kappa,
                                const std::vector<std::vector<double>>& grid, double k, double tol,
                                std::optional<double> cross_check_k) {
  return sufficiency(model, induced_model(model, kappa), grid, k, tol, cross_check_k);
}

bool equality_direction_check(const ParametrizedMeasureModel& model, const Statistic& kappa,
                              std::span<const double> xi, std::span<const double> direction) {
  const auto induced = induced_model(model, kappa);
  const Measure m = evaluate(model, xi);
  const auto source = log_derivative(model, xi, direction);
  const auto pulled = pullback(kappa, log_derivative(induced, xi, direction));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0.0) continue;
    if (std::abs(source[i] - pulled[i]) > 1e-8 * std::max(1.0, std::abs(source[i]))) return false;
  }
  return true;
}

std::string to_string(FactorizationStatus status) {
  switch (status) {
    case FactorizationStatus::Factorizable: return "factorizable";
    case FactorizationStatus::NotFactorizable: return "not-factorizable";
    case FactorizationStatus::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

FactorizationResult fisher_neyman_check(const ParametrizedMeasureModel& model,
                                        const Statistic& kappa,
                                        const std::vector<std::vector<double>>& grid) {
  require_same_space(model.space(), kappa.source(), "fisher_neyman_check");
  if (grid.empty()) throw ValidationError("fisher_neyman_check: empty grid");
  const auto& target = *kappa.target();
  const std::size_t n = model.space()->size();

  FactorizationResult result;
  std::vector<Measure> source_mass;
  std::vector<Measure> target_mass;
  for (const auto& xi : grid) {
    source_mass.push_back(evaluate(model, xi));
    target_mass.push_back(pushforward(kappa, source_mass.back()));
    if (source_mass.back().total() == 0.0) {
      result.status = FactorizationStatus::Inapplicable;
      result.positive = false;
      result.note = "model vanishes identically at a grid point";
      return result;
    }
  }

  auto pattern = [&](std::size_t g) {
    std::vector<bool> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = source_mass[g][i] > 0.0;
    return p;
  };
  // ratio_i = p_i / p'_{kappa(i)} scaled by the target base weight, so that a
  // model built as phi'(kappa(.)) mu0 yields mu0 itself.
  auto ratio = [&](std::size_t g, std::size_t i) {
    const double t = target_mass[g][kappa(i)];
    return t > 0.0 ? source_mass[g][i] / t * target.base_weight(kappa(i)) : kNaN;
  };

  // Maximal runs of consecutive grid points with a common support pattern.
  std::size_t start = 0;
  auto current = pattern(0);
  for (std::size_t g = 1; g <= grid.size(); ++g) {
    std::vector<bool> next;
    if (g < grid.size()) next = pattern(g);
    if (g < grid.size() && next == current) continue;
    SupportRun run;
    run.first = start;
    run.last = g - 1;
    for (bool b : current) run.positive = run.positive && b;
    run.mu0.assign(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      const double first = ratio(start, i);
      if (std::isnan(first)) continue;
      double lo = first, hi = first;
      std::size_t g_lo = start, g_hi = start;
      for (std::size_t h = start + 1; h < g; ++h) {
        const double v = ratio(h, i);
        if (v < lo) { lo = v; g_lo = h; }
        if (v > hi) { hi = v; g_hi = h; }
      }
      const double variation = hi == 0.0 ? 0.0 : (lo == 0.0 ? kInfinity : hi / lo - 1.0);
      run.mu0[i] = first;
      if (variation > run.max_variation) {
        run.max_variation = variation;
        if (variation > kRatioVariationTolerance &&
            (!result.witness || variation > result.witness->variation)) {
          result.witness = FactorizationWitness{grid[g_lo], grid[g_hi], i, kappa.source()->label(i),
                                                lo, hi, variation, false};
        }
      }
    }
    result.positive = result.positive && run.positive;
    result.runs.push_back(std::move(run));
    start = g;
    if (g < grid.size()) current = std::move(next);
  }

  if (result.witness) {
    result.status = FactorizationStatus::NotFactorizable;
    result.note = "ratio p / p'(kappa) depends on xi within a support run";
    return result;
  }

  // Runs must agree wherever both determine the ratio.
  std::vector<double> merged(n, kNaN);
  std::vector<std::size_t> owner(n, 0);
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const auto& run = result.runs[r];
    for (std::size_t i = 0; i < n; ++i) {
      const double v = run.mu0[i];
      if (std::isnan(v)) continue;
      if (std::isnan(merged[i])) {
        merged[i] = v;
        owner[i] = r;
        continue;
      }
      const double scale = std::max(std::abs(v), std::abs(merged[i]));
      const double variation = scale == 0.0 ? 0.0 : std::abs(v - merged[i]) / scale;
      if (variation > kRatioVariationTolerance &&
          (!result.witness || variation > result.witness->variation)) {
        result.witness = FactorizationWitness{grid[result.runs[owner[i]].first], grid[run.first],
                                              i, kappa.source()->label(i), merged[i], v, variation,
                                              true};
      }
    }
  }
  if (result.witness) {
    result.status = FactorizationStatus::NotFactorizable;
    result.note = "support runs factorize with different base measures";
    return result;
  }

  for (double& v : merged)
    if (std::isnan(v)) v = 0.0;
  result.mu0 = merged;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = kappa(i);
      const double rebuilt = target_mass[g][j] / target.base_weight(j) * merged[i];
      result.residual = std::max(result.residual, std::abs(rebuilt - source_mass[g][i]));
    }
  }
  result.status = FactorizationStatus::Factorizable;
  result.note = result.positive ? "positive density: ratio independent of xi"
                                : "factorization holds on every support run with a common measure";
  return result;
}

ParametrizedMeasureModel fisher_neyman_model(const ParametrizedMeasureModel& target_model,
                                             const Statistic& kappa, const Measure& mu0) {
  require_same_space(target_model.space(), kappa.target(), "fisher_neyman_model");
  require_same_space(mu0.space(), kappa.source(), "fisher_neyman_model");
  const Measure image = pushforward(kappa, mu0);
  const auto& target = kappa.target();
  for (std::size_t j = 0; j < image.size(); ++j) {
    const double w = target->base_weight(j);
    if (std::abs(image[j] - w) > 1e-12 * w)
      throw ValidationError("fisher_neyman_model: kappa_* mu0 must equal the target base measure");
  }
  const auto source = kappa.source();
  auto lift = [kappa, mu0, source](const std::vector<double>& phi) {
    std::vector<double> p(source->size());
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] = phi[kappa(i)] * mu0[i] / source->base_weight(i);
    return p;
  };
  DensityFn density = [target_model, lift](std::span<const double> xi) {
    return lift(target_model.density(xi));
  };
  DensityGradFn grad = [target_model, lift](std::span<const double> xi, std::size_t j) {
    auto g = mass_partial(target_model, xi, j);
    for (std::size_t t = 0; t < g.size(); ++t) g[t] /= target_model.space()->base_weight(t);
    return lift(g);
  };
  return ParametrizedMeasureModel("fisher-neyman(" + target_model.name() + ")",
                                  target_model.domain(), source, std::move(density),
                                  std::move(grad), target_model.statistical());
}

std::string loss_report_csv(const LossReport& report) {
  std::string out = "xi,direction,k,source,induced,loss\n";
  for (const auto& e : report.entries) {
    out += join(e.xi) + ',' + join(e.direction) + ',' + format_number(report.k) + ',' +
           format_number(e.source) + ',' + format_number(e.induced) + ',' + format_number(e.loss) +
           '\n';
  }
  return out;
}

}  // namespace igk
