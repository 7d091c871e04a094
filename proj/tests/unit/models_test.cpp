#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "igk/builtins.hpp"
#include "igk/error.hpp"
#include "igk/models.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace igk {
namespace {

using builtins::bernoulli;

const std::vector<double> kUnit{1.0};

std::vector<double> at(double xi) { return {xi}; }

std::vector<double> vec_of(const SignedMeasure& m) { return {m.mass().begin(), m.mass().end()}; }

ParametrizedMeasureModel two_atom_model(std::string name, std::function<std::vector<double>(double)> p,
                                        std::function<std::vector<double>(double)> dp,
                                        ParameterDomain domain = ParameterDomain::box(1, -2, 2)) {
  return ParametrizedMeasureModel(
      std::move(name), std::move(domain), SampleSpace::indexed(2),
      [p](std::span<const double> xi) { return p(xi[0]); },
      [dp](std::span<const double> xi, std::size_t) { return dp(xi[0]); });
}

ParametrizedMeasureModel product_of_bernoullis() {
  std::vector<std::vector<double>> coords{{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  auto space = SampleSpace::make({"11", "10", "01", "00"}, coords);
  return dsl_model("bernoulli^2", ParameterDomain::box(2, 0, 1), space,
                   "(x1*t1+(1-x1)*(1-t1))*(x2*t2+(1-x2)*(1-t2))", std::nullopt, true);
}

TEST(ParameterDomainTest, ContainsIsOpen) {
  auto d = ParameterDomain::box(1, 0, 1);
  EXPECT_TRUE(d.contains(at(0.5)));
  EXPECT_FALSE(d.contains(at(0.0)));
  EXPECT_FALSE(d.contains(std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(d.require_inside(at(1.0)), DomainError);
  EXPECT_THROW(ParameterDomain({{1, 1}}), ValidationError);
  EXPECT_THROW(ParameterDomain(std::vector<Interval>{}), ValidationError);
}

TEST(EvaluateTest, Examples) {
  auto m = evaluate(bernoulli(), at(0.25));
  EXPECT_EQ(m[0], 0.25);
  EXPECT_EQ(m[1], 0.75);

  auto nonregular = builtins::nonregular(1000);
  auto flat = evaluate(nonregular, at(0.0));
  for (std::size_t i = 0; i < flat.size(); ++i)
    EXPECT_EQ(flat[i], nonregular.space()->base_weight(i));
  EXPECT_NEAR(tv_norm(flat), std::numbers::pi, 1e-12);

  auto suff = builtins::sufficiency_without_factorization(20, 10);
  auto m0 = evaluate(suff, at(0.0));
  for (std::size_t i = 0; i < m0.size(); ++i) {
    if (suff.space()->coords(i)[0] < 0) EXPECT_GT(m0[i], 0.0);
    else EXPECT_EQ(m0[i], 0.0);
  }
  EXPECT_NEAR(tv_norm(m0), 1.0, 1e-12);
}

TEST(EvaluateTest, Errors) {
  EXPECT_THROW(evaluate(bernoulli(), at(1.5)), DomainError);
  auto negative = two_atom_model("neg", [](double x) { return std::vector<double>{x, 1}; },
                                 [](double) { return std::vector<double>{1, 0}; });
  EXPECT_THROW(evaluate(negative, at(-0.5)), NegativeDensityError);
  auto off = ParametrizedMeasureModel("off", ParameterDomain::box(1, 0, 1), SampleSpace::indexed(2),
                                      [](std::span<const double>) { return std::vector<double>{0.5, 0.6}; },
                                      std::nullopt, true);
  EXPECT_THROW(evaluate(off, at(0.5)), ModelError);
}

TEST(LogDerivativeTest, Examples) {
  auto ld = log_derivative(bernoulli(), at(0.25), kUnit);
  EXPECT_NEAR(ld[0], 4.0, 1e-15);
  EXPECT_NEAR(ld[1], -4.0 / 3.0, 1e-15);

  auto constant = two_atom_model("const", [](double) { return std::vector<double>{1, 2}; },
                                 [](double) { return std::vector<double>{0, 0}; });
  EXPECT_EQ(log_derivative(constant, at(0.3), kUnit), (std::vector<double>{0, 0}));

  auto suff = builtins::sufficiency_without_factorization(20, 10);
  for (double v : log_derivative(suff, at(0.0), kUnit)) EXPECT_EQ(v, 0.0);
}

TEST(LogDerivativeTest, DominationViolation) {
  auto bad = two_atom_model("bad", [](double) { return std::vector<double>{0, 1}; },
                            [](double) { return std::vector<double>{1, 0}; });
  EXPECT_THROW(log_derivative(bad, at(0.1), kUnit), DominationError);
  // Zero mass with zero derivative is fine.
  auto ok = two_atom_model("ok", [](double x) { return std::vector<double>{x * x, 1}; },
                           [](double x) { return std::vector<double>{2 * x, 0}; });
  EXPECT_EQ(log_derivative(ok, at(0.0), kUnit)[0], 0.0);

  auto noisy = two_atom_model("noisy", [](double) { return std::vector<double>{0, 1}; },
                              [](double) { return std::vector<double>{1e-8, 0}; });
  EXPECT_THROW(log_derivative(noisy, at(0.1), kUnit), DominationError);
  auto relaxed = noisy.with_domination_tolerance(1e-6);
  EXPECT_EQ(log_derivative(relaxed, at(0.1), kUnit)[0], 0.0);
  EXPECT_EQ(induced_model(relaxed, MarkovKernel::identity(relaxed.space())).domination_tolerance(), 1e-6);
  EXPECT_THROW(noisy.with_domination_tolerance(-1), ValidationError);
}

TEST(KNormTest, Examples) {
  EXPECT_NEAR(k_norm(bernoulli(), at(0.5), kUnit, 2), 2.0, 1e-15);
  EXPECT_EQ(k_norm(bernoulli(), at(0.3), std::vector<double>{0.0}, 2), 0.0);
  EXPECT_THROW(k_norm(bernoulli(), at(0.3), kUnit, 0.5), ValidationError);

  auto suff = builtins::sufficiency_without_factorization(20, 10);
  auto pushed = induced_model(suff, builtins::first_coordinate_projection(20, 10));
  for (double k : {1.0, 2.0, 3.0})
    EXPECT_NEAR(k_norm(suff, at(0.5), kUnit, k), k_norm(pushed, at(0.5), kUnit, k), 1e-12);
}

TEST(KNormTest, Oracle) {
  for (double xi : {0.1, 0.25, 0.5, 0.8}) {
    const double n2 = k_norm(bernoulli(), at(xi), kUnit, 2);
    EXPECT_NEAR(n2 * n2, testing::bernoulli_fisher(xi), 1e-12 * testing::bernoulli_fisher(xi));
    EXPECT_NEAR(k_norm(bernoulli(), at(xi), kUnit, kInfinity), std::max(1 / xi, 1 / (1 - xi)), 1e-12);
  }
}

std::vector<std::vector<double>> linspace_grid(double a, double b, std::size_t n) {
  std::vector<std::vector<double>> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back({a + (b - a) * static_cast<double>(i) / (n - 1.0)});
  return g;
}

TEST(IntegrabilityTest, BernoulliJumpShrinksWithGrid) {
  double previous = kInfinity;
  for (std::size_t n : {41, 161, 641}) {
    auto r = check_k_integrability(bernoulli(), linspace_grid(0.1, 0.9, n), {kUnit}, 2, 0.1);
    EXPECT_TRUE(r.continuous);
    EXPECT_LT(r.max_jump, previous);
    previous = r.max_jump;
  }
  EXPECT_LT(previous, 0.05);
}

TEST(IntegrabilityTest, SufficiencyExampleAcrossZero) {
  auto suff = builtins::sufficiency_without_factorization(20, 10);
  for (double k : {1.5, 2.0, 3.0}) {
    auto coarse = check_k_integrability(suff, linspace_grid(-0.9, 0.9, 361), {kUnit}, k, 0.05);
    auto r = check_k_integrability(suff, linspace_grid(-0.9, 0.9, 1441), {kUnit}, k, 0.05);
    EXPECT_TRUE(r.continuous) << k << " " << r.max_relative_jump;
    EXPECT_LT(r.max_relative_jump, coarse.max_relative_jump / 2);
  }
}

TEST(IntegrabilityTest, AbsoluteValueModelIsFlagged) {
  auto model = ParametrizedMeasureModel(
      "abs", ParameterDomain::box(1, -1, 1), SampleSpace::indexed(2),
      [](std::span<const double> xi) { return std::vector<double>{std::abs(xi[0]), 1.0}; });
  auto r = check_k_integrability(model, linspace_grid(-0.95, 0.95, 20), {kUnit}, 2, 0.1);
  EXPECT_FALSE(r.continuous);
  // Refining does not make the relative jump near zero go away.
  auto fine = check_k_integrability(model, linspace_grid(-0.95, 0.95, 400), {kUnit}, 2, 0.1);
  EXPECT_FALSE(fine.continuous);
}

TEST(PowerPathTest, Examples) {
  auto path = power_path(bernoulli(), at(0.5), kUnit, 2);
  const double s = std::sqrt(0.5);
  EXPECT_NEAR(path.base[0], s, 1e-15);
  EXPECT_NEAR(path.base[1], s, 1e-15);
  EXPECT_NEAR(path.derivative[0], s, 1e-15);
  EXPECT_NEAR(path.derivative[1], -s, 1e-15);
  EXPECT_EQ(path.derivative.exponent(), 0.5);

  auto zero = power_path(bernoulli(), at(0.3), std::vector<double>{0.0}, 3);
  for (double c : zero.derivative.coeff()) EXPECT_EQ(c, 0.0);
}

TEST(PowerPathTest, MatchesFiniteDifferencesAndRecombines) {
  std::mt19937_64 rng(7);
  auto model = testing::random_positive_model(rng, 6, 2);
  const std::vector<double> xi{0.3, -0.4}, v{0.7, -1.1};
  for (double k : {1.0, 2.0, 3.0}) {
    auto path = power_path(model, xi, v, k);
    const double h = 1e-4;
    auto shifted = [&](double s) {
      std::vector<double> p{xi[0] + s * v[0], xi[1] + s * v[1]};
      return pow_signed(PowerMeasure(model.space(), 1.0, vec_of(evaluate(model, p))), 1.0 / k);
    };
    auto plus = shifted(h), minus = shifted(-h), plus2 = shifted(2 * h), minus2 = shifted(-2 * h);
    for (std::size_t i = 0; i < 6; ++i) {
      const double fd = (-plus2[i] + 8 * plus[i] - 8 * minus[i] + minus2[i]) / (12 * h);
      EXPECT_NEAR(path.derivative[i], fd, 1e-6 * std::max(1e-3, std::abs(fd)));
    }
    auto dm = mass_derivative(model, xi, v);
    auto recombined = k == 1.0 ? path.derivative : d_pow_signed(path.base, path.derivative, k);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(recombined[i], dm[i], 1e-12 * (1 + std::abs(dm[i])));
  }
}

TEST(CanonicalTensorTest, Examples) {
  auto s = SampleSpace::indexed(3);
  Measure mu(s, {0.2, 0.5, 1.1});
  std::vector<PowerMeasure> one{as_power_measure(mu)};
  EXPECT_NEAR(canonical_tensor(one), 1.8, 1e-15);

  ProbabilityMeasure p(s, {0.2, 0.3, 0.5});
  auto root = power_of_measure(p, 0.5);
  std::vector<PowerMeasure> two{root, root};
  EXPECT_NEAR(canonical_tensor(two), 4.0, 1e-14);

  std::vector<double> stretched(root.coeff().begin(), root.coeff().end());
  for (double& c : stretched) c *= 2.5;
  std::vector<PowerMeasure> scaled{root, PowerMeasure(s, 0.5, stretched)};
  EXPECT_NEAR(canonical_tensor(scaled), 2.5 * 4.0, 1e-13);

  std::vector<PowerMeasure> mixed{root, as_power_measure(mu)};
  EXPECT_THROW(canonical_tensor(mixed), ExponentError);
}

TEST(TauTest, Examples) {
  std::vector<Direction> one{kUnit};
  EXPECT_NEAR(tau_n(bernoulli(), at(0.3), one), 0.0, 1e-15);
  std::vector<Direction> two{kUnit, kUnit};
  EXPECT_NEAR(tau_n(bernoulli(), at(0.5), two), 4.0, 1e-14);
  std::vector<Direction> three{kUnit, kUnit, kUnit};
  EXPECT_NEAR(tau_n(bernoulli(), at(0.5), three), 0.0, 1e-14);
  // 1/xi^2 - 1/(1-xi)^2
  EXPECT_NEAR(tau_n(bernoulli(), at(0.25), three), 16.0 - 16.0 / 9.0, 1e-12);
}

TEST(TauTest, PullbackIdentityOnRandomModels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = testing::uniform_size(rng, 1, 3);
    auto model = testing::random_positive_model(rng, testing::uniform_size(rng, 2, 8), d);
    auto xi = testing::random_vector(rng, d, -1.5, 1.5);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<Direction> dirs;
      std::vector<PowerMeasure> derivatives;
      for (std::size_t k = 0; k < n; ++k) {
        dirs.push_back(testing::random_vector(rng, d, -1, 1));
        derivatives.push_back(power_path(model, xi, dirs.back(), static_cast<double>(n)).derivative);
      }
      const double tau = tau_n(model, xi, dirs);
      EXPECT_NEAR(canonical_tensor(derivatives), tau, 1e-10 * std::max(1.0, std::abs(tau)));
    }
  }
}

TEST(TensorFieldTest, BernoulliFisherAndAmariChentsov) {
  auto g = fisher_metric(bernoulli(), at(0.5));
  ASSERT_EQ(g.order, 2u);
  ASSERT_EQ(g.dim, 1u);
  EXPECT_NEAR(g(0, 0), 4.0, 1e-14);
  auto t = amari_chentsov(bernoulli(), at(0.5));
  EXPECT_NEAR(t(0, 0, 0), 0.0, 1e-14);
  for (double xi : {0.1, 0.4, 0.7})
    EXPECT_NEAR(fisher_metric(bernoulli(), at(xi))(0, 0), testing::bernoulli_fisher(xi), 1e-10);
}

TEST(TensorFieldTest, ProductModelIsBlockDiagonal) {
  auto model = product_of_bernoullis();
  const std::vector<double> xi{0.3, 0.6};
  auto g = fisher_metric(model, xi);
  EXPECT_NEAR(g(0, 0), testing::bernoulli_fisher(0.3), 1e-12);
  EXPECT_NEAR(g(1, 1), testing::bernoulli_fisher(0.6), 1e-12);
  EXPECT_NEAR(g(0, 1), 0.0, 1e-12);
  EXPECT_EQ(g(0, 1), g(1, 0));
}

TEST(TensorFieldTest, FisherIsPositiveSemidefinite) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = testing::uniform_size(rng, 1, 4);
    auto model = testing::random_positive_model(rng, testing::uniform_size(rng, 1, 8), d);
    auto xi = testing::random_vector(rng, d, -1.5, 1.5);
    EXPECT_GE(min_eigenvalue(fisher_metric(model, xi)), -1e-10);
  }
}

TEST(TensorFieldTest, AmariChentsovIsSymmetric) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto model = testing::random_positive_model(rng, 6, 3);
    auto t = amari_chentsov(model, testing::random_vector(rng, 3, -1.5, 1.5));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const double v = t(i, j, k);
          for (double w : {t(i, k, j), t(j, i, k), t(j, k, i), t(k, i, j), t(k, j, i)})
            EXPECT_NEAR(v, w, 1e-10);
        }
  }
}

TEST(TensorFieldTest, MatchesTauOnBasisDirections) {
  std::mt19937_64 rng(19);
  auto model = testing::random_positive_model(rng, 5, 2);
  const std::vector<double> xi{0.2, -0.7};
  auto field = canonical_tensor_field(model, xi, 4);
  const std::vector<std::size_t> index{0, 1, 1, 0};
  std::vector<Direction> dirs;
  for (auto i : index) dirs.push_back(i == 0 ? Direction{1, 0} : Direction{0, 1});
  EXPECT_NEAR(field.at(index), tau_n(model, xi, dirs), 1e-12);
}

TEST(NormalizeModelTest, Examples) {
  auto b = normalize_model(bernoulli());
  for (double xi : {0.2, 0.6}) {
    auto m0 = evaluate(bernoulli(), at(xi)), m1 = evaluate(b, at(xi));
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(m0[i], m1[i], 1e-12);
  }

  auto raw = two_atom_model("raw", [](double x) { return std::vector<double>{x, 1}; },
                            [](double) { return std::vector<double>{1, 0}; },
                            ParameterDomain::box(1, 0, 10));
  auto normalized = normalize_model(raw);
  EXPECT_TRUE(normalized.statistical());
  for (double xi : {0.5, 1.0, 3.0}) {
    auto m = evaluate(normalized, at(xi));
    EXPECT_NEAR(m[0], xi / (1 + xi), 1e-15);
    EXPECT_NEAR(m[1], 1 / (1 + xi), 1e-15);
    auto dm = mass_derivative(normalized, at(xi), kUnit);
    EXPECT_NEAR(dm[0], 1 / ((1 + xi) * (1 + xi)), 1e-14);
    std::vector<Direction> one{kUnit};
    EXPECT_NEAR(tau_n(normalized, at(xi), one), 0.0, 1e-14);
  }

  auto vanishing = two_atom_model("vanishing", [](double x) { return std::vector<double>{x, 0}; },
                                  [](double) { return std::vector<double>{1, 0}; });
  EXPECT_THROW(evaluate(normalize_model(vanishing), at(0.0)), ZeroMassError);
}

TEST(InducedModelTest, Examples) {
  auto id = induced_model(bernoulli(), MarkovKernel::identity(bernoulli().space()));
  EXPECT_EQ(vec_of(evaluate(id, at(0.3))), vec_of(evaluate(bernoulli(), at(0.3))));

  auto suff = builtins::sufficiency_without_factorization(20, 10);
  auto pushed = induced_model(suff, builtins::first_coordinate_projection(20, 10));
  for (double xi : {-0.5, 0.0, 0.4}) {
    const double h = builtins::suff_h(xi);
    const auto density = pushed.density(at(xi));
    for (std::size_t j = 0; j < 20; ++j)
      EXPECT_NEAR(density[j], pushed.space()->coords(j)[0] < 0 ? 1 - h : h, 1e-14);
  }

  auto nonregular = builtins::nonregular(1000);
  auto bins = SampleSpace::make({"low", "high"});
  std::vector<std::size_t> map(1000);
  for (std::size_t i = 0; i < 1000; ++i) map[i] = i < 500 ? 0 : 1;
  auto coarse = induced_model(nonregular, Statistic(nonregular.space(), bins, map));
  auto fine = evaluate(nonregular, at(0.7));
  auto summed = evaluate(coarse, at(0.7));
  double low = 0, high = 0;
  for (std::size_t i = 0; i < 1000; ++i) (i < 500 ? low : high) += fine[i];
  EXPECT_NEAR(summed[0], low, 1e-12);
  EXPECT_NEAR(summed[1], high, 1e-12);

  EXPECT_THROW(induced_model(bernoulli(), MarkovKernel::identity(SampleSpace::indexed(2))),
               SpaceMismatchError);
}

TEST(ModelProperties, MassDerivativeConsistency) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = testing::uniform_size(rng, 1, 3);
    auto model = testing::random_positive_model(rng, testing::uniform_size(rng, 1, 8), d);
    auto xi = testing::random_vector(rng, d, -1.5, 1.5);
    auto v = testing::random_vector(rng, d, -1, 1);
    auto m = evaluate(model, xi);
    auto ld = log_derivative(model, xi, v);
    double lhs = 0;
    for (std::size_t i = 0; i < m.size(); ++i) lhs += ld[i] * m[i];
    const double fd = testing::five_point_derivative(
        [&](double s) {
          std::vector<double> p(d);
          for (std::size_t j = 0; j < d; ++j) p[j] = xi[j] + s * v[j];
          return tv_norm(evaluate(model, p));
        },
        0.0, 1e-3);
    EXPECT_NEAR(lhs, fd, 1e-6 * std::max(1.0, std::abs(fd)));

    auto statistical = normalize_model(model);
    auto sm = evaluate(statistical, xi);
    auto sld = log_derivative(statistical, xi, v);
    double total = 0;
    for (std::size_t i = 0; i < sm.size(); ++i) total += sld[i] * sm[i];
    EXPECT_NEAR(total, 0.0, 1e-12);
  }
}

TEST(ModelProperties, KNormsIncreaseWithK) {
  std::mt19937_64 rng(29);
  const std::vector<double> ks{1.0, 1.5, 2.0, 3.0, 7.0, kInfinity};
  for (int trial = 0; trial < 200; ++trial) {
    auto s = SampleSpace::indexed(testing::uniform_size(rng, 1, 8));
    auto mu = testing::random_measure(rng, s, 0.2);
    if (mu.total() == 0.0) continue;
    auto p = normalize(mu);
    auto phi = testing::random_vector(rng, s->size(), -3, 3);
    for (std::size_t a = 0; a + 1 < ks.size(); ++a)
      EXPECT_LE(lk_norm(phi, p, ks[a]), lk_norm(phi, p, ks[a + 1]) * (1 + 1e-12));
  }
}

TEST(ModelProperties, NonregularDifferenceQuotientLimit) {
  auto model = builtins::nonregular(20000);
  const std::vector<double> xis{1.0, 0.5, 0.3, 0.2};
  std::vector<double> q;
  for (double xi : xis) q.push_back(builtins::difference_quotient_l1(model, 0.0, xi));
  EXPECT_NEAR(q[0], std::numbers::pi / 2, 1e-6);
  EXPECT_NEAR(q[1], testing::wallis_sin_power_integral(4), 1e-6);
  EXPECT_NEAR(q[3], testing::wallis_sin_power_integral(25), 1e-6);
  for (std::size_t i = 0; i + 1 < q.size(); ++i) EXPECT_GT(q[i], q[i + 1]);
  // The quotient decays like 1/sqrt(n) in n = 1/xi^2, not to zero quickly.
  EXPECT_GT(q[3], 0.3);
}

TEST(ModelProperties, NonregularGradientIsZeroAtOrigin) {
  auto model = builtins::nonregular(1000);
  for (double g : mass_partial(model, at(0.0), 0)) EXPECT_EQ(g, 0.0);
  for (double v : log_derivative(model, at(0.0), kUnit)) EXPECT_EQ(v, 0.0);
}

TEST(DslModelTest, SymbolicGradientAndFallback) {
  auto space = testing::coordinate_space(4);
  auto smooth = dsl_model("s", ParameterDomain::box(1, -2, 2), space, "exp(t1*x1)", std::nullopt, false);
  EXPECT_TRUE(smooth.has_analytic_gradient());
  auto g = mass_partial(smooth, at(0.5), 0);
  for (std::size_t i = 0; i < 4; ++i) {
    const double x = space->coords(i)[0];
    EXPECT_NEAR(g[i], x * std::exp(0.5 * x), 1e-14);
  }
  auto rough = dsl_model("r", ParameterDomain::box(1, -2, 2), space, "1+abs(t1)*x1", std::nullopt, false);
  auto fd = mass_partial(rough, at(0.5), 0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(fd[i], space->coords(i)[0], 1e-8);

  std::vector<std::string> grads{"2*t1"};
  auto explicit_grad = dsl_model("e", ParameterDomain::box(1, -2, 2), space, "t1^2+x1", grads, false);
  EXPECT_EQ(mass_partial(explicit_grad, at(0.75), 0)[0], 1.5 * space->base_weight(0));
  EXPECT_THROW(dsl_model("bad", ParameterDomain::box(1, -2, 2), space, "t2", std::nullopt, false),
               UnknownIdentifierError);
}

}  // namespace
}  // namespace igk
