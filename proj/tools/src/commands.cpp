#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string_view>

#include "igk/cli.hpp"
#include "igk/igk.hpp"

namespace igk::cli {
namespace {

using io::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegativeLossTolerance = 1e-10;

std::vector<std::string> split(std::string_view text, std::string_view separators) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || separators.find(text[i]) != std::string_view::npos) {
      std::string_view piece = text.substr(start, i - start);
      while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
      while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
      if (!piece.empty()) out.emplace_back(piece);
      start = i + 1;
    }
  }
  return out;
}

double parse_number(std::string_view text, const std::string& what) {
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ValidationError(what + ": '" + std::string(text) + "' is not a number");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& piece : split(text, ",;")) out.push_back(parse_number(piece, what));
  return out;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join(std::span<const double> v, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += fmt(v[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

json number_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

// ---------------------------------------------------------------------------
// Input resolution.

std::vector<double> linspace(const std::string& text) {
  const auto parts = split(text, ":");
  if (parts.size() != 3) throw ValidationError("--xi-grid: expected a:b:n, got '" + text + "'");
  const double a = parse_number(parts[0], "--xi-grid");
  const double b = parse_number(parts[1], "--xi-grid");
  std::size_t n = 0;
  const auto res = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (res.ec != std::errc() || res.ptr != parts[2].data() + parts[2].size() || n == 0)
    throw ValidationError("--xi-grid: point count must be a positive integer in '" + text + "'");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw ValidationError("--xi-grid: bounds must be finite in '" + text + "'");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) out.back() = b;
  return out;
}

/// Explicit --xi points first, then the product grid from --xi-grid.
std::vector<std::vector<double>> resolve_points(const RunConfig& c, std::size_t dim) {
  std::vector<std::vector<double>> points;
  std::vector<double> flat;
  for (const auto& s : c.xi) {
    const auto values = parse_list(s, "--xi");
    flat.insert(flat.end(), values.begin(), values.end());
  }
  if (flat.size() % dim != 0)
    throw ValidationError("--xi: " + std::to_string(flat.size()) + " values do not form points of dimension " +
                          std::to_string(dim));
  for (std::size_t i = 0; i < flat.size(); i += dim)
    points.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i),
                        flat.begin() + static_cast<std::ptrdiff_t>(i + dim));

  if (!c.xi_grid.empty()) {
    if (c.xi_grid.size() != dim)
      throw ValidationError("--xi-grid: give one a:b:n range per parameter (" + std::to_string(dim) +
                            " needed, " + std::to_string(c.xi_grid.size()) + " given)");
    std::vector<std::vector<double>> axes;
    for (const auto& s : c.xi_grid) axes.push_back(linspace(s));
    std::vector<std::size_t> index(dim, 0);
    while (true) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = axes[j][index[j]];
      points.push_back(std::move(p));
      std::size_t j = dim;
      while (j > 0 && ++index[j - 1] == axes[j - 1].size()) index[--j] = 0;
      if (j == 0) break;
    }
  }
  return points;
}

std::vector<std::vector<double>> require_points(const RunConfig& c, std::size_t dim) {
  auto points = resolve_points(c, dim);
  if (points.empty()) throw ValidationError(c.command + ": give parameter points with --xi or --xi-grid");
  return points;
}

std::vector<double> resolve_ks(const RunConfig& c, const std::string& fallback, bool allow_infinite) {
  const auto ks = parse_list(c.k.empty() ? fallback : c.k, "--k");
  if (ks.empty()) throw ValidationError("--k: no values given");
  for (double k : ks) {
    if (!(k >= 1.0)) throw ValidationError("--k: every k must be >= 1, got " + fmt(k));
    if (std::isinf(k) && !allow_infinite)
      throw ValidationError("--k: infinite k is not supported by " + c.command);
  }
  return ks;
}

double single_k(const RunConfig& c, const std::string& fallback, bool allow_infinite) {
  const auto ks = resolve_ks(c, fallback, allow_infinite);
  if (ks.size() != 1) throw ValidationError(c.command + ": expects a single --k value");
  return ks.front();
}

builtins::RegistryOptions registry(const RunConfig& c) {
  builtins::RegistryOptions o;
  o.grid_points = c.grid_points;
  o.s_cells = c.s_cells;
  o.t_cells = c.t_cells;
  return o;
}

constexpr std::string_view kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& text) { return text.rfind(kBuiltinPrefix, 0) == 0; }
std::string builtin_name(const std::string& text) { return text.substr(kBuiltinPrefix.size()); }

ParametrizedMeasureModel load_model(const RunConfig& c) {
  if (c.model.empty()) throw ValidationError(c.command + ": --model is required");
  auto model = is_builtin(c.model) ? builtins::by_name(builtin_name(c.model), registry(c))
                                   : io::model_from_json(io::read_json_file(c.model), registry(c));
  return model.with_domination_tolerance(c.dom_tol);
}

/// `source` is needed by the identity and collapse builtins.
Statistic load_statistic(const RunConfig& c, const SpacePtr& source) {
  if (!is_builtin(c.statistic)) return io::statistic_from_json(io::read_json_file(c.statistic));
  const auto name = builtin_name(c.statistic);
  if (name == "project-first") return builtins::first_coordinate_projection(c.s_cells, c.t_cells);
  if (!source) throw ValidationError("--statistic " + c.statistic + " needs a model or measure to act on");
  if (name == "identity") return Statistic::identity(source);
  if (name == "collapse") return Statistic::collapse(source, SampleSpace::make({"*"}));
  throw ValidationError("--statistic: unknown builtin '" + name +
                        "' (expected identity, collapse or project-first)");
}

/// Exactly one of --kernel and --statistic.
MarkovKernel load_kernel(const RunConfig& c, const SpacePtr& source) {
  if (!c.kernel.empty() && !c.statistic.empty())
    throw ValidationError(c.command + ": give either --kernel or --statistic, not both");
  if (!c.kernel.empty()) return io::kernel_from_json(io::read_json_file(c.kernel));
  if (!c.statistic.empty()) return kernel_of_statistic(load_statistic(c, source));
  throw ValidationError(c.command + ": --kernel or --statistic is required");
}

json points_json(const std::vector<std::vector<double>>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(p);
  return arr;
}

json text_or_null(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

json config_json(const RunConfig& c, const std::vector<std::vector<double>>& points,
                 const std::vector<double>& ks) {
  json ks_json = json::array();
  for (double k : ks) ks_json.push_back(number_or_string(k));
  return json{{"command", c.command},
              {"example", text_or_null(c.example)},
              {"model", text_or_null(c.model)},
              {"statistic", text_or_null(c.statistic)},
              {"kernel", text_or_null(c.kernel)},
              {"measure", text_or_null(c.measure)},
              {"xi", points_json(points)},
              {"k", ks_json},
              {"order", c.order},
              {"grid_points", c.grid_points},
              {"s_cells", c.s_cells},
              {"t_cells", c.t_cells},
              {"dom_tol", c.dom_tol},
              {"tol", c.tol ? json(*c.tol) : json(nullptr)},
              {"cross_check_k", c.cross_check_k ? json(*c.cross_check_k) : json(nullptr)},
              {"random", c.random},
              {"seed", c.seed},
              {"format", c.format},
              {"output", text_or_null(c.output)}};
}

struct Output {
  Output() = default;
  explicit Output(json c) : config(std::move(c)) {}

  json config;
  json body = json::object();
  std::string csv;
};

// ---------------------------------------------------------------------------
// Subcommands.

Output tensor(const RunConfig& c) {
  const auto model = load_model(c);
  const auto points = require_points(c, model.dim());
  if (c.order == 0) throw ValidationError("tensor: --order must be >= 1");
  std::vector<TensorValue> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    values[i] = canonical_tensor_field(model, points[i], c.order);
  });

  const std::string key = c.order == 2 ? "fisher" : c.order == 3 ? "amari_chentsov" : "tau";
  Output out{config_json(c, points, {})};
  json entries = json::array();
  out.csv = "xi,index,value\n";
  for (std::size_t p = 0; p < points.size(); ++p) {
    json e{{"xi", points[p]}, {key, io::to_json(values[p])}};
    if (c.order == 2) e["min_eigenvalue"] = min_eigenvalue(values[p]);
    entries.push_back(std::move(e));
    const auto& t = values[p];
    for (std::size_t flat = 0; flat < t.values.size(); ++flat) {
      std::vector<double> index(t.order);
      std::size_t rest = flat;
      for (std::size_t k = t.order; k-- > 0;) {
        index[k] = static_cast<double>(rest % t.dim);
        rest /= t.dim;
      }
      out.csv += join(points[p]) + ',' + join(index) + ',' + fmt(t.values[flat]) + '\n';
    }
  }
  out.body["order"] = c.order;
  out.body["points"] = std::move(entries);
  if (points.size() == 1) out.body[key] = io::to_json(values.front());
  return out;
}

Output pushforward_command(const RunConfig& c) {
  if (!c.measure.empty() && !c.model.empty())
    throw ValidationError("pushforward: give either --measure or --model, not both");
  if (!c.measure.empty()) {
    const auto nu = io::signed_measure_from_json(io::read_json_file(c.measure));
    const auto K = load_kernel(c, nu.space());
    const auto image = pushforward(K, nu);
    Output out{config_json(c, {}, {})};
    out.body["source"] = io::to_json(nu);
    out.body["image"] = io::to_json(image);
    for (std::size_t j = 0; j < image.size(); ++j)
      out.csv += (j ? "," : "") + csv_field(image.space()->label(j));
    out.csv += '\n' + join(image.mass(), ',') + '\n';
    return out;
  }
  const auto model = load_model(c);
  const auto K = load_kernel(c, model.space());
  require_same_space(model.space(), K.source(), "pushforward");
  const auto points = require_points(c, model.dim());
  Output out{config_json(c, points, {})};
  json entries = json::array();
  out.csv = "xi";
  for (std::size_t j = 0; j < K.cols(); ++j) out.csv += ',' + csv_field(K.target()->label(j));
  out.csv += '\n';
  for (const auto& xi : points) {
    const auto m = evaluate(model, xi);
    const auto image = pushforward(K, m);
    entries.push_back(json{{"xi", xi},
                           {"source", std::vector<double>(m.mass().begin(), m.mass().end())},
                           {"image", std::vector<double>(image.mass().begin(), image.mass().end())}});
    out.csv += join(xi) + ',' + join(image.mass(), ',') + '\n';
  }
  out.body["source_space"] = io::to_json(*model.space());
  out.body["target_space"] = io::to_json(*K.target());
  out.body["points"] = std::move(entries);
  return out;
}

/// Appends a loss table without repeating the header.
void append_loss_csv(std::string& csv, const LossReport& report) {
  auto table = loss_report_csv(report);
  if (!csv.empty()) table.erase(0, table.find('\n') + 1);
  csv += table;
}

// Random positive model: exp of a polynomial in (x1, t) with a bounded sine
// term, on atoms with coordinate i / n.
std::string random_density(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::string e = "exp(" + fmt(u(rng));
  for (std::size_t j = 1; j <= dim; ++j) {
    const std::string t = "t" + std::to_string(j);
    e += "+(" + fmt(u(rng)) + ")*" + t + "*x1";
    e += "+(" + fmt(u(rng)) + ")*" + t + "*" + t + "*x1*x1";
    e += "+(" + fmt(u(rng)) + ")*sin(" + t + "+x1)";
  }
  return e + ")";
}

Output random_sweep(const RunConfig& c) {
  const auto ks = resolve_ks(c, "1,1.5,2,3", false);
  struct Instance {
    std::size_t atoms = 0, targets = 0, dim = 0;
    std::string density;
    std::vector<double> xi, direction, losses;
    double gap = 0.0;
  };
  std::vector<Instance> instances(c.random);
  parallel_for(c.random, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint64_t>(c.seed), static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
    Instance& inst = instances[i];
    inst.atoms = pick(1, 8);
    inst.targets = pick(1, 6);
    inst.dim = pick(1, 3);
    inst.density = random_density(rng, inst.dim);
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coords;
    for (std::size_t a = 0; a < inst.atoms; ++a) {
      labels.push_back("a" + std::to_string(a));
      coords.push_back({static_cast<double>(a) / static_cast<double>(inst.atoms)});
    }
    const auto space = SampleSpace::make(labels, coords);
    const auto model = dsl_model("random", ParameterDomain::box(inst.dim, -2.0, 2.0), space,
                                 inst.density, std::nullopt, false)
                           .with_domination_tolerance(c.dom_tol);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> entries(inst.atoms * inst.targets);
    for (std::size_t r = 0; r < inst.atoms; ++r) {
      double total = 0.0;
      for (std::size_t s = 0; s < inst.targets; ++s) {
        double& v = entries[r * inst.targets + s];
        v = u(rng) < 0.3 ? 0.0 : u(rng);
        total += v;
      }
      if (total == 0.0) {
        entries[r * inst.targets + rng() % inst.targets] = 1.0;
        total = 1.0;
      }
      for (std::size_t s = 0; s < inst.targets; ++s) entries[r * inst.targets + s] /= total;
    }
    const MarkovKernel K(space, SampleSpace::indexed(inst.targets), std::move(entries));
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    std::normal_distribution<double> normal;
    for (std::size_t j = 0; j < inst.dim; ++j) inst.xi.push_back(box(rng));
    for (std::size_t j = 0; j < inst.dim; ++j) inst.direction.push_back(normal(rng));
    for (double k : ks) inst.losses.push_back(information_loss(model, K, inst.xi, inst.direction, k));
    inst.gap = check_monotonicity(model, K, inst.xi, 0).min_gap_eigenvalue;
  });

  Output out{config_json(c, {}, ks)};
  json arr = json::array();
  std::size_t violations = 0;
  double min_loss = kInf, min_gap = kInf;
  out.csv = "instance,atoms,targets,dim,k,loss\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    for (std::size_t q = 0; q < ks.size(); ++q) {
      min_loss = std::min(min_loss, inst.losses[q]);
      if (inst.losses[q] < -kNegativeLossTolerance) ++violations;
      out.csv += std::to_string(i) + ',' + std::to_string(inst.atoms) + ',' +
                 std::to_string(inst.targets) + ',' + std::to_string(inst.dim) + ',' + fmt(ks[q]) +
                 ',' + fmt(inst.losses[q]) + '\n';
    }
    min_gap = std::min(min_gap, inst.gap);
    if (inst.gap < -kNegativeLossTolerance) ++violations;
    arr.push_back(json{{"atoms", inst.atoms},
                       {"dim", inst.dim},
                       {"targets", inst.targets},
                       {"density", inst.density},
                       {"xi", inst.xi},
                       {"direction", inst.direction},
                       {"losses", inst.losses},
                       {"min_gap_eigenvalue", inst.gap}});
  }
  out.body["instances"] = std::move(arr);
  out.body["k"] = ks;
  out.body["min_loss"] = instances.empty() ? json(nullptr) : json(min_loss);
  out.body["min_gap_eigenvalue"] = instances.empty() ? json(nullptr) : json(min_gap);
  out.body["violations"] = violations;
  out.body["tolerance"] = kNegativeLossTolerance;
  return out;
}

Output infoloss(const RunConfig& c) {
  if (c.random > 0) {
    if (!c.model.empty() || !c.kernel.empty() || !c.statistic.empty())
      throw ValidationError("infoloss: --random generates its own models and kernels");
    return random_sweep(c);
  }
  const auto model = load_model(c);
  const auto K = load_kernel(c, model.space());
  const auto induced = induced_model(model, K);
  const auto points = require_points(c, model.dim());
  const auto ks = resolve_ks(c, "2", false);
  Output out{config_json(c, points, ks)};
  json reports = json::array();
  double min_loss = kInf;
  for (double k : ks) {
    const auto r = loss_report(model, induced, points, basis_directions(model.dim()), k);
    for (const auto& e : r.entries) min_loss = std::min(min_loss, e.loss);
    reports.push_back(io::to_json(r));
    append_loss_csv(out.csv, r);
  }
  out.body["reports"] = std::move(reports);
  out.body["min_loss"] = min_loss;
  out.body["nonnegative"] = min_loss >= -kNegativeLossTolerance;
  return out;
}

Output sufficient(const RunConfig& c) {
  const auto model = load_model(c);
  const auto K = load_kernel(c, model.space());
  const auto points = require_points(c, model.dim());
  const double k = single_k(c, "2", false);
  if (!(k > 1.0)) throw ValidationError("sufficient: k must be > 1");
  const double tol = c.tol.value_or(1e-9);
  const auto report = is_sufficient(model, K, points, k, tol, c.cross_check_k);
  Output out{config_json(c, points, {k})};
  out.body = io::to_json(report);
  append_loss_csv(out.csv, report.primary);
  return out;
}

Output factorize(const RunConfig& c) {
  if (!c.kernel.empty()) throw ValidationError("factorize: needs a --statistic, not a kernel");
  if (c.statistic.empty()) throw ValidationError("factorize: --statistic is required");
  const auto model = load_model(c);
  const auto kappa = load_statistic(c, model.space());
  const auto points = require_points(c, model.dim());
  const auto result = fisher_neyman_check(model, kappa, points);
  Output out{config_json(c, points, {})};
  out.body = io::to_json(result);
  out.csv = "run,first,last,positive,max_variation\n";
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const auto& run = result.runs[r];
    out.csv += std::to_string(r) + ',' + std::to_string(run.first) + ',' + std::to_string(run.last) +
               ',' + (run.positive ? "true" : "false") + ',' + fmt(run.max_variation) + '\n';
  }
  return out;
}

Output decompose(const RunConfig& c) {
  SpacePtr source;
  if (!c.model.empty()) source = load_model(c).space();
  const auto K = load_kernel(c, source);
  const auto d = decompose_kernel(K);
  const auto rebuilt = compose(kernel_of_statistic(d.to_target), d.congruent);
  double error = 0.0;
  for (std::size_t i = 0; i < K.entries().size(); ++i)
    error = std::max(error, std::abs(rebuilt.entries()[i] - K.entries()[i]));
  Output out{config_json(c, {}, {})};
  out.body["decomposition"] = io::to_json(d);
  out.body["max_reconstruction_error"] = error;
  out.body["congruent"] = is_congruent(d.congruent, d.to_source);
  out.csv = kernel_to_csv(d.congruent);
  return out;
}

Output check_integrability(const RunConfig& c) {
  const auto model = load_model(c);
  const auto points = require_points(c, model.dim());
  const double k = single_k(c, "2", true);
  const auto report = check_k_integrability(model, points, basis_directions(model.dim()), k,
                                            c.tol.value_or(0.1));
  Output out{config_json(c, points, {k})};
  out.body = io::to_json(report);
  out.csv = "xi,direction,norm\n";
  for (std::size_t d = 0; d < report.directions.size(); ++d)
    for (std::size_t g = 0; g < points.size(); ++g)
      out.csv += join(points[g]) + ',' + join(report.directions[d]) + ',' + fmt(report.norms[d][g]) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Worked examples.

Output bernoulli_example(RunConfig c) {
  if (c.xi.empty() && c.xi_grid.empty()) c.xi = {"0.1,0.25,0.5"};
  const auto model = builtins::bernoulli().with_domination_tolerance(c.dom_tol);
  const auto points = require_points(c, 1);
  Output out{config_json(c, points, {})};
  json rows = json::array();
  double worst = 0.0;
  out.csv = "xi,fisher,expected,abs_error,amari_chentsov,expected_amari_chentsov\n";
  for (const auto& xi : points) {
    const double x = xi[0];
    const double g = fisher_metric(model, xi)(0, 0);
    const double t = amari_chentsov(model, xi)(0, 0, 0);
    const double g0 = 1.0 / (x * (1.0 - x));
    const double t0 = 1.0 / (x * x) - 1.0 / ((1.0 - x) * (1.0 - x));
    worst = std::max(worst, std::abs(g - g0));
    rows.push_back(json{{"xi", x},
                        {"fisher", g},
                        {"expected", g0},
                        {"abs_error", std::abs(g - g0)},
                        {"amari_chentsov", t},
                        {"expected_amari_chentsov", t0}});
    out.csv += fmt(x) + ',' + fmt(g) + ',' + fmt(g0) + ',' + fmt(std::abs(g - g0)) + ',' + fmt(t) +
               ',' + fmt(t0) + '\n';
  }
  out.body["rows"] = std::move(rows);
  out.body["max_abs_error"] = worst;
  return out;
}

/// int_0^pi (sin^2 t)^a dt = sqrt(pi) Gamma(a + 1/2) / Gamma(a + 1).
double sin_power_integral(double a) {
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(a + 0.5) - std::lgamma(a + 1.0));
}

Output nonregular_example(RunConfig c) {
  if (c.xi.empty() && c.xi_grid.empty()) c.xi = {"1,0.5,0.3,0.2"};
  if (c.grid_points == 0) c.grid_points = 20000;
  const auto model = builtins::nonregular(c.grid_points);
  const auto points = require_points(c, 1);
  for (const auto& xi : points)
    if (xi[0] == 0.0) throw ValidationError("paper-example ex4.1: xi must be nonzero");
  std::vector<double> quotient(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    quotient[i] = builtins::difference_quotient_l1(model, 0.0, points[i][0]);
  });
  Output out{config_json(c, points, {})};
  json rows = json::array();
  bool decreasing = true;
  out.csv = "xi,l1_quotient,exact\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i][0];
    const double exact = sin_power_integral(1.0 / (x * x));
    if (i > 0 && !(quotient[i] < quotient[i - 1])) decreasing = false;
    rows.push_back(json{{"xi", x}, {"l1_quotient", quotient[i]}, {"exact", exact}});
    out.csv += fmt(x) + ',' + fmt(quotient[i]) + ',' + fmt(exact) + '\n';
  }
  out.body["rows"] = std::move(rows);
  out.body["monotone_decreasing"] = decreasing;
  return out;
}

Output sufficiency_example(RunConfig c) {
  if (c.xi.empty() && c.xi_grid.empty()) c.xi = {"-1,-0.5,-0.1,0,0.1,0.5,1"};
  const auto model =
      builtins::sufficiency_without_factorization(c.s_cells, c.t_cells).with_domination_tolerance(c.dom_tol);
  const auto kappa = builtins::first_coordinate_projection(c.s_cells, c.t_cells);
  const auto induced = induced_model(model, kappa);
  const auto points = require_points(c, 1);
  const auto ks = resolve_ks(c, "1.5,2,3", false);
  const double tol = c.tol.value_or(1e-9);
  Output out{config_json(c, points, ks)};
  json reports = json::array();
  double max_loss = -kInf;
  for (double k : ks) {
    const auto r = loss_report(model, induced, points, {Direction{1.0}}, k);
    max_loss = std::max(max_loss, r.max_loss);
    reports.push_back(io::to_json(r));
    append_loss_csv(out.csv, r);
  }
  out.body["reports"] = std::move(reports);
  out.body["max_loss"] = max_loss;
  out.body["tolerance"] = tol;
  out.body["verdict"] = max_loss <= tol ? "sufficient" : "not-sufficient";
  out.body["factorization"] = io::to_json(fisher_neyman_check(model, kappa, points));
  return out;
}

Output paper_example(const RunConfig& c) {
  if (c.example == "bernoulli") return bernoulli_example(c);
  if (c.example == "ex4.1") return nonregular_example(c);
  if (c.example == "ex-suff") return sufficiency_example(c);
  throw ValidationError("paper-example: unknown example '" + c.example +
                        "' (expected ex4.1, ex-suff or bernoulli)");
}

}  // namespace

std::string execute(const RunConfig& c) {
  if (c.format != "json" && c.format != "csv")
    throw ValidationError("--format must be json or csv, got '" + c.format + "'");
  if (!(c.dom_tol >= 0.0)) throw ValidationError("--dom-tol must be >= 0");

  Output out;
  if (c.command == "tensor") out = tensor(c);
  else if (c.command == "pushforward") out = pushforward_command(c);
  else if (c.command == "infoloss") out = infoloss(c);
  else if (c.command == "sufficient") out = sufficient(c);
  else if (c.command == "factorize") out = factorize(c);
  else if (c.command == "decompose-kernel") out = decompose(c);
  else if (c.command == "check-integrability") out = check_integrability(c);
  else if (c.command == "paper-example") out = paper_example(c);
  else throw ValidationError("unknown subcommand '" + c.command + "'");

  if (c.format == "csv") return out.csv;
  json report = std::move(out.body);
  report["tool"] = "igk";
  report["version"] = kVersion;
  report["command"] = c.command;
  report["config"] = std::move(out.config);
  return report.dump(2) + "\n";
}

}  // namespace igk::cli
