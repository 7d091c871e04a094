#include "igk/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "igk/error.hpp"

namespace igk::io {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

double bound_from_json(const json& j, double infinite) {
  if (j.is_null()) return infinite;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return kInf;
    if (s == "-inf" || s == "-infinity") return -kInf;
    throw ValidationError("bounds: unrecognized value \"" + s + "\"");
  }
  return j.get<double>();
}

json tensor_slice(const TensorValue& t, std::size_t level, std::size_t offset) {
  json arr = json::array();
  std::size_t stride = 1;
  for (std::size_t k = level + 1; k < t.order; ++k) stride *= t.dim;
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (level + 1 == t.order) arr.push_back(t.values[offset + i]);
    else arr.push_back(tensor_slice(t, level + 1, offset + i * stride));
  }
  return arr;
}

json vectors_to_json(const std::vector<std::vector<double>>& v) {
  json arr = json::array();
  for (const auto& row : v) arr.push_back(row);
  return arr;
}

}  // namespace

json to_json(const SampleSpace& space) {
  json j;
  j["atoms"] = space.atoms();
  if (space.coord_table()) j["coords"] = *space.coord_table();
  if (space.weights()) j["weights"] = *space.weights();
  return j;
}

SpacePtr space_from_json(const json& j) {
  return guarded("space", [&] {
    auto atoms = require(j, "atoms", "space").get<std::vector<std::string>>();
    std::optional<std::vector<std::vector<double>>> coords;
    std::optional<std::vector<double>> weights;
    if (j.contains("coords") && !j["coords"].is_null())
      coords = j["coords"].get<std::vector<std::vector<double>>>();
    if (j.contains("weights") && !j["weights"].is_null())
      weights = j["weights"].get<std::vector<double>>();
    return SampleSpace::make(std::move(atoms), std::move(coords), std::move(weights));
  });
}

json to_json(const SignedMeasure& nu) {
  return json{{"space", to_json(*nu.space())},
              {"coeff", std::vector<double>(nu.mass().begin(), nu.mass().end())}};
}

json to_json(const PowerMeasure& nu) {
  json j{{"space", to_json(*nu.space())},
         {"coeff", std::vector<double>(nu.coeff().begin(), nu.coeff().end())}};
  if (nu.exponent() != 1.0) j["r"] = nu.exponent();
  return j;
}

PowerMeasure power_measure_from_json(const json& j) {
  return guarded("measure", [&] {
    auto space = space_from_json(require(j, "space", "measure"));
    const double r = j.contains("r") ? j["r"].get<double>() : 1.0;
    return PowerMeasure(std::move(space), r, require(j, "coeff", "measure").get<std::vector<double>>());
  });
}

SignedMeasure signed_measure_from_json(const json& j) {
  const auto p = power_measure_from_json(j);
  if (p.exponent() != 1.0) throw ValidationError("measure: expected r = 1");
  return p.to_signed_measure();
}

Measure measure_from_json(const json& j) {
  const auto nu = signed_measure_from_json(j);
  return Measure(nu.space(), std::vector<double>(nu.mass().begin(), nu.mass().end()));
}

json to_json(const MarkovKernel& K) {
  json rows = json::array();
  for (std::size_t i = 0; i < K.rows(); ++i) {
    const auto r = K.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return json{{"source", to_json(*K.source())}, {"target", to_json(*K.target())}, {"rows", rows}};
}

MarkovKernel kernel_from_json(const json& j) {
  return guarded("kernel", [&] {
    auto source = space_from_json(require(j, "source", "kernel"));
    auto target = space_from_json(require(j, "target", "kernel"));
    const auto rows = require(j, "rows", "kernel").get<std::vector<std::vector<double>>>();
    if (rows.size() != source->size())
      throw ValidationError("kernel: expected one row per source atom");
    std::vector<double> entries;
    for (const auto& r : rows) {
      if (r.size() != target->size())
        throw ValidationError("kernel: expected one column per target atom");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return MarkovKernel(std::move(source), std::move(target), std::move(entries));
  });
}

json to_json(const Statistic& kappa) {
  return json{{"source", to_json(*kappa.source())},
              {"target", to_json(*kappa.target())},
              {"map", std::vector<std::size_t>(kappa.map().begin(), kappa.map().end())}};
}

Statistic statistic_from_json(const json& j) {
  return guarded("statistic", [&] {
    auto source = space_from_json(require(j, "source", "statistic"));
    auto target = space_from_json(require(j, "target", "statistic"));
    const auto& map_json = require(j, "map", "statistic");
    std::vector<std::size_t> map;
    for (const auto& v : map_json) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ValidationError("statistic: map entries must be nonnegative integers");
      map.push_back(v.get<std::size_t>());
    }
    return Statistic(std::move(source), std::move(target), std::move(map));
  });
}

ParametrizedMeasureModel model_from_json(const json& j, const builtins::RegistryOptions& options) {
  return guarded("model", [&]() -> ParametrizedMeasureModel {
    const auto& density = require(j, "density", "model");
    if (density.is_object()) {
      auto opts = options;
      if (density.contains("points")) opts.grid_points = density["points"].get<std::size_t>();
      if (density.contains("s_cells")) opts.s_cells = density["s_cells"].get<std::size_t>();
      if (density.contains("t_cells")) opts.t_cells = density["t_cells"].get<std::size_t>();
      return builtins::by_name(require(density, "builtin", "model density").get<std::string>(),
                               opts);
    }
    if (!density.is_string()) throw ValidationError("model: density must be a string or object");

    const auto& dom = require(j, "domain", "model");
    const auto dim = require(dom, "dim", "domain").get<std::size_t>();
    std::vector<Interval> bounds;
    if (dom.contains("bounds")) {
      for (const auto& b : dom["bounds"]) {
        if (!b.is_array() || b.size() != 2)
          throw ValidationError("domain: each bound must be a [lower, upper] pair");
        bounds.push_back({bound_from_json(b[0], -kInf), bound_from_json(b[1], kInf)});
      }
    } else {
      bounds.assign(dim, Interval{-kInf, kInf});
    }
    if (bounds.size() != dim) throw ValidationError("domain: bounds must list dim intervals");

    const auto& sp = require(j, "space", "model");
    SpacePtr space;
    if (sp.contains("grid")) {
      const auto& g = sp["grid"];
      const auto interval = require(g, "interval", "grid").get<std::vector<double>>();
      if (interval.size() != 2) throw ValidationError("grid: interval must be [a, b]");
      space = SampleSpace::grid(interval[0], interval[1], require(g, "points", "grid").get<std::size_t>());
    } else {
      space = space_from_json(sp);
    }

    std::optional<std::vector<std::string>> grads;
    if (j.contains("density_grad") && !j["density_grad"].is_null())
      grads = j["density_grad"].get<std::vector<std::string>>();
    const bool statistical = j.value("statistical", false);
    const std::string name = j.value("name", std::string("dsl"));
    return dsl_model(name, ParameterDomain(std::move(bounds)), std::move(space),
                     density.get<std::string>(), grads, statistical);
  });
}

json to_json(const TensorValue& t) {
  if (t.order == 0) return json(nullptr);
  return tensor_slice(t, 0, 0);
}

json to_json(const LossReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"xi", e.xi},
                           {"direction", e.direction},
                           {"source", e.source},
                           {"induced", e.induced},
                           {"loss", e.loss}});
  }
  return json{{"k", report.k},
              {"entries", entries},
              {"max_loss", report.max_loss},
              {"argmax", report.argmax}};
}

json to_json(const SufficiencyReport& report) {
  return json{{"sufficient", report.sufficient},
              {"verdict", report.sufficient ? "sufficient" : "not-sufficient"},
              {"tolerance", report.tolerance},
              {"primary", to_json(report.primary)},
              {"cross_check", to_json(report.cross_check)},
              {"k_disagreement", report.k_disagreement}};
}

json to_json(const MonotonicityReport& report) {
  return json{{"fisher", to_json(report.fisher)},
              {"induced_fisher", to_json(report.induced_fisher)},
              {"min_gap_eigenvalue", report.min_gap_eigenvalue},
              {"directions", vectors_to_json(report.directions)},
              {"gaps", report.gaps},
              {"violations", report.violations},
              {"tolerance", report.tolerance},
              {"holds", report.holds}};
}

json to_json(const IntegrabilityReport& report) {
  return json{{"k", std::isinf(report.k) ? json("inf") : json(report.k)},
              {"tolerance", report.tolerance},
              {"grid", vectors_to_json(report.grid)},
              {"directions", vectors_to_json(report.directions)},
              {"norms", vectors_to_json(report.norms)},
              {"max_jump", report.max_jump},
              {"max_relative_jump", report.max_relative_jump},
              {"jump_direction", report.jump_direction},
              {"jump_index", report.jump_index},
              {"continuous", report.continuous}};
}

json to_json(const FactorizationResult& result) {
  json runs = json::array();
  for (const auto& r : result.runs) {
    runs.push_back(json{{"first", r.first},
                        {"last", r.last},
                        {"positive", r.positive},
                        {"mu0", r.mu0},
                        {"max_variation", r.max_variation}});
  }
  json j{{"status", to_string(result.status)},
         {"positive", result.positive},
         {"residual", result.residual},
         {"runs", runs},
         {"note", result.note}};
  j["mu0"] = result.mu0.empty() ? json(nullptr) : json(result.mu0);
  if (result.witness) {
    const auto& w = *result.witness;
    j["witness"] = json{{"xi_a", w.xi_a},         {"xi_b", w.xi_b},
                        {"atom", w.atom},         {"atom_label", w.atom_label},
                        {"value_a", w.value_a},   {"value_b", w.value_b},
                        {"variation", w.variation}, {"across_runs", w.across_runs}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const KernelDecomposition& d) {
  return json{{"product", to_json(*d.product)},
              {"congruent", to_json(d.congruent)},
              {"to_source", to_json(d.to_source)},
              {"to_target", to_json(d.to_target)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace igk::io
