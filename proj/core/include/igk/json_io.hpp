#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "igk/builtins.hpp"
#include "igk/infoloss.hpp"
#include "igk/markov.hpp"
#include "igk/measures.hpp"
#include "igk/models.hpp"
#include "igk/power_measure.hpp"

// JSON encodings of the library's values. Malformed input raises
// ValidationError; file access failures raise IoError.
namespace igk::io {

using nlohmann::json;

/// {"atoms": [...], "coords": [[...]], "weights": [...]} (optional keys omitted).
json to_json(const SampleSpace& space);
SpacePtr space_from_json(const json& j);

/// {"space": ..., "coeff": [...]}; "r" is written only when it differs from 1.
json to_json(const SignedMeasure& nu);
json to_json(const PowerMeasure& nu);
PowerMeasure power_measure_from_json(const json& j);
/// Requires an omitted "r" or r == 1.
SignedMeasure signed_measure_from_json(const json& j);
Measure measure_from_json(const json& j);

/// {"source": space, "target": space, "rows": [[...], ...]}.
json to_json(const MarkovKernel& K);
MarkovKernel kernel_from_json(const json& j);
/// {"source": space, "target": space, "map": [indices]}.
json to_json(const Statistic& kappa);
Statistic statistic_from_json(const json& j);

/// {"domain": {"dim": d, "bounds": [[lo, hi], ...]},
///  "space": space | {"grid": {"interval": [a, b], "points": N}},
///  "density": expression | {"builtin": name},
///  "density_grad": [expression, ...], "statistical": bool}
/// Infinite bounds are null or the strings "inf" / "-inf".
ParametrizedMeasureModel model_from_json(const json& j,
                                         const builtins::RegistryOptions& options = {});

/// Nested arrays of depth `order`.
json to_json(const TensorValue& t);
json to_json(const LossReport& report);
json to_json(const SufficiencyReport& report);
json to_json(const MonotonicityReport& report);
json to_json(const IntegrabilityReport& report);
json to_json(const FactorizationResult& result);
json to_json(const KernelDecomposition& d);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace igk::io
