#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "igk/error.hpp"
#include "igk/json_io.hpp"

namespace igk::io {
namespace {

TEST(JsonSpaceTest, RoundTrip) {
  auto s = SampleSpace::make({"a", "b"}, std::vector<std::vector<double>>{{0.1, 2}, {0.3, 4}},
                             std::vector<double>{0.5, 0.25});
  auto j = to_json(*s);
  EXPECT_EQ(j["atoms"], json({"a", "b"}));
  auto back = space_from_json(j);
  EXPECT_TRUE(same_space(s, back));
  EXPECT_EQ(back->base_weight(1), 0.25);
  EXPECT_EQ(back->coords(1)[1], 4.0);

  auto plain = to_json(*SampleSpace::indexed(2));
  EXPECT_FALSE(plain.contains("coords"));
  EXPECT_FALSE(plain.contains("weights"));
}

TEST(JsonSpaceTest, Malformed) {
  EXPECT_THROW(space_from_json(json{{"atom", {"a"}}}), ValidationError);
  EXPECT_THROW(space_from_json(json{{"atoms", {1, 2}}}), ValidationError);
  EXPECT_THROW(space_from_json(json{{"atoms", {"a", "a"}}}), ValidationError);
  EXPECT_THROW(space_from_json(json::array()), ValidationError);
}

TEST(JsonMeasureTest, RoundTripIsExact) {
  auto s = SampleSpace::indexed(3);
  SignedMeasure nu(s, {0.1, -1.0 / 3.0, 2e-300});
  auto j = to_json(nu);
  EXPECT_FALSE(j.contains("r"));
  auto back = signed_measure_from_json(json::parse(j.dump()));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back[i], nu[i]);

  PowerMeasure p(s, 0.5, {1.0 / 7.0, 0, -2});
  auto pj = json::parse(to_json(p).dump());
  EXPECT_EQ(pj["r"], 0.5);
  auto pback = power_measure_from_json(pj);
  EXPECT_EQ(pback.exponent(), 0.5);
  EXPECT_EQ(pback[0], 1.0 / 7.0);

  EXPECT_THROW(signed_measure_from_json(pj), ValidationError);
  EXPECT_THROW(measure_from_json(j), ValidationError);
  EXPECT_THROW(power_measure_from_json(json{{"space", to_json(*s)}, {"coeff", {1, 2}}}), ValidationError);
  EXPECT_THROW(power_measure_from_json(json{{"space", to_json(*s)}, {"coeff", {1, 2, 3}}, {"r", 2}}),
               ExponentError);
}

TEST(JsonKernelTest, RoundTrip) {
  auto src = SampleSpace::indexed(2), tgt = SampleSpace::make({"x", "y", "z"});
  MarkovKernel K(src, tgt, {0.2, 0.3, 0.5, 1, 0, 0});
  auto back = kernel_from_json(json::parse(to_json(K).dump()));
  EXPECT_EQ(std::vector<double>(back.entries().begin(), back.entries().end()),
            std::vector<double>(K.entries().begin(), K.entries().end()));

  Statistic kappa(src, tgt, {2, 0});
  auto sback = statistic_from_json(to_json(kappa));
  EXPECT_EQ(sback(0), 2u);

  auto bad = to_json(K);
  bad["rows"][0][0] = 0.9;
  EXPECT_THROW(kernel_from_json(bad), ValidationError);
  bad = to_json(K);
  bad["rows"].erase(1);
  EXPECT_THROW(kernel_from_json(bad), ValidationError);
  auto bad_map = to_json(kappa);
  bad_map["map"] = {0, -1};
  EXPECT_THROW(statistic_from_json(bad_map), ValidationError);
  bad_map["map"] = {0, 3};
  EXPECT_THROW(statistic_from_json(bad_map), ValidationError);
}

TEST(JsonModelTest, DslModel) {
  auto j = json::parse(R"json({
    "domain": {"dim": 1, "bounds": [[0, 1]]},
    "space": {"atoms": ["1", "0"], "coords": [[1], [0]]},
    "density": "x1*t1 + (1-x1)*(1-t1)",
    "statistical": true
  })json");
  auto model = model_from_json(j);
  const std::vector<double> xi{0.25};
  EXPECT_EQ(evaluate(model, xi)[0], 0.25);
  EXPECT_TRUE(model.statistical());
  EXPECT_NEAR(fisher_metric(model, xi)(0, 0), 1 / (0.25 * 0.75), 1e-12);
}

TEST(JsonModelTest, GridSpaceInfiniteBoundsAndGradients) {
  auto j = json::parse(R"json({
    "domain": {"dim": 1, "bounds": [[null, "inf"]]},
    "space": {"grid": {"interval": [0, 1], "points": 4}},
    "density": "exp(t1*x1)",
    "density_grad": ["x1*exp(t1*x1)"]
  })json");
  auto model = model_from_json(j);
  EXPECT_EQ(model.space()->size(), 4u);
  EXPECT_EQ(model.space()->base_weight(0), 0.25);
  EXPECT_TRUE(std::isinf(model.domain().bounds()[0].lower));
  const std::vector<double> xi{-50.0};
  EXPECT_NO_THROW(evaluate(model, xi));
}

TEST(JsonModelTest, Builtins) {
  auto b = model_from_json(json{{"density", {{"builtin", "bernoulli"}}}});
  EXPECT_EQ(b.name(), "bernoulli");
  auto n = model_from_json(json{{"density", {{"builtin", "ex4.1"}, {"points", 50}}}});
  EXPECT_EQ(n.space()->size(), 50u);
  builtins::RegistryOptions opts;
  opts.s_cells = 4;
  opts.t_cells = 3;
  auto s = model_from_json(json{{"density", {{"builtin", "ex-suff"}}}}, opts);
  EXPECT_EQ(s.space()->size(), 12u);
  EXPECT_THROW(model_from_json(json{{"density", {{"builtin", "nope"}}}}), ValidationError);
}

TEST(JsonModelTest, Malformed) {
  EXPECT_THROW(model_from_json(json::parse(R"json({"density": "t1"})json")), ValidationError);
  EXPECT_THROW(model_from_json(json::parse(R"json({"domain": {"dim": 2, "bounds": [[0, 1]]},
      "space": {"atoms": ["a"]}, "density": "t1"})json")),
               ValidationError);
  EXPECT_THROW(model_from_json(json::parse(R"json({"domain": {"dim": 1},
      "space": {"atoms": ["a"]}, "density": "t1 +"})json")),
               SyntaxError);
  EXPECT_THROW(model_from_json(json::parse(R"json({"domain": {"dim": 1},
      "space": {"atoms": ["a"]}, "density": 3})json")),
               ValidationError);
}

TEST(JsonReportTest, TensorAndFactorization) {
  TensorValue t{2, 2, {1, 2, 3, 4}};
  EXPECT_EQ(to_json(t), json::parse("[[1,2],[3,4]]"));
  TensorValue c{3, 1, {0.5}};
  EXPECT_EQ(to_json(c), json::parse("[[[0.5]]]"));

  FactorizationResult r;
  r.status = FactorizationStatus::NotFactorizable;
  r.witness = FactorizationWitness{{-1}, {1}, 3, "a", 0.5, 1.0, 1.0, true};
  auto j = to_json(r);
  EXPECT_EQ(j["status"], "not-factorizable");
  EXPECT_EQ(j["witness"]["across_runs"], true);
  EXPECT_TRUE(j["mu0"].is_null());
}

TEST(JsonFileTest, Errors) {
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "igk_json_io_test.json";
  write_text_file(path, "{ not json");
  EXPECT_THROW(read_json_file(path), ValidationError);
  write_text_file(path, R"json({"a": 1})json");
  EXPECT_EQ(read_json_file(path)["a"], 1);
  std::filesystem::remove(path);
  EXPECT_THROW(write_text_file("/nonexistent/dir/out.json", "x"), IoError);
}

}  // namespace
}  // namespace igk::io
