#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "igk/cli.hpp"
#include "igk/json_io.hpp"

namespace igk::cli {
namespace {

using io::json;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "igk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  auto r = call(std::move(args));
  EXPECT_EQ(r.status, kExitOk) << r.err;
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("igk_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

TEST(CliTensor, BernoulliFisher) {
  auto j = call_json({"tensor", "--model", "builtin:bernoulli", "--order", "2", "--xi", "0.5"});
  ASSERT_EQ(j["fisher"].size(), 1u);
  EXPECT_NEAR(j["fisher"][0][0].get<double>(), 4.0, 1e-12);
  EXPECT_EQ(j["tool"], "igk");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_EQ(j["config"]["model"], "builtin:bernoulli");
  EXPECT_EQ(j["config"]["xi"], json::parse("[[0.5]]"));
}

TEST(CliTensor, AmariChentsovAndSeveralPoints) {
  auto j = call_json({"tensor", "--model", "builtin:bernoulli", "--order", "3", "--xi", "0.25,0.5"});
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_FALSE(j.contains("amari_chentsov"));
  EXPECT_NEAR(j["points"][0]["amari_chentsov"][0][0][0].get<double>(), 16.0 - 16.0 / 9.0, 1e-10);
  EXPECT_NEAR(j["points"][1]["amari_chentsov"][0][0][0].get<double>(), 0.0, 1e-12);
}

TEST(CliPaperExample, SufficiencyExample) {
  auto j = call_json({"paper-example", "ex-suff", "--k", "2", "--xi-grid", "-1:1:5"});
  EXPECT_EQ(j["verdict"], "sufficient");
  ASSERT_EQ(j["reports"].size(), 1u);
  ASSERT_EQ(j["reports"][0]["entries"].size(), 5u);
  for (const auto& e : j["reports"][0]["entries"]) EXPECT_LE(e["loss"].get<double>(), 1e-10);
  EXPECT_EQ(j["factorization"]["status"], "not-factorizable");
}

TEST(CliPaperExample, NonregularQuotientDecreases) {
  auto j = call_json({"paper-example", "ex4.1", "--xi", "1,0.5,0.3,0.2", "--grid-points", "20000"});
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_NEAR(j["rows"][0]["l1_quotient"].get<double>(), 1.5708, 1e-4);
  EXPECT_TRUE(j["monotone_decreasing"].get<bool>());
  for (const auto& row : j["rows"])
    EXPECT_NEAR(row["l1_quotient"].get<double>(), row["exact"].get<double>(), 1e-6);
}

TEST(CliPaperExample, BernoulliCsv) {
  auto r = call({"paper-example", "bernoulli", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "xi,fisher,expected,abs_error,amari_chentsov,expected_amari_chentsov");
  EXPECT_NE(r.out.find("\n0.5,4,4,0,"), std::string::npos) << r.out;
}

TEST(CliExitCodes, MapErrorCategories) {
  auto unknown = call({"tensor", "--model", "builtin:nope", "--xi", "0.5"});
  EXPECT_EQ(unknown.status, kExitValidation);
  EXPECT_NE(unknown.err.find("ValidationError"), std::string::npos);

  auto missing = call({"tensor", "--model", "/nonexistent/model.json", "--xi", "0.5"});
  EXPECT_EQ(missing.status, kExitIo);
  EXPECT_NE(missing.err.find("IoError"), std::string::npos);

  auto outside = call({"tensor", "--model", "builtin:bernoulli", "--xi", "1.5"});
  EXPECT_EQ(outside.status, kExitContract);

  EXPECT_EQ(call({"tensor", "--model", "builtin:bernoulli"}).status, kExitValidation);
  EXPECT_EQ(call({"tensor", "--model", "builtin:bernoulli", "--xi", "abc"}).status, kExitValidation);
  EXPECT_EQ(call({"paper-example", "ex9"}).status, kExitValidation);
  EXPECT_EQ(call({"sufficient", "--model", "builtin:bernoulli", "--xi", "0.5", "--k", "1"}).status,
            kExitValidation);
  EXPECT_EQ(call({}).status, kExitValidation);
}

TEST(CliExitCodes, DominationFailureIsContractError) {
  // At t1 = 0 atom "b" has zero mass and nonzero derivative.
  const auto path = temp_file("dom_model.json", R"json({
    "domain": {"dim": 1},
    "space": {"atoms": ["a", "b"], "coords": [[0], [1]]},
    "density": "(1 - x1) + x1*t1"
  })json");
  auto r = call({"tensor", "--model", path.string(), "--xi", "0", "--dom-tol", "0"});
  EXPECT_EQ(r.status, kExitContract) << r.out << r.err;
  EXPECT_NE(r.err.find("DominationError"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(CliInfoloss, RandomSweepIsDeterministicAndNonnegative) {
  auto a = call({"infoloss", "--random", "200", "--seed", "5"});
  auto b = call({"infoloss", "--random", "200", "--seed", "5"});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = json::parse(a.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["instances"].size(), 200u);
  EXPECT_NE(a.out, call({"infoloss", "--random", "200", "--seed", "6"}).out);
}

TEST(CliInfoloss, CollapseLosesEverything) {
  auto j = call_json({"infoloss", "--model", "builtin:bernoulli", "--statistic", "builtin:collapse",
                      "--xi", "0.5", "--k", "2"});
  const auto& e = j["reports"][0]["entries"][0];
  EXPECT_NEAR(e["source"].get<double>(), 4.0, 1e-12);
  EXPECT_EQ(e["induced"].get<double>(), 0.0);
  EXPECT_TRUE(j["nonnegative"].get<bool>());
}

TEST(CliSufficient, IdentityIsSufficient) {
  auto j = call_json({"sufficient", "--model", "builtin:categorical(3)", "--statistic",
                      "builtin:identity", "--xi", "0.2,0.3", "--xi", "0.1,0.1"});
  EXPECT_EQ(j["verdict"], "sufficient");
  EXPECT_EQ(j["config"]["xi"].size(), 2u);
}

TEST(CliFactorize, ExSuffHasCrossRunWitness) {
  auto j = call_json({"factorize", "--model", "builtin:ex-suff", "--statistic", "builtin:project-first",
                      "--xi-grid", "-1:1:5"});
  EXPECT_EQ(j["status"], "not-factorizable");
  EXPECT_TRUE(j["witness"]["across_runs"].get<bool>());
}

TEST(CliPushforward, MeasureFileThroughKernel) {
  const auto measure = temp_file("measure.json", R"({"space": {"atoms": ["u", "v"]}, "coeff": [0.2, 0.8]})");
  const auto kernel = temp_file("kernel.json", R"({"source": {"atoms": ["u", "v"]},
    "target": {"atoms": ["a", "b"]}, "rows": [[0.5, 0.5], [0, 1]]})");
  auto j = call_json({"pushforward", "--measure", measure.string(), "--kernel", kernel.string()});
  EXPECT_NEAR(j["image"]["coeff"][0].get<double>(), 0.1, 1e-15);
  EXPECT_NEAR(j["image"]["coeff"][1].get<double>(), 0.9, 1e-15);
  std::filesystem::remove(measure);
  std::filesystem::remove(kernel);
}

TEST(CliDecompose, ReconstructsKernel) {
  const auto kernel = temp_file("kernel2.json", R"({"source": {"atoms": ["u", "v"]},
    "target": {"atoms": ["a", "b", "c"]}, "rows": [[0.5, 0.25, 0.25], [0, 1, 0]]})");
  auto j = call_json({"decompose-kernel", "--kernel", kernel.string()});
  EXPECT_LE(j["max_reconstruction_error"].get<double>(), 1e-14);
  EXPECT_TRUE(j["congruent"].get<bool>());
  std::filesystem::remove(kernel);
}

TEST(CliIntegrability, SmoothModelIsContinuousAndAcceptsInfiniteK) {
  auto smooth = call_json({"check-integrability", "--model", "builtin:bernoulli", "--xi-grid", "0.3:0.7:401"});
  EXPECT_TRUE(smooth["continuous"].get<bool>());
  auto inf = call_json({"check-integrability", "--model", "builtin:bernoulli", "--xi", "0.5", "--k", "inf"});
  EXPECT_EQ(inf["k"], "inf");
}

TEST(CliOutput, WritesFileAndCsv) {
  const auto path = std::filesystem::temp_directory_path() / "igk_cli_test_out.csv";
  auto r = call({"tensor", "--model", "builtin:bernoulli", "--xi", "0.5", "--format", "csv", "-o", path.string()});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "xi,index,value\n0.5,0;0,4\n");
  std::filesystem::remove(path);

  EXPECT_EQ(call({"tensor", "--model", "builtin:bernoulli", "--xi", "0.5", "-o", "/nonexistent/dir/x"}).status,
            kExitIo);
}

TEST(CliDeterminism, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> args{"paper-example", "ex-suff", "--xi-grid", "-1:1:9"};
  setenv("IGK_THREADS", "1", 1);
  const auto one = call(args).out;
  setenv("IGK_THREADS", "4", 1);
  const auto four = call(args).out;
  unsetenv("IGK_THREADS");
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace igk::cli
