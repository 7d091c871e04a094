#include <exception>
#include <ostream>

#include "CLI11.hpp"
#include "igk/cli.hpp"
#include "igk/error.hpp"
#include "igk/json_io.hpp"
#include "igk/version.hpp"

namespace igk::cli {
namespace {

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Validation: return kExitValidation;
    case ErrorCategory::Contract: return kExitContract;
    case ErrorCategory::Io: return kExitIo;
  }
  return kExitInternal;
}

void add_output(CLI::App& sub, RunConfig& c) {
  sub.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("-o,--output", c.output, "Write the report here instead of stdout");
}

void add_model(CLI::App& sub, RunConfig& c, bool required) {
  auto* opt = sub.add_option("--model", c.model, "builtin:NAME or a model JSON file");
  if (required) opt->required();
  sub.add_option("--dom-tol", c.dom_tol, "Mass below which an atom counts as null");
  sub.add_option("--grid-points", c.grid_points, "Grid size for gridded builtins");
  sub.add_option("--s-cells", c.s_cells, "First-axis cells of ex-suff");
  sub.add_option("--t-cells", c.t_cells, "Second-axis cells of ex-suff");
}

void add_points(CLI::App& sub, RunConfig& c) {
  sub.add_option("--xi", c.xi, "Parameter values, comma separated, grouped by model dimension")
      ->allow_extra_args(false);
  sub.add_option("--xi-grid", c.xi_grid, "a:b:n, once per parameter coordinate")
      ->allow_extra_args(false);
}

void add_map(CLI::App& sub, RunConfig& c) {
  sub.add_option("--statistic", c.statistic, "builtin:identity|collapse|project-first or a JSON file");
  sub.add_option("--kernel", c.kernel, "Kernel JSON file");
}

void add_k(CLI::App& sub, RunConfig& c, const char* help) { sub.add_option("--k", c.k, help); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Information geometry on finite sample spaces", "igk"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* tensor = app.add_subcommand("tensor", "Canonical tensor (Fisher, Amari-Chentsov, tau^n) at given points");
  add_model(*tensor, c, true);
  add_points(*tensor, c);
  tensor->add_option("--order", c.order, "Tensor order n");
  add_output(*tensor, c);

  auto* push = app.add_subcommand("pushforward", "Image of a measure or model under a kernel or statistic");
  add_model(*push, c, false);
  push->add_option("--measure", c.measure, "Measure JSON file");
  add_points(*push, c);
  add_map(*push, c);
  add_output(*push, c);

  auto* loss = app.add_subcommand("infoloss", "Information loss table or a seeded random sweep");
  add_model(*loss, c, false);
  add_points(*loss, c);
  add_map(*loss, c);
  add_k(*loss, c, "Orders, comma separated (default 2; 1,1.5,2,3 with --random)");
  loss->add_option("--random", c.random, "Number of random instances");
  loss->add_option("--seed", c.seed, "Seed for --random");
  add_output(*loss, c);

  auto* suff = app.add_subcommand("sufficient", "Sufficiency verdict on a grid");
  add_model(*suff, c, true);
  add_points(*suff, c);
  add_map(*suff, c);
  add_k(*suff, c, "Order k > 1 (default 2)");
  suff->add_option("--tol", c.tol, "Loss tolerance (default 1e-9)");
  suff->add_option("--cross-check-k", c.cross_check_k, "Second order to compare against");
  add_output(*suff, c);

  auto* fact = app.add_subcommand("factorize", "Fisher-Neyman factorization search on a grid");
  add_model(*fact, c, true);
  add_points(*fact, c);
  add_map(*fact, c);
  add_output(*fact, c);

  auto* dec = app.add_subcommand("decompose-kernel", "Split a kernel into a statistic and a congruent kernel");
  add_model(*dec, c, false);
  add_map(*dec, c);
  add_output(*dec, c);

  auto* integ = app.add_subcommand("check-integrability", "Continuity of the k-norm along an ordered grid");
  add_model(*integ, c, true);
  add_points(*integ, c);
  add_k(*integ, c, "Order k >= 1 or inf (default 2)");
  integ->add_option("--tol", c.tol, "Relative jump tolerance (default 0.1)");
  add_output(*integ, c);

  auto* ex = app.add_subcommand("paper-example", "Worked examples: ex4.1, ex-suff, bernoulli");
  ex->add_option("example", c.example, "Example name")
      ->required()
      ->check(CLI::IsMember({"ex4.1", "ex-suff", "bernoulli"}));
  add_points(*ex, c);
  add_k(*ex, c, "Orders for ex-suff (default 1.5,2,3)");
  ex->add_option("--tol", c.tol, "Loss tolerance for ex-suff (default 1e-9)");
  ex->add_option("--dom-tol", c.dom_tol, "Mass below which an atom counts as null");
  ex->add_option("--grid-points", c.grid_points, "Grid size for ex4.1 (default 20000)");
  ex->add_option("--s-cells", c.s_cells, "First-axis cells of ex-suff");
  ex->add_option("--t-cells", c.t_cells, "Second-axis cells of ex-suff");
  add_output(*ex, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: ValidationError: " << e.what() << '\n';
    return kExitValidation;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    const auto report = execute(c);
    if (c.output.empty()) out << report;
    else io::write_text_file(c.output, report);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace igk::cli
