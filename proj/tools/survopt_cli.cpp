#include <cstdint>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "survopt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"survopt: survey-estimator and inventory-policy workbench"};
  app.require_subcommand(1);

  std::string table_id, repro_out;
  auto* repro = app.add_subcommand(
      "repro", "recompute a published table and diff it against the bundled "
               "reference");
  repro->add_option("table", table_id, "table id, e.g. ch2-4.1")->required();
  repro->add_option("--out", repro_out,
                    "computed CSV path (default <table>.csv)");

  std::string suite, validate_out;
  std::uint64_t validate_seed = 0;
  auto* validate =
      app.add_subcommand("validate", "run a property suite and write a JSON "
                                     "verdict");
  validate
      ->add_option("suite", suite,
                   "sampling-mc | fuzzy | eoq | horizon | all")
      ->required();
  auto* vseed = validate->add_option("--seed", validate_seed,
                                     "seed (falls back to SURVOPT_SEED, then 1)");
  validate->add_option("--out", validate_out,
                       "verdict path (default validate-<suite>.json)");

  std::string scenario_path, model, solve_out;
  std::uint64_t solve_seed = 0;
  bool ga = false, strict_print = false, sign_consistent = false;
  auto* solve =
      app.add_subcommand("solve", "solve a scenario file and print the "
                                  "solution table");
  solve->add_option("scenario", scenario_path, "scenario JSON path")
      ->required();
  solve->add_option("--model", model,
                    "fuzzy-eoq only: keep a single row (crisp, fuzzy, "
                    "crisp_no_release, fuzzy_no_release)");
  solve->add_flag("--ga", ga, "horizon only: genetic search");
  auto* sseed = solve->add_option("--seed", solve_seed,
                                  "seed (falls back to SURVOPT_SEED, then 1)");
  auto* sp = solve->add_flag("--strict-print", strict_print,
                             "evaluate published expressions exactly as "
                             "printed (default)");
  auto* sc = solve->add_flag("--sign-consistent", sign_consistent,
                             "apply the minimal internal-consistency repair "
                             "instead");
  sp->excludes(sc);
  sc->excludes(sp);
  solve->add_option("--out", solve_out, "write the solution table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems map to the stable exit code
  }

  if (*repro) return survopt::cli::cmd_repro(table_id, repro_out);

  if (*validate) {
    std::optional<std::uint64_t> seed;
    if (vseed->count() > 0) seed = validate_seed;
    return survopt::cli::cmd_validate(suite, seed, validate_out);
  }

  survopt::cli::SolveOptions opt;
  opt.model = model;
  opt.ga = ga;
  if (sseed->count() > 0) opt.seed = solve_seed;
  opt.convention = sign_consistent ? survopt::Convention::sign_consistent
                                   : survopt::Convention::strict;
  if (!solve_out.empty()) opt.out = solve_out;
  return survopt::cli::cmd_solve(scenario_path, opt);
}
