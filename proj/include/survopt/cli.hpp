#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "survopt/convention.hpp"

namespace survopt::cli {

// Directory holding the bundled fixtures (scenario JSON plus the reference
// tables under ref/). The SURVOPT_DATA environment variable overrides the
// location baked in at build time.
std::filesystem::path data_dir();

// Seed precedence: explicit flag value, then the SURVOPT_SEED environment
// variable, then 1. Throws std::invalid_argument when the variable is set
// but is not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

struct SolveOptions {
  std::string model;                  // fuzzy-eoq row filter; empty keeps all
  bool ga = false;                    // horizon only: genetic search
  std::optional<std::uint64_t> seed;  // forwarded to seeded solvers
  Convention convention = Convention::strict;
  std::optional<std::filesystem::path> out;  // CSV destination
};

// Recompute one published table from the bundled inputs, write the computed
// CSV (default <table_id>.csv), diff it against the bundled reference and
// write the per-cell report next to it. Returns 0 when every PASS cell is
// within its pinned tolerance, 1 on a failed cell or computation error,
// 2 for an unknown table id.
int cmd_repro(const std::string& table_id,
              const std::filesystem::path& out_path);

// Run a property suite (sampling-mc | fuzzy | eoq | horizon | all) and
// write a JSON verdict (default validate-<suite>.json) plus a line-per-check
// summary on stdout. Returns 1 when any check fails, 2 for an unknown suite.
int cmd_validate(const std::string& suite, std::optional<std::uint64_t> seed,
                 const std::filesystem::path& out_path);

// Load a scenario document, dispatch to the matching solver and print the
// solution table; writes CSV when opt.out is set (horizon scenarios also get
// a cost-component CSV next to it). Returns 2 on a schema violation (the
// message names the offending field), 1 on a computation failure.
int cmd_solve(const std::filesystem::path& scenario_path,
              const SolveOptions& opt);

}  // namespace survopt::cli
