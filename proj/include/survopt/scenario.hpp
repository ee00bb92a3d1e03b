#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "survopt/attr.hpp"
#include "survopt/eoq.hpp"
#include "survopt/horizon.hpp"
#include "survopt/srs.hpp"
#include "survopt/stats.hpp"

namespace survopt::scenario {

// Shape or invariant violation in a scenario document; `path` points at the
// offending field (e.g. "fuzzy.D[2]").
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& msg)
      : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

// A named batch of summary populations (reports cover every entry).
struct SrsSet {
  std::vector<std::string> names;
  std::vector<srs::Population> pops;
};

struct AttrSet {
  std::vector<std::string> names;
  std::vector<attr::Population> pops;
};

struct EoqScenario {
  eoq::EoqParams crisp;
  eoq::FuzzyEoqParams fuzzy;
};

struct Scenario {
  std::string kind;  // stratified | srs | attribute | fuzzy-eoq | horizon
  std::string label;
  std::variant<std::monostate, stats::StratifiedFrame, SrsSet, AttrSet,
               EoqScenario, horizon::HorizonParams>
      payload;
};

// Throws SchemaError on any shape/invariant problem; file-level problems
// (unreadable, not JSON) throw std::runtime_error.
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const nlohmann::json& j);

}  // namespace survopt::scenario
