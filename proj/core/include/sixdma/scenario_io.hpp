// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sixdma/schemes.hpp"

namespace sixdma {

/// Complete contents of a scenario file: the physical scenario, the named
/// movable regions, the fixed baseline pose and the solver settings.
struct ScenarioConfig {
  Scenario scenario;
  std::map<std::string, Region> regions;
  Pose6D fixed_pose;
  SolverConfig solver;
};

/// Built-in configuration: the default experiment geometry and solver
/// settings, with regions "r1" (inner) and "r2" (enclosing).
ScenarioConfig default_config();

/// Load a scenario JSON file. Missing fields fall back to the defaults;
/// unknown keys are rejected.
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Parse a scheme name: "pbf-only", "orient-pbf", or "6d-pbf:<region>".
Scheme make_scheme(const std::string& name, const ScenarioConfig& config);

/// All schemes compared by the stock experiments: pbf-only, orient-pbf and
/// one 6d-pbf per configured region (sorted by region name).
std::vector<Scheme> default_schemes(const ScenarioConfig& config);

}  // namespace sixdma
