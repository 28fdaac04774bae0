// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: single-scheme runs and the element-count /
// SNR-threshold sweeps, exported as CSV.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sixdma/csv.hpp"
#include "sixdma/scenario_io.hpp"
#include "sixdma/sweeps.hpp"

namespace {

using namespace sixdma;

/// Parse "lo..hi", "lo..hi:step" or a comma-separated list.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const double lo = std::stod(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    double step = 1.0;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = std::stod(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const double hi = std::stod(rest);
    if (step <= 0.0) throw CLI::ValidationError("range step must be positive");
    for (double x = lo; x <= hi + 1e-9; x += step) out.push_back(x);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty range '" + text + "'");
  return out;
}

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  for (double x : parse_range(text)) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<Scheme> resolve_schemes(const std::vector<std::string>& names,
                                    const ScenarioConfig& config) {
  if (names.empty()) return default_schemes(config);
  std::vector<Scheme> out;
  for (const std::string& name : names) out.push_back(make_scheme(name, config));
  return out;
}

ResultRow row_from_result(const SchemeResult& res, const std::string& scheme,
                          const Scenario& sc) {
  return {scheme,       sc.n_x,        sc.n_y,    sc.gamma0_db,
          res.seed,     res.snr_s_db,  res.snr_c_db, res.rho,
          res.pose,     res.ao_rounds};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Movable-surface ISAC experiment runner"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  std::string scenario_path;
  std::string out_path;
  bool verbose = false;
  std::uint64_t master_seed = 1;
  int threads = 0;
  app.add_option("--scenario", scenario_path, "Scenario JSON file")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Output CSV path")->required();
  app.add_flag("--verbose", verbose,
               "Write per-iteration traces to <out>.trace.jsonl");
  app.add_option("--master-seed", master_seed, "Master seed for child streams");
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* run_cmd = app.add_subcommand("run", "Optimize a single scheme");
  std::string scheme_name = "6d-pbf:r1";
  std::uint64_t run_seed = 0;
  run_cmd->add_option("--scheme", scheme_name,
                      "pbf-only, orient-pbf or 6d-pbf:<region>");
  run_cmd->add_option("--seed", run_seed, "Seed for this run");

  auto* elems_cmd =
      app.add_subcommand("sweep-elements", "Sweep the element grid size");
  std::string nx_range = "4..16:4";
  int n_seeds = 5;
  std::vector<std::string> scheme_names;
  elems_cmd->add_option("--nx", nx_range, "N_x values, e.g. 4..16 or 4,8,16");
  elems_cmd->add_option("--seeds", n_seeds, "Replicates per cell");
  elems_cmd->add_option("--schemes", scheme_names, "Schemes to compare");

  auto* gamma_cmd =
      app.add_subcommand("sweep-gamma", "Sweep the communication threshold");
  std::string gamma_range = "-10..40:2";
  gamma_cmd->add_option("--gamma", gamma_range, "Gamma0 values in dB");
  gamma_cmd->add_option("--seeds", n_seeds, "Replicates per cell");
  gamma_cmd->add_option("--schemes", scheme_names, "Schemes to compare");

  CLI11_PARSE(app, argc, argv);

  try {
    const ScenarioConfig config = scenario_path.empty()
                                      ? default_config()
                                      : load_scenario(scenario_path);

    std::unique_ptr<TraceWriter> trace;
    if (verbose) trace = std::make_unique<TraceWriter>(out_path + ".trace.jsonl");

    ResultTable table;
    if (run_cmd->parsed()) {
      const Scheme scheme = make_scheme(scheme_name, config);
      const SchemeResult res = run_scheme(config.scenario, scheme,
                                          config.solver, run_seed, trace.get());
      table.rows.push_back(row_from_result(res, scheme.name, config.scenario));
    } else if (elems_cmd->parsed()) {
      table = sweep_elements(config.scenario, resolve_schemes(scheme_names, config),
                             parse_int_range(nx_range), n_seeds, config.solver,
                             master_seed, threads, trace.get());
    } else {
      table = sweep_gamma(config.scenario, resolve_schemes(scheme_names, config),
                          parse_range(gamma_range), n_seeds, config.solver,
                          master_seed, threads, trace.get());
    }
    export_results(table, out_path);
    std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
