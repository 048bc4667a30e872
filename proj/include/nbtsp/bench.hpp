#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbtsp/instance.hpp"
#include "nbtsp/sim.hpp"

namespace nbtsp {

struct RunReport {
  std::string instance_name;
  int n = 0;
  std::string variant;  // sim variant name or a baseline tag (exact, nn, nn-best)
  std::uint64_t seed = 0;
  double cost = 0.0;
  std::optional<double> exact_cost;
  std::optional<double> percent_error;
  double wall_clock_s = 0.0;
  bool converged = true;

  bool operator==(const RunReport&) const = default;
};

struct SummaryRow {
  std::string group;  // instance name, or "n=<k>" for random sweeps
  std::string variant;
  int count = 0;
  int failures = 0;  // rows with converged == false
  double mean_percent_error = 0.0;
  double min_percent_error = 0.0;
  double max_percent_error = 0.0;
  double stddev_percent_error = 0.0;
  double mean_wall_clock_s = 0.0;
};

struct RandomExperimentConfig {
  std::vector<int> n_values;
  int runs = 0;
  std::uint64_t base_seed = 1;
  SimConfig sim;
  bool use_brute_force = false;   // default exact solver is Held-Karp
  bool nn_best_start = false;     // default: nearest neighbor from city 0
  bool include_nonconverged = true;
};

struct ExperimentResult {
  std::vector<RunReport> rows;
  std::vector<SummaryRow> summary;
  std::vector<std::string> errors;  // rows dropped because a solver threw
};

// Random-sweep protocol: per (n, run) generate an instance with seed
// base_seed + run, solve it exactly, with the N-body method, and with
// nearest neighbor, then average percent errors per n.
ExperimentResult experiment_random(const RandomExperimentConfig& cfg);

// Named-instance protocol: one N-body report per (instance, variant),
// measured against each instance's known optimal cost.
ExperimentResult experiment_named(const std::vector<CityInstance>& instances,
                                  const std::vector<Variant>& variants, const SimConfig& cfg,
                                  std::uint64_t seed = 1);

enum class GroupBy { Instance, N };

// Grouped mean/min/max/stddev of percent error plus mean runtime.
// Rows without a percent error are counted but do not enter the statistics.
std::vector<SummaryRow> summarize(const std::vector<RunReport>& reports, GroupBy group_by,
                                  bool include_nonconverged = true);

// Raw-row CSV with the exact header
// instance,n,variant,seed,cost,exact_cost,percent_error,wall_clock_s,converged
std::string reports_to_csv(const std::vector<RunReport>& reports);
std::vector<RunReport> reports_from_csv(const std::string& text);

std::string summary_to_csv(const std::vector<SummaryRow>& summary);
// Plain-text aligned table of the same rows.
std::string summary_to_table(const std::vector<SummaryRow>& summary);

}  // namespace nbtsp
