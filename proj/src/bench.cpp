#include "nbtsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "nbtsp/baselines.hpp"
#include "nbtsp/tour.hpp"

namespace nbtsp {

namespace {

double now_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunReport make_report(const CityInstance& inst, const std::string& variant, std::uint64_t seed,
                      double cost, std::optional<double> exact_cost, double wall, bool converged) {
  RunReport r;
  r.instance_name = inst.name;
  r.n = inst.n();
  r.variant = variant;
  r.seed = seed;
  r.cost = cost;
  r.exact_cost = exact_cost;
  if (exact_cost) r.percent_error = percent_error(cost, *exact_cost);
  r.wall_clock_s = wall;
  r.converged = converged;
  return r;
}

}  // namespace

ExperimentResult experiment_random(const RandomExperimentConfig& cfg) {
  if (cfg.runs < 1) throw DomainError("experiment_random requires runs >= 1");
  if (cfg.n_values.empty()) throw DomainError("experiment_random requires at least one n");
  for (int n : cfg.n_values) {
    if (cfg.use_brute_force && n > 12)
      throw SizeLimitError("brute-force exact solving is capped at 12 cities (got " +
                           std::to_string(n) + ")");
    if (n > 22) throw SizeLimitError("exact solving is capped at 22 cities (got " +
                                     std::to_string(n) + ")");
  }

  ExperimentResult result;
  for (int n : cfg.n_values) {
    for (int run_idx = 0; run_idx < cfg.runs; ++run_idx) {
      const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(run_idx);
      const CityInstance inst = gen_random_uniform(n, seed);
      // The exact reference anchors the whole cell; the heuristics fail
      // independently, one error row each.
      std::optional<double> exact_cost;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const Tour exact = cfg.use_brute_force ? exact_brute_force(inst) : exact_held_karp(inst);
        result.rows.push_back(make_report(inst, cfg.use_brute_force ? "exact-bf" : "exact-hk",
                                          seed, exact.cost, exact.cost, now_seconds(t0), true));
        exact_cost = exact.cost;
      } catch (const Error& e) {
        result.errors.push_back(inst.name + " (exact): " + e.what());
        continue;
      }
      try {
        const RunResult sim_run = run(inst, cfg.sim, seed);
        result.rows.push_back(make_report(inst, variant_name(cfg.sim.variant), seed,
                                          sim_run.tour.cost, exact_cost, sim_run.wall_seconds,
                                          sim_run.converged));
      } catch (const Error& e) {
        result.errors.push_back(inst.name + " (" + variant_name(cfg.sim.variant) + "): " +
                                e.what());
      }
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const Tour nn = cfg.nn_best_start ? nearest_neighbor_best(inst) : nearest_neighbor(inst, 0);
        result.rows.push_back(make_report(inst, cfg.nn_best_start ? "nn-best" : "nn", seed,
                                          nn.cost, exact_cost, now_seconds(t0), true));
      } catch (const Error& e) {
        result.errors.push_back(inst.name + " (nn): " + e.what());
      }
    }
  }
  if (!result.rows.empty())
    result.summary = summarize(result.rows, GroupBy::N, cfg.include_nonconverged);
  return result;
}

ExperimentResult experiment_named(const std::vector<CityInstance>& instances,
                                  const std::vector<Variant>& variants, const SimConfig& cfg,
                                  std::uint64_t seed) {
  for (const CityInstance& inst : instances)
    if (!inst.optimal_cost)
      throw ValidationError("instance '" + inst.name + "' carries no reference optimal cost");

  ExperimentResult result;
  for (const CityInstance& inst : instances) {
    for (Variant v : variants) {
      SimConfig run_cfg = cfg;
      run_cfg.variant = v;
      try {
        const RunResult r = run(inst, run_cfg, seed);
        result.rows.push_back(make_report(inst, variant_name(v), seed, r.tour.cost,
                                          inst.optimal_cost, r.wall_seconds, r.converged));
      } catch (const Error& e) {
        result.errors.push_back(inst.name + " (" + variant_name(v) + "): " + e.what());
      }
    }
  }
  if (!result.rows.empty()) result.summary = summarize(result.rows, GroupBy::Instance);
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<RunReport>& reports, GroupBy group_by,
                                  bool include_nonconverged) {
  if (reports.empty()) throw DomainError("summarize requires at least one report");

  // Key carries n numerically so that n=8 sorts before n=10.
  std::map<std::tuple<int, std::string, std::string>, std::vector<const RunReport*>> groups;
  for (const RunReport& r : reports) {
    if (group_by == GroupBy::Instance)
      groups[{0, r.instance_name, r.variant}].push_back(&r);
    else
      groups[{r.n, "", r.variant}].push_back(&r);
  }

  std::vector<SummaryRow> out;
  for (const auto& [key, rows] : groups) {
    SummaryRow s;
    s.group = group_by == GroupBy::Instance ? std::get<1>(key)
                                            : "n=" + std::to_string(std::get<0>(key));
    s.variant = std::get<2>(key);
    double sum = 0.0, sum_sq = 0.0, wall = 0.0;
    double lo = 0.0, hi = 0.0;
    int with_pe = 0;
    for (const RunReport* r : rows) {
      s.count += 1;
      if (!r->converged) s.failures += 1;
      wall += r->wall_clock_s;
      if (!r->percent_error) continue;
      if (!include_nonconverged && !r->converged) continue;
      const double pe = *r->percent_error;
      if (with_pe == 0) {
        lo = hi = pe;
      } else {
        lo = std::min(lo, pe);
        hi = std::max(hi, pe);
      }
      sum += pe;
      sum_sq += pe * pe;
      ++with_pe;
    }
    if (with_pe > 0) {
      s.mean_percent_error = sum / with_pe;
      s.min_percent_error = lo;
      s.max_percent_error = hi;
      const double var = std::max(0.0, sum_sq / with_pe - s.mean_percent_error * s.mean_percent_error);
      s.stddev_percent_error = std::sqrt(var);
    }
    s.mean_wall_clock_s = wall / s.count;
    out.push_back(s);
  }
  return out;  // std::map iteration: deterministic (group, variant) order
}

namespace {

std::string fmt_full(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string reports_to_csv(const std::vector<RunReport>& reports) {
  std::string out = "instance,n,variant,seed,cost,exact_cost,percent_error,wall_clock_s,converged\n";
  for (const RunReport& r : reports) {
    out += r.instance_name + ',' + std::to_string(r.n) + ',' + r.variant + ',' +
           std::to_string(r.seed) + ',' + fmt_full(r.cost) + ',';
    if (r.exact_cost) out += fmt_full(*r.exact_cost);
    out += ',';
    if (r.percent_error) out += fmt_full(*r.percent_error);
    out += ',' + fmt_full(r.wall_clock_s) + ',' + (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<RunReport> reports_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "instance,n,variant,seed,cost,exact_cost,percent_error,wall_clock_s,converged")
    throw ParseError("bad report header", 1);
  std::vector<RunReport> reports;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_row(line);
    if (f.size() != 9) throw ParseError("expected 9 fields, got " + std::to_string(f.size()), lineno);
    RunReport r;
    try {
      r.instance_name = f[0];
      r.n = std::stoi(f[1]);
      r.variant = f[2];
      r.seed = std::stoull(f[3]);
      r.cost = std::stod(f[4]);
      if (!f[5].empty()) r.exact_cost = std::stod(f[5]);
      if (!f[6].empty()) r.percent_error = std::stod(f[6]);
      r.wall_clock_s = std::stod(f[7]);
      r.converged = (f[8] == "true");
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad report row: ") + e.what(), lineno);
    }
    reports.push_back(r);
  }
  return reports;
}

std::string summary_to_csv(const std::vector<SummaryRow>& summary) {
  std::string out =
      "group,variant,count,failures,mean_percent_error,min_percent_error,max_percent_error,"
      "stddev_percent_error,mean_wall_clock_s\n";
  for (const SummaryRow& s : summary)
    out += s.group + ',' + s.variant + ',' + std::to_string(s.count) + ',' +
           std::to_string(s.failures) + ',' + fmt_full(s.mean_percent_error) + ',' +
           fmt_full(s.min_percent_error) + ',' + fmt_full(s.max_percent_error) + ',' +
           fmt_full(s.stddev_percent_error) + ',' + fmt_full(s.mean_wall_clock_s) + '\n';
  return out;
}

std::string summary_to_table(const std::vector<SummaryRow>& summary) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "group" << std::setw(18) << "variant" << std::right
      << std::setw(7) << "count" << std::setw(9) << "fail" << std::setw(12) << "mean%"
      << std::setw(12) << "min%" << std::setw(12) << "max%" << std::setw(12) << "std%"
      << std::setw(12) << "wall[s]" << "\n";
  out << std::string(110, '-') << "\n";
  out << std::fixed << std::setprecision(3);
  for (const SummaryRow& s : summary)
    out << std::left << std::setw(16) << s.group << std::setw(18) << s.variant << std::right
        << std::setw(7) << s.count << std::setw(9) << s.failures << std::setw(12)
        << s.mean_percent_error << std::setw(12) << s.min_percent_error << std::setw(12)
        << s.max_percent_error << std::setw(12) << s.stddev_percent_error << std::setw(12)
        << s.mean_wall_clock_s << "\n";
  return out.str();
}

}  // namespace nbtsp
