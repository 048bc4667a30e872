// nbtsp: N-body Euclidean TSP heuristic, baselines, benchmarks, rendering.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nbtsp/baselines.hpp"
#include "nbtsp/bench.hpp"
#include "nbtsp/errors.hpp"
#include "nbtsp/instance.hpp"
#include "nbtsp/ljf.hpp"
#include "nbtsp/render.hpp"
#include "nbtsp/rng.hpp"
#include "nbtsp/sim.hpp"
#include "nbtsp/tour.hpp"

namespace fs = std::filesystem;
using namespace nbtsp;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (const fs::path dir = fs::path(path).parent_path(); !dir.empty())
    fs::create_directories(dir);
  std::ofstream out(path);
  if (!out.good()) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string title_variant(Variant v) {
  switch (v) {
    case Variant::Simple: return "Simple";
    case Variant::Pressure: return "Pressure";
    case Variant::Bubble: return "Bubble";
    case Variant::PressureAndBubble: return "Pressure+Bubble";
  }
  return "?";
}

// --- config file (plain key=value, same names as the long flags) ----------

bool apply_config_entry(SimConfig& cfg, const std::string& raw_key, const std::string& value) {
  std::string key = raw_key;
  for (char& c : key)
    if (c == '_') c = '-';
  const auto num = [&] { return std::stod(value); };
  if (key == "shape-ratio") cfg.shape_ratio = num();
  else if (key == "force-scale") cfg.force_scale = num();
  else if (key == "delta") cfg.delta = num();
  else if (key == "wall-stiffness") cfg.wall_stiffness = num();
  else if (key == "contact-width") cfg.contact_width = num();
  else if (key == "damping") cfg.damping = num();
  else if (key == "dt") cfg.dt = num();
  else if (key == "inner-growth-rate") cfg.inner_growth_rate = num();
  else if (key == "pressure-low") cfg.pressure_low = num();
  else if (key == "pressure-high") cfg.pressure_high = num();
  else if (key == "outer-adjust-rate") cfg.outer_adjust_rate = num();
  else if (key == "gap-stop") cfg.gap_stop = num();
  else if (key == "max-steps") cfg.max_steps = static_cast<std::size_t>(std::stoull(value));
  else if (key == "density-cells") cfg.density_cells = std::stoi(value);
  else if (key == "density-threshold") cfg.density_threshold = std::stoi(value);
  else if (key == "bubble-radius") cfg.bubble_radius = num();
  else if (key == "init-jitter") cfg.init_jitter = num();
  else if (key == "variant") cfg.variant = variant_from_name(value);
  else return false;
  return true;
}

void load_config_file(SimConfig& cfg, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("expected key=value in config", lineno);
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!apply_config_entry(cfg, key, value))
      throw ParseError("unknown config key '" + key + "'", lineno);
  }
}

std::string config_to_text(const SimConfig& c) {
  std::ostringstream out;
  out << "shape-ratio=" << c.shape_ratio << "\nforce-scale=" << c.force_scale
      << "\ndelta=" << c.delta << "\nwall-stiffness=" << c.wall_stiffness
      << "\ncontact-width=" << c.contact_width << "\ndamping=" << c.damping << "\ndt=" << c.dt
      << "\ninner-growth-rate=" << c.inner_growth_rate << "\npressure-low=" << c.pressure_low
      << "\npressure-high=" << c.pressure_high << "\nouter-adjust-rate=" << c.outer_adjust_rate
      << "\ngap-stop=" << c.gap_stop << "\nmax-steps=" << c.max_steps
      << "\ndensity-cells=" << c.density_cells << "\ndensity-threshold=" << c.density_threshold
      << "\nbubble-radius=" << c.bubble_radius << "\ninit-jitter=" << c.init_jitter
      << "\nvariant=" << variant_name(c.variant) << "\n";
  return out.str();
}

// --- shared instance-source flags ------------------------------------------

struct SourceOptions {
  std::string instance_path;
  std::string grid_spec;
  int random_n = 0;
  bool jitter_duplicates = false;
  std::optional<double> optimal;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
  auto* path = cmd->add_option("--instance", src.instance_path, "TSPLIB file to load");
  auto* grid = cmd->add_option("--grid", src.grid_spec, "grid instance, e.g. 4x4");
  auto* rand = cmd->add_option("--random", src.random_n,
                               "uniform random instance with this many cities");
  cmd->add_flag("--jitter-duplicates", src.jitter_duplicates,
                "perturb duplicate coordinates by 1e-9 x diameter instead of failing");
  double opt = 0.0;
  cmd->add_option("--optimal", opt, "reference optimal cost for percent error")
      ->each([&src](const std::string& s) { src.optimal = std::stod(s); });
  path->excludes(grid)->excludes(rand);
  grid->excludes(rand);
}

CityInstance jittered_parse(const std::string& text, std::vector<std::string>* warnings,
                            bool jitter_duplicates);

CityInstance load_instance(const SourceOptions& src, std::uint64_t seed) {
  if (!src.instance_path.empty()) {
    std::vector<std::string> warnings;
    CityInstance inst = jittered_parse(read_file(src.instance_path), &warnings,
                                       src.jitter_duplicates);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    if (src.optimal) inst.optimal_cost = src.optimal;
    return inst;
  }
  if (!src.grid_spec.empty()) {
    const auto x = src.grid_spec.find('x');
    if (x == std::string::npos) throw Error("--grid expects ROWSxCOLS, e.g. 4x4");
    CityInstance inst =
        gen_grid(std::stoi(src.grid_spec.substr(0, x)), std::stoi(src.grid_spec.substr(x + 1)));
    if (src.optimal) inst.optimal_cost = src.optimal;
    return inst;
  }
  if (src.random_n > 0) {
    CityInstance inst = gen_random_uniform(src.random_n, seed);
    if (src.optimal) inst.optimal_cost = src.optimal;
    return inst;
  }
  throw Error("no instance source given; use --instance, --grid or --random");
}

// Re-parses with a deterministic nudge on duplicate coordinates.
CityInstance jittered_parse(const std::string& text, std::vector<std::string>* warnings,
                            bool jitter_duplicates) {
  try {
    return parse_tsplib(text, warnings);
  } catch (const ParseError& e) {
    if (!jitter_duplicates ||
        std::string(e.what()).find("identical coordinates") == std::string::npos)
      throw;
  }
  // Lenient pass: pull the raw coordinates, nudge duplicates, rebuild.
  std::istringstream in(text);
  std::string line;
  std::vector<Vec2> pts;
  std::string name = "unnamed";
  bool coords = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "NAME") {
      std::string rest;
      std::getline(ls, rest);
      const auto b = rest.find_first_not_of(" :\t");
      if (b != std::string::npos) name = rest.substr(b);
    } else if (first == "NODE_COORD_SECTION") {
      coords = true;
    } else if (coords && first != "EOF" && !first.empty()) {
      double x = 0, y = 0;
      if (ls >> x >> y) pts.push_back({x, y});
    }
  }
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Vec2& p : pts) {
    min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
  }
  const double diameter = std::hypot(max_x - min_x, max_y - min_y);
  SplitMix64 rng(0x6a17e5);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pts[i] == pts[j]) {
        pts[i].x += 1e-9 * diameter * rng.next_double(-1.0, 1.0);
        pts[i].y += 1e-9 * diameter * rng.next_double(-1.0, 1.0);
      }
  if (warnings) warnings->push_back("duplicate coordinates were jittered by 1e-9 x diameter");
  return CityInstance::make(name, std::move(pts));
}

void print_cost_lines(const std::string& label, double cost,
                      const std::optional<double>& optimal) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  if (optimal) out << "Optimal Path Cost: " << *optimal << "\n";
  out << label << " Path Cost: " << cost << "\n";
  if (optimal) out << "Percent Error: " << percent_error(cost, *optimal) << "%\n";
  std::cout << out.str();
}

// --- subcommand bodies ------------------------------------------------------

struct SolveArgs {
  SourceOptions src;
  SimConfig cfg;
  std::uint64_t seed = kDefaultSeed;
  std::string tour_out, report_out, trace_out, render_out, render_dir;
  std::size_t stride = 100;
  bool print_config = false;
};

int cmd_solve(const SolveArgs& args) {
  if (args.print_config) std::cout << config_to_text(args.cfg);
  const CityInstance inst = load_instance(args.src, args.seed);

  RunOptions opts;
  if (!args.trace_out.empty() || !args.render_dir.empty()) opts.snapshot_stride = args.stride;
  const RunResult result = run(inst, args.cfg, args.seed, opts);

  std::cout << "Instance: " << inst.name << " (n=" << inst.n() << ")\n";
  print_cost_lines(title_variant(args.cfg.variant) + " N-body", result.tour.cost,
                   inst.optimal_cost);
  {
    std::ostringstream rt;
    rt.setf(std::ios::fixed);
    rt.precision(2);
    rt << "Runtime: " << result.wall_seconds << " s\n";
    std::cout << rt.str();
  }
  if (!result.converged)
    std::cerr << "error: run hit max-steps before the ring closed; "
                 "the best-effort tour is reported\n";

  if (!args.tour_out.empty()) write_file(args.tour_out, serialize_tour(result.tour));
  if (!args.report_out.empty()) {
    RunReport report;
    report.instance_name = inst.name;
    report.n = inst.n();
    report.variant = variant_name(args.cfg.variant);
    report.seed = args.seed;
    report.cost = result.tour.cost;
    report.exact_cost = inst.optimal_cost;
    if (inst.optimal_cost)
      report.percent_error = percent_error(result.tour.cost, *inst.optimal_cost);
    report.wall_clock_s = result.wall_seconds;
    report.converged = result.converged;
    write_file(args.report_out, reports_to_csv({report}));
  }
  if (!args.trace_out.empty()) write_file(args.trace_out, trace_to_csv(result.trace));
  if (!args.render_out.empty())
    write_file(args.render_out, render_tour(inst, result.tour, RenderSpec{}));
  if (!args.render_dir.empty()) {
    const std::vector<std::string> frames = render_trace(result.trace, RenderSpec{});
    fs::create_directories(args.render_dir);
    for (std::size_t k = 0; k < frames.size(); ++k) {
      std::ostringstream path;
      path << args.render_dir << "/frame_" << std::setw(5) << std::setfill('0') << k << ".svg";
      write_file(path.str(), frames[k]);
    }
  }
  return result.converged ? 0 : 3;
}

int cmd_exact(const SourceOptions& src, std::uint64_t seed, bool brute_force,
              const std::string& tour_out) {
  const CityInstance inst = load_instance(src, seed);
  const Tour tour = brute_force ? exact_brute_force(inst) : exact_held_karp(inst);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << tour.cost << "\n";
  std::cout << out.str();
  if (!tour_out.empty()) write_file(tour_out, serialize_tour(tour));
  return 0;
}

int cmd_nn(const SourceOptions& src, std::uint64_t seed, int start, bool best,
           const std::string& tour_out) {
  const CityInstance inst = load_instance(src, seed);
  const Tour tour = best ? nearest_neighbor_best(inst) : nearest_neighbor(inst, start);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << tour.cost << "\n";
  std::cout << out.str();
  if (!tour_out.empty()) write_file(tour_out, serialize_tour(tour));
  return 0;
}

struct BenchArgs {
  bool table1 = false;
  std::string n_values = "8,9,10,11,12";
  int runs = 0;
  std::uint64_t base_seed = kDefaultSeed;
  bool brute_force_exact = false;
  bool nn_best = false;
  bool exclude_nonconverged = false;
  std::vector<std::string> named;
  std::vector<double> named_optima;
  std::string variants = "all";
  SimConfig cfg;
  std::string out_prefix = "bench";
  bool jitter_duplicates = false;
};

int cmd_bench(const BenchArgs& args) {
  ExperimentResult result;
  if (args.table1) {
    RandomExperimentConfig cfg;
    std::istringstream ss(args.n_values);
    std::string tok;
    while (std::getline(ss, tok, ',')) cfg.n_values.push_back(std::stoi(tok));
    cfg.runs = args.runs;
    cfg.base_seed = args.base_seed;
    cfg.sim = args.cfg;
    cfg.use_brute_force = args.brute_force_exact;
    cfg.nn_best_start = args.nn_best;
    cfg.include_nonconverged = !args.exclude_nonconverged;
    result = experiment_random(cfg);
  } else if (!args.named.empty()) {
    if (args.named_optima.size() != args.named.size())
      throw Error("--named needs one --optimal per instance");
    std::vector<CityInstance> instances;
    for (std::size_t i = 0; i < args.named.size(); ++i) {
      std::vector<std::string> warnings;
      CityInstance inst =
          jittered_parse(read_file(args.named[i]), &warnings, args.jitter_duplicates);
      for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
      inst.optimal_cost = args.named_optima[i];
      instances.push_back(std::move(inst));
    }
    std::vector<Variant> variants;
    if (args.variants == "all") {
      variants = {Variant::Simple, Variant::Pressure, Variant::Bubble};
    } else {
      std::istringstream ss(args.variants);
      std::string tok;
      while (std::getline(ss, tok, ',')) variants.push_back(variant_from_name(tok));
    }
    result = experiment_named(instances, variants, args.cfg, args.base_seed);
  } else {
    throw Error("choose a protocol: --table1 or --named");
  }

  for (const std::string& e : result.errors) std::cerr << "error row: " << e << "\n";
  write_file(args.out_prefix + "_raw.csv", reports_to_csv(result.rows));
  write_file(args.out_prefix + "_summary.csv", summary_to_csv(result.summary));
  const std::string table = summary_to_table(result.summary);
  write_file(args.out_prefix + "_summary.txt", table);
  std::cout << table;
  if (args.table1)
    std::cout << "rows: " << result.rows.size() << " (" << result.rows.size() / 3
              << " per method)\n";
  else
    std::cout << "rows: " << result.rows.size() << "\n";
  return result.errors.empty() ? 0 : 3;
}

struct RenderArgs {
  SourceOptions src;
  std::uint64_t seed = kDefaultSeed;
  std::string tour_path, trace_path, out, out_dir;
  RenderSpec spec;
};

int cmd_render(const RenderArgs& args) {
  if (!args.tour_path.empty()) {
    if (args.out.empty()) throw Error("--tour rendering needs --out");
    const CityInstance inst = load_instance(args.src, args.seed);
    const Tour tour = parse_tour(read_file(args.tour_path));
    write_file(args.out, render_tour(inst, tour, args.spec));
    std::cout << "wrote " << args.out << "\n";
    return 0;
  }
  if (!args.trace_path.empty()) {
    if (args.out_dir.empty()) throw Error("--trace rendering needs --out-dir");
    const std::vector<Snapshot> trace = trace_from_csv(read_file(args.trace_path));
    const std::vector<std::string> frames = render_trace(trace, args.spec);
    fs::create_directories(args.out_dir);
    for (std::size_t k = 0; k < frames.size(); ++k) {
      std::ostringstream path;
      path << args.out_dir << "/frame_" << std::setw(5) << std::setfill('0') << k << ".svg";
      write_file(path.str(), frames[k]);
    }
    std::cout << "wrote " << frames.size() << " frames to " << args.out_dir << "\n";
    return 0;
  }
  throw Error("render needs --tour or --trace");
}

struct LjfArgs {
  std::optional<double> G, H, q, p;
  std::optional<double> L, r_min, M, delta;
  std::optional<double> eps, r_eps;
};

int cmd_ljf(const LjfArgs& args) {
  std::ostringstream out;
  out.precision(12);
  LjfShape shape;
  if (args.G && args.H && args.q && args.p) {
    const LjfCanonical canon{*args.G, *args.H, *args.q, *args.p};
    const ShapeQuantities sq = shape_from_canonical(canon);
    shape = sq.shape;
    out << "L=" << shape.L << "\nr_min=" << shape.r_min << "\nM=" << shape.M
        << "\ndelta=" << shape.delta << "\nr_infl=" << sq.r_infl << "\n";
  } else if (args.L && args.r_min && args.M && args.delta) {
    shape = LjfShape{*args.L, *args.r_min, *args.M, *args.delta};
    const LjfCanonical canon = canonical_from_shape(shape);
    const ShapeQuantities sq = shape_from_canonical(canon);
    out << "G=" << canon.G << "\nH=" << canon.H << "\nq=" << canon.q << "\np=" << canon.p
        << "\nr_infl=" << sq.r_infl << "\n";
  } else {
    throw Error("ljf needs either --G --H --q --p or --L --r-min --M --delta");
  }
  if (args.eps) {
    const double R = solve_R_eps(shape.L, shape.r_min, *args.eps);
    out << "R_eps=" << R << "\n";
    if (args.r_eps) {
      const double d = solve_delta(shape.L, shape.r_min, shape.M, *args.eps, *args.r_eps);
      out << "delta_solved=" << d << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

void add_sim_flags(CLI::App* cmd, SimConfig& cfg, std::string& variant) {
  const auto opt = [cmd](const char* name, auto& field, const char* help) {
    cmd->add_option(name, field, help)->capture_default_str();
  };
  opt("--shape-ratio", cfg.shape_ratio, "r_min/L of every pair force");
  opt("--force-scale", cfg.force_scale, "maximal attractive force M per pair");
  opt("--delta", cfg.delta, "decay shape of the pair force");
  opt("--wall-stiffness", cfg.wall_stiffness, "wall spring constant");
  opt("--contact-width", cfg.contact_width, "wall softness band");
  opt("--damping", cfg.damping, "velocity drag per unit time");
  opt("--dt", cfg.dt, "integration step");
  opt("--inner-growth-rate", cfg.inner_growth_rate, "inner wall growth per unit time");
  opt("--pressure-low", cfg.pressure_low, "outer wall shrinks below this pressure");
  opt("--pressure-high", cfg.pressure_high, "outer wall grows above this pressure");
  opt("--outer-adjust-rate", cfg.outer_adjust_rate, "outer wall adjust speed");
  opt("--gap-stop", cfg.gap_stop, "terminal wall separation");
  opt("--max-steps", cfg.max_steps, "step budget before giving up");
  opt("--density-cells", cfg.density_cells, "density map cells per axis");
  opt("--density-threshold", cfg.density_threshold, "bubble insertion threshold (0 = auto)");
  opt("--bubble-radius", cfg.bubble_radius, "bubble growth limit");
  opt("--init-jitter", cfg.init_jitter,
      "seeded initial jitter as a fraction of the enclosing radius");
  cmd->add_option("--variant", variant, "simple|pressure|bubble|pressure+bubble")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-body approach to the Euclidean TSP: squeeze particles between "
               "walls into a ring and read the tour off its angular order"};
  app.require_subcommand(1);

  // --config is applied before flag parsing so flags win over the file.
  SimConfig base_cfg;
  try {
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--config") load_config_file(base_cfg, argv[i + 1]);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  SolveArgs solve;
  solve.cfg = base_cfg;
  std::string solve_variant = variant_name(solve.cfg.variant);
  auto* solve_cmd = app.add_subcommand("solve", "run the N-body heuristic on an instance");
  add_source_flags(solve_cmd, solve.src);
  add_sim_flags(solve_cmd, solve.cfg, solve_variant);
  std::string config_path;
  solve_cmd->add_option("--config", config_path, "key=value config file");
  solve_cmd->add_option("--seed", solve.seed, "seed for generation and jitter");
  solve_cmd->add_option("--tour-out", solve.tour_out, "write the tour here");
  solve_cmd->add_option("--report-out", solve.report_out, "write a one-row report CSV here");
  solve_cmd->add_option("--trace-out", solve.trace_out, "write the snapshot trace CSV here");
  solve_cmd->add_option("--stride", solve.stride, "snapshot stride for traces");
  solve_cmd->add_option("--render-out", solve.render_out, "write a tour SVG here");
  solve_cmd->add_option("--render-dir", solve.render_dir, "write trace SVG frames here");
  solve_cmd->add_flag("--print-config", solve.print_config, "print the effective config first");

  SourceOptions exact_src;
  std::uint64_t exact_seed = kDefaultSeed;
  bool brute_force = false;
  std::string exact_tour_out;
  auto* exact_cmd = app.add_subcommand("exact", "solve exactly (Held-Karp, or brute force)");
  add_source_flags(exact_cmd, exact_src);
  exact_cmd->add_option("--seed", exact_seed, "seed for --random");
  exact_cmd->add_flag("--brute-force", brute_force, "enumerate (n-1)!/2 tours instead (n <= 12)");
  exact_cmd->add_option("--tour-out", exact_tour_out, "write the tour here");

  SourceOptions nn_src;
  std::uint64_t nn_seed = kDefaultSeed;
  int nn_start = 0;
  bool nn_best = false;
  std::string nn_tour_out;
  auto* nn_cmd = app.add_subcommand("nn", "nearest-neighbor baseline");
  add_source_flags(nn_cmd, nn_src);
  nn_cmd->add_option("--seed", nn_seed, "seed for --random");
  nn_cmd->add_option("--start", nn_start, "start city (default 0)");
  nn_cmd->add_flag("--best", nn_best, "best over all start cities");
  nn_cmd->add_option("--tour-out", nn_tour_out, "write the tour here");

  BenchArgs bench;
  bench.cfg = base_cfg;
  std::string bench_variant = variant_name(bench.cfg.variant);
  auto* bench_cmd = app.add_subcommand("bench", "experiment harness (random sweeps, named instances)");
  bench_cmd->add_flag("--table1", bench.table1, "random-instance sweep protocol");
  bench_cmd->add_option("--n-values", bench.n_values, "comma-separated instance sizes");
  bench_cmd->add_option("--runs", bench.runs, "runs per n");
  bench_cmd->add_option("--base-seed", bench.base_seed, "seed of run 0");
  bench_cmd->add_flag("--brute-force-exact", bench.brute_force_exact,
                      "use brute force as the exact reference (n <= 12)");
  bench_cmd->add_flag("--nn-best", bench.nn_best, "report best-of-all-starts nearest neighbor");
  bench_cmd->add_flag("--exclude-nonconverged", bench.exclude_nonconverged,
                      "drop non-converged runs from averages");
  bench_cmd->add_option("--named", bench.named, "TSPLIB instance paths");
  bench_cmd->add_option("--optimal", bench.named_optima, "reference optimum per named instance");
  bench_cmd->add_option("--variants", bench.variants, "all or comma-separated variant names");
  bench_cmd->add_flag("--jitter-duplicates", bench.jitter_duplicates,
                      "perturb duplicate coordinates instead of failing");
  add_sim_flags(bench_cmd, bench.cfg, bench_variant);
  bench_cmd->add_option("--config", config_path, "key=value config file");
  bench_cmd->add_option("--out-prefix", bench.out_prefix, "output file prefix");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "render a tour or trace to SVG");
  add_source_flags(render_cmd, render.src);
  render_cmd->add_option("--seed", render.seed, "seed for --random");
  render_cmd->add_option("--tour", render.tour_path, "tour file to draw");
  render_cmd->add_option("--trace", render.trace_path, "trace CSV to draw");
  render_cmd->add_option("--out", render.out, "output SVG path (tour mode)");
  render_cmd->add_option("--out-dir", render.out_dir, "output directory (trace mode)");
  render_cmd->add_option("--width", render.spec.width, "canvas width");
  render_cmd->add_option("--height", render.spec.height, "canvas height");
  render_cmd->add_option("--stride", render.spec.stride, "render every k-th snapshot");

  LjfArgs ljf;
  auto* ljf_cmd = app.add_subcommand("ljf", "pair-force diagnostics (prints key=value lines)");
  double v = 0.0;
  ljf_cmd->add_option("--G", v, "repulsive coefficient")
      ->each([&ljf](const std::string& s) { ljf.G = std::stod(s); });
  ljf_cmd->add_option("--H", v, "attractive coefficient")
      ->each([&ljf](const std::string& s) { ljf.H = std::stod(s); });
  ljf_cmd->add_option("--q", v, "repulsive exponent")
      ->each([&ljf](const std::string& s) { ljf.q = std::stod(s); });
  ljf_cmd->add_option("--p", v, "attractive exponent")
      ->each([&ljf](const std::string& s) { ljf.p = std::stod(s); });
  ljf_cmd->add_option("--L", v, "equilibrium distance")
      ->each([&ljf](const std::string& s) { ljf.L = std::stod(s); });
  ljf_cmd->add_option("--r-min", v, "location of maximal attraction")
      ->each([&ljf](const std::string& s) { ljf.r_min = std::stod(s); });
  ljf_cmd->add_option("--M", v, "maximal attractive force")
      ->each([&ljf](const std::string& s) { ljf.M = std::stod(s); });
  ljf_cmd->add_option("--delta", v, "decay shape")
      ->each([&ljf](const std::string& s) { ljf.delta = std::stod(s); });
  ljf_cmd->add_option("--eps", v, "decay level in (0,1)")
      ->each([&ljf](const std::string& s) { ljf.eps = std::stod(s); });
  ljf_cmd->add_option("--r-eps", v, "target radius for solving delta")
      ->each([&ljf](const std::string& s) { ljf.r_eps = std::stod(s); });

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      solve.cfg.variant = variant_from_name(solve_variant);
      return cmd_solve(solve);
    }
    if (exact_cmd->parsed()) return cmd_exact(exact_src, exact_seed, brute_force, exact_tour_out);
    if (nn_cmd->parsed()) return cmd_nn(nn_src, nn_seed, nn_start, nn_best, nn_tour_out);
    if (bench_cmd->parsed()) {
      bench.cfg.variant = variant_from_name(bench_variant);
      return cmd_bench(bench);
    }
    if (render_cmd->parsed()) return cmd_render(render);
    if (ljf_cmd->parsed()) return cmd_ljf(ljf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
