#include "nbtsp/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nbtsp/ljf.hpp"
#include "nbtsp/rng.hpp"

namespace nbtsp {

bool variant_has_pressure(Variant v) {
  return v == Variant::Pressure || v == Variant::PressureAndBubble;
}

bool variant_has_bubbles(Variant v) {
  return v == Variant::Bubble || v == Variant::PressureAndBubble;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Simple: return "simple";
    case Variant::Pressure: return "pressure";
    case Variant::Bubble: return "bubble";
    case Variant::PressureAndBubble: return "pressure+bubble";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "simple") return Variant::Simple;
  if (name == "pressure") return Variant::Pressure;
  if (name == "bubble") return Variant::Bubble;
  if (name == "pressure+bubble" || name == "bubble+pressure") return Variant::PressureAndBubble;
  throw DomainError("unknown variant '" + name +
                    "'; expected simple|pressure|bubble|pressure+bubble");
}

void SimConfig::validate() const {
  if (!(shape_ratio > 1.0)) throw DomainError("shape_ratio must exceed 1");
  if (!(force_scale > 0.0)) throw DomainError("force_scale must be positive");
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  if (!(wall_stiffness > 0.0)) throw DomainError("wall_stiffness must be positive");
  if (!(contact_width > 0.0)) throw DomainError("contact_width must be positive");
  if (!(damping >= 0.0)) throw DomainError("damping must be nonnegative");
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (!(inner_growth_rate > 0.0)) throw DomainError("inner_growth_rate must be positive");
  if (!(pressure_low >= 0.0) || !(pressure_high > pressure_low))
    throw DomainError("pressure band requires 0 <= low < high");
  if (!(outer_adjust_rate > 0.0)) throw DomainError("outer_adjust_rate must be positive");
  if (!(gap_stop > 0.0)) throw DomainError("gap_stop must be positive");
  if (max_steps == 0) throw DomainError("max_steps must be positive");
  if (density_cells < 1) throw DomainError("density_cells must be at least 1");
  if (density_threshold < 0) throw DomainError("density_threshold must be nonnegative");
  if (!(bubble_radius > 0.0)) throw DomainError("bubble_radius must be positive");
  if (!(init_jitter >= 0.0)) throw DomainError("init_jitter must be nonnegative");
  // The inner wall must not cross a particle's contact band in one step.
  if (!(dt * inner_growth_rate < contact_width))
    throw DomainError("dt * inner_growth_rate must stay below contact_width");
}

namespace {

int density_threshold_for(const SimConfig& cfg, int n) {
  if (cfg.density_threshold > 0) return cfg.density_threshold;
  const double cells = static_cast<double>(cfg.density_cells) * cfg.density_cells;
  return static_cast<int>(std::ceil(1.5 * n / cells));
}

// Radial unit vector; a particle exactly on the center gets a fixed
// deterministic direction.
Vec2 radial_unit(Vec2 d, double dist) {
  if (dist < 1e-12) return {1.0, 0.0};
  return d / dist;
}

}  // namespace

SimState init_state(const CityInstance& inst, const SimConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const int n = inst.n();

  std::vector<Vec2> pts = inst.cities;
  if (cfg.init_jitter > 0.0) {
    SplitMix64 rng(seed);
    const double scale = cfg.init_jitter * enclosing_geometry(inst).radius;
    for (Vec2& p : pts) {
      p.x += scale * rng.next_double(-1.0, 1.0);
      p.y += scale * rng.next_double(-1.0, 1.0);
    }
  }

  // Normalize after jittering so the mean/radius invariants hold exactly.
  Vec2 sum{0.0, 0.0};
  for (const Vec2& p : pts) sum += p;
  const Vec2 center = sum / static_cast<double>(n);
  double radius = 0.0;
  for (const Vec2& p : pts) radius = std::max(radius, distance(p, center));
  if (radius <= 0.0) throw DomainError("all cities coincide; nothing to simulate");

  SimState state;
  state.positions.reserve(n);
  for (const Vec2& p : pts) state.positions.push_back((p - center) / radius);
  state.velocities.assign(n, Vec2{0.0, 0.0});
  state.r_inner = 0.0;
  state.r_outer = 1.0 + cfg.contact_width;
  state.step = 0;

  state.natural.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(state.positions[i], state.positions[j]);
      if (d < 1e-12)
        throw SingularityError("particles " + std::to_string(i) + " and " + std::to_string(j) +
                                   " coincide after normalization",
                               i, j);
      state.natural[static_cast<std::size_t>(i) * n + j] = d;
      state.natural[static_cast<std::size_t>(j) * n + i] = d;
    }

  if (variant_has_bubbles(cfg.variant)) state.bubbles = insert_bubbles(state, cfg);
  return state;
}

std::vector<Vec2> pair_forces(const SimState& state, const SimConfig& cfg) {
  const int n = state.n();
  std::vector<Vec2> forces(n, Vec2{0.0, 0.0});

  // Shape-form constants shared by every pair: with s = r_min/L fixed, the
  // exponents p and the normalization A = M / (1 - s^-delta) are global and
  // only L varies per pair.
  const double s = cfg.shape_ratio;
  const double p = cfg.delta / (std::pow(s, cfg.delta) - 1.0);
  const double amp = cfg.force_scale / (1.0 - std::pow(s, -cfg.delta));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec2 diff = state.positions[i] - state.positions[j];
      const double r = norm(diff);
      if (r < 1e-12)
        throw SingularityError("particles " + std::to_string(i) + " and " + std::to_string(j) +
                                   " collapsed onto each other at step " +
                                   std::to_string(state.step),
                               i, j);
      const double L = state.natural_at(i, j);
      const double f = amp * std::pow(s * L / r, p) * (std::pow(L / r, cfg.delta) - 1.0);
      const Vec2 fv = (f / r) * diff;  // positive f repels
      forces[i] += fv;
      forces[j] -= fv;
    }
  }
  return forces;
}

WallForces wall_forces(const SimState& state, const SimConfig& cfg) {
  const int n = state.n();
  const double w = cfg.contact_width;
  const double k = cfg.wall_stiffness;
  WallForces out;
  out.forces.assign(n, Vec2{0.0, 0.0});

  for (int i = 0; i < n; ++i) {
    const Vec2 pos = state.positions[i];
    const double rho = norm(pos);
    const Vec2 u = radial_unit(pos, rho);

    const double outer_pen = rho - (state.r_outer - w);
    if (outer_pen > 0.0) {
      out.forces[i] -= k * outer_pen * u;
      out.outer_reaction += k * outer_pen;
    }
    const double inner_pen = (state.r_inner + w) - rho;
    if (inner_pen > 0.0) out.forces[i] += k * inner_pen * u;

    for (const Bubble& b : state.bubbles) {
      const Vec2 d = pos - b.center;
      const double dist = norm(d);
      const double pen = (b.radius + w) - dist;
      if (pen > 0.0) out.forces[i] += k * pen * radial_unit(d, dist);
    }
  }
  return out;
}

double pressure(double outer_reaction, double r_outer) {
  if (!(r_outer > 0.0)) throw DomainError("pressure requires r_outer > 0");
  return outer_reaction / (2.0 * std::numbers::pi * r_outer);
}

double adjust_outer_wall(const SimState& state, const SimConfig& cfg, double outer_reaction) {
  const double p = pressure(outer_reaction, state.r_outer);
  double r = state.r_outer;
  if (p > cfg.pressure_high)
    r += cfg.outer_adjust_rate * cfg.dt;
  else if (p < cfg.pressure_low)
    r = std::max(r - cfg.outer_adjust_rate * cfg.dt, state.r_inner + cfg.gap_stop);
  return r;
}

DensityGrid build_density_grid(const SimState& state, int cells) {
  if (cells < 1) throw DomainError("build_density_grid requires cells >= 1");
  DensityGrid grid{cells, std::vector<DensityCell>(static_cast<std::size_t>(cells) * cells)};
  const double half = state.r_outer;
  const double cell_size = 2.0 * half / cells;

  std::vector<Vec2> sums(grid.data.size(), Vec2{0.0, 0.0});
  for (const Vec2& p : state.positions) {
    int ix = static_cast<int>(std::floor((p.x + half) / cell_size));
    int iy = static_cast<int>(std::floor((p.y + half) / cell_size));
    ix = std::clamp(ix, 0, cells - 1);
    iy = std::clamp(iy, 0, cells - 1);
    const std::size_t at = static_cast<std::size_t>(iy) * cells + ix;
    grid.data[at].count += 1;
    sums[at] += p;
  }
  for (std::size_t c = 0; c < grid.data.size(); ++c)
    if (grid.data[c].count > 0) grid.data[c].com = sums[c] / grid.data[c].count;
  return grid;
}

std::vector<Bubble> insert_bubbles(const SimState& state, const SimConfig& cfg) {
  const DensityGrid grid = build_density_grid(state, cfg.density_cells);
  const int threshold = density_threshold_for(cfg, state.n());
  std::vector<Bubble> bubbles;
  for (const DensityCell& cell : grid.data)
    if (cell.count > threshold) bubbles.push_back({cell.com, 0.0});
  return bubbles;
}

void step(SimState& state, const SimConfig& cfg) {
  const int n = state.n();
  const std::vector<Vec2> pf = pair_forces(state, cfg);
  const WallForces wf = wall_forces(state, cfg);

  double max_force = 0.0;
  bool finite = true;
  for (int i = 0; i < n; ++i) {
    const Vec2 f = pf[i] + wf.forces[i];
    max_force = std::max(max_force, norm(f));
    const Vec2 a = f - cfg.damping * state.velocities[i];
    state.velocities[i] += cfg.dt * a;
    state.positions[i] += cfg.dt * state.velocities[i];
    finite = finite && std::isfinite(state.positions[i].x) && std::isfinite(state.positions[i].y) &&
             std::isfinite(state.velocities[i].x) && std::isfinite(state.velocities[i].y);
  }

  if (variant_has_pressure(cfg.variant))
    state.r_outer = adjust_outer_wall(state, cfg, wf.outer_reaction);
  state.r_inner =
      std::min(state.r_inner + cfg.inner_growth_rate * cfg.dt, state.r_outer - cfg.gap_stop);
  for (Bubble& b : state.bubbles)
    b.radius = std::min(b.radius + cfg.inner_growth_rate * cfg.dt, cfg.bubble_radius);

  ++state.step;
  if (!finite)
    throw NumericalBlowupError("non-finite position or velocity at step " +
                                   std::to_string(state.step) +
                                   " (max force " + std::to_string(max_force) + ")",
                               state.step, max_force);
}

double total_energy(const SimState& state, const SimConfig& cfg) {
  const int n = state.n();
  double e = 0.0;
  for (const Vec2& v : state.velocities) e += 0.5 * norm_sq(v);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double L = state.natural_at(i, j);
      const LjfCanonical canon = canonical_from_shape(
          LjfShape{L, cfg.shape_ratio * L, cfg.force_scale, cfg.delta});
      e += potential_eval(canon, distance(state.positions[i], state.positions[j]));
    }

  const double w = cfg.contact_width;
  for (const Vec2& p : state.positions) {
    const double rho = norm(p);
    const double outer_pen = std::max(0.0, rho - (state.r_outer - w));
    const double inner_pen = std::max(0.0, (state.r_inner + w) - rho);
    e += 0.5 * cfg.wall_stiffness * (outer_pen * outer_pen + inner_pen * inner_pen);
    for (const Bubble& b : state.bubbles) {
      const double pen = std::max(0.0, (b.radius + w) - distance(p, b.center));
      e += 0.5 * cfg.wall_stiffness * pen * pen;
    }
  }
  return e;
}

RunResult run(const CityInstance& inst, const SimConfig& cfg, std::uint64_t seed,
              const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SimState state = init_state(inst, cfg, seed);

  RunResult result;
  const auto record = [&] {
    result.trace.push_back(
        {state.step, state.positions, state.r_inner, state.r_outer, state.bubbles});
  };
  if (options.snapshot_stride > 0) record();

  bool converged = false;
  while (state.step < cfg.max_steps) {
    step(state, cfg);
    if (options.snapshot_stride > 0 && state.step % options.snapshot_stride == 0) record();
    if (state.r_outer - state.r_inner <= cfg.gap_stop * (1.0 + 1e-9)) {
      converged = true;
      break;
    }
  }
  if (options.snapshot_stride > 0 &&
      (result.trace.empty() || result.trace.back().step != state.step))
    record();

  result.tour = extract_tour(inst, state.positions, Vec2{0.0, 0.0});
  result.converged = converged;
  result.steps = state.step;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::string trace_to_csv(const std::vector<Snapshot>& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "step,particle,x,y,r_inner,r_outer\n";
  for (const Snapshot& s : trace)
    for (std::size_t i = 0; i < s.positions.size(); ++i)
      out << s.step << ',' << i << ',' << s.positions[i].x << ',' << s.positions[i].y << ','
          << s.r_inner << ',' << s.r_outer << "\n";
  return out.str();
}

std::vector<Snapshot> trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "step,particle,x,y,r_inner,r_outer")
    throw ParseError("bad trace header", 1);
  std::vector<Snapshot> trace;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t step = 0, particle = 0;
    double x = 0, y = 0, ri = 0, ro = 0;
    char comma = 0;
    if (!(ls >> step >> comma >> particle >> comma >> x >> comma >> y >> comma >> ri >> comma >>
          ro))
      throw ParseError("malformed trace row", lineno);
    if (trace.empty() || trace.back().step != step) trace.push_back({step, {}, ri, ro, {}});
    trace.back().positions.push_back({x, y});
  }
  return trace;
}

}  // namespace nbtsp
