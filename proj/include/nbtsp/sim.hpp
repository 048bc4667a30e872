#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nbtsp/geometry.hpp"
#include "nbtsp/instance.hpp"
#include "nbtsp/tour.hpp"

namespace nbtsp {

enum class Variant { Simple, Pressure, Bubble, PressureAndBubble };

bool variant_has_pressure(Variant v);
bool variant_has_bubbles(Variant v);
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // throws DomainError

struct SimConfig {
  double shape_ratio = 1.5;        // r_min / L for every pair
  double force_scale = 0.5;        // M per pair
  double delta = 2.0;              // decay shape per pair
  double wall_stiffness = 800.0;   // k_w, force per unit penetration
  double contact_width = 0.05;     // w, softness band of every wall
  double damping = 5.0;            // gamma, velocity drag per unit time
  double dt = 1e-3;                // integration step
  double inner_growth_rate = 0.05; // wall radius growth per unit time
  double pressure_low = 0.5;
  double pressure_high = 30.0;
  double outer_adjust_rate = 0.01;
  double gap_stop = 0.06;          // terminal wall separation
  std::size_t max_steps = 2'000'000;
  int density_cells = 8;           // cells per axis of the density map
  int density_threshold = 0;       // 0 = auto: ceil(1.5 * n / cells^2)
  double bubble_radius = 0.15;
  double init_jitter = 1e-3;       // seeded jitter, fraction of the enclosing radius
  Variant variant = Variant::Simple;

  void validate() const;  // throws DomainError
};

struct Bubble {
  Vec2 center;
  double radius = 0.0;
};

struct SimState {
  std::vector<Vec2> positions;   // normalized frame: mean 0, enclosing radius 1
  std::vector<Vec2> velocities;
  double r_inner = 0.0;
  double r_outer = 1.0;
  std::vector<Bubble> bubbles;
  std::size_t step = 0;
  std::vector<double> natural;   // n*n pair distances fixed at t = 0

  int n() const { return static_cast<int>(positions.size()); }
  double natural_at(int i, int j) const {
    return natural[static_cast<std::size_t>(i) * positions.size() + j];
  }
};

struct DensityCell {
  int count = 0;
  Vec2 com;  // meaningful only when count > 0
};

struct DensityGrid {
  int cells = 0;
  std::vector<DensityCell> data;  // row-major cells*cells

  const DensityCell& at(int ix, int iy) const {
    return data[static_cast<std::size_t>(iy) * cells + ix];
  }
};

// Normalizes the instance (mean to origin, enclosing radius to 1), records
// natural distances, places the walls, and seeds initial bubbles when the
// variant asks for them. Jitter, when nonzero, perturbs the coordinates
// before normalization so both invariants still hold exactly.
SimState init_state(const CityInstance& inst, const SimConfig& cfg, std::uint64_t seed = 1);

// Net per-particle force from all pair interactions. The pair law is the
// force function with L = the pair's natural distance, r_min = shape_ratio*L,
// M = force_scale and the configured delta. Exactly antisymmetric per pair.
std::vector<Vec2> pair_forces(const SimState& state, const SimConfig& cfg);

struct WallForces {
  std::vector<Vec2> forces;
  double outer_reaction = 0.0;  // sum of outer-wall force magnitudes
};

// One-sided linear springs: the outer wall pushes inward on particles beyond
// r_outer - w, the inner wall and every bubble push outward within their
// bands.
WallForces wall_forces(const SimState& state, const SimConfig& cfg);

// Outer-wall reaction per unit of outer-wall perimeter.
double pressure(double outer_reaction, double r_outer);

// Pressure-band control of the outer wall; shrinking clamps at
// r_inner + gap_stop. Returns the updated radius.
double adjust_outer_wall(const SimState& state, const SimConfig& cfg, double outer_reaction);

// Bins particles over the square [-r_outer, r_outer]^2 and records per-cell
// counts and centers of mass.
DensityGrid build_density_grid(const SimState& state, int cells);

// One bubble per cell whose count exceeds the threshold, centered on that
// cell's center of mass with initial radius zero.
std::vector<Bubble> insert_bubbles(const SimState& state, const SimConfig& cfg);

// One semi-implicit Euler step: kick (forces and drag), drift, wall and
// bubble growth, pressure adjustment when enabled.
void step(SimState& state, const SimConfig& cfg);

// Kinetic + pair potential + quadratic wall/bubble penalty energy of the
// current state. Diagnostic; requires the pair law's exponents away from 1.
double total_energy(const SimState& state, const SimConfig& cfg);

struct Snapshot {
  std::size_t step = 0;
  std::vector<Vec2> positions;
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::vector<Bubble> bubbles;
};

struct RunOptions {
  std::size_t snapshot_stride = 0;  // 0 = record no trace
};

struct RunResult {
  Tour tour;
  bool converged = false;   // false when max_steps elapsed before the ring closed
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  std::vector<Snapshot> trace;
};

// Runs the squeeze until r_outer - r_inner <= gap_stop (within 1e-9 relative)
// or max_steps, then extracts the tour from the final angular order.
RunResult run(const CityInstance& inst, const SimConfig& cfg, std::uint64_t seed,
              const RunOptions& options = {});

// Trace CSV: "step,particle,x,y,r_inner,r_outer", one row per particle per
// snapshot.
std::string trace_to_csv(const std::vector<Snapshot>& trace);
std::vector<Snapshot> trace_from_csv(const std::string& text);

}  // namespace nbtsp
