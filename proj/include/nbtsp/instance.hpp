#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbtsp/errors.hpp"
#include "nbtsp/geometry.hpp"

namespace nbtsp {

enum class Metric { Euclid2D };

struct CityInstance {
  std::string name;
  std::vector<Vec2> cities;
  Metric metric = Metric::Euclid2D;
  std::optional<double> optimal_cost;

  // Validating constructor path; rejects < 3 cities and duplicate coordinates.
  static CityInstance make(std::string name, std::vector<Vec2> cities,
                           std::optional<double> optimal_cost = std::nullopt);

  int n() const { return static_cast<int>(cities.size()); }
};

struct DistanceMatrix {
  int n = 0;
  std::vector<double> d;  // row-major n*n, symmetric, zero diagonal

  double operator()(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

// Node-coordinate TSPLIB subset: NAME, TYPE (TSP), DIMENSION, EDGE_WEIGHT_TYPE
// (EUC_2D or ATT), NODE_COORD_SECTION with 1-based contiguous "index x y"
// lines, optionally terminated by EOF. ATT files are accepted but distances
// are always plain Euclidean; a note is appended to `warnings` when that
// reinterpretation happens.
CityInstance parse_tsplib(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Inverse of parse_tsplib for generated instances; coordinates round-trip
// bit-exactly.
std::string to_tsplib(const CityInstance& inst);

// n i.i.d. points uniform on the unit square, reproducible bit-for-bit from
// the seed (SplitMix64).
CityInstance gen_random_uniform(int n, std::uint64_t seed);

// rows x cols unit-spacing lattice. Attaches the optimal tour cost where it
// is known in closed form:
//   - rows, cols >= 2 and rows*cols even: rows*cols (all-unit lattice cycle)
//   - single row/column: out-and-back, 2*(count - 1)
//   - rows, cols >= 3 both odd: rows*cols - 1 + sqrt(2) (one diagonal is
//     unavoidable by the bipartite parity of the lattice)
CityInstance gen_grid(int rows, int cols);

DistanceMatrix distance_matrix(const CityInstance& inst);

struct EnclosingGeometry {
  Vec2 center;     // arithmetic mean of the coordinates
  double radius;   // max distance from center to any city
};

EnclosingGeometry enclosing_geometry(const CityInstance& inst);

}  // namespace nbtsp
