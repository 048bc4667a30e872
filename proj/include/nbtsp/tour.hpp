#pragma once

#include <span>
#include <string>
#include <vector>

#include "nbtsp/geometry.hpp"
#include "nbtsp/instance.hpp"

namespace nbtsp {

struct Tour {
  std::vector<int> order;  // permutation of 0..n-1
  double cost = 0.0;       // closed-cycle length
};

// Closed-cycle length of `order` on the instance's coordinates. Throws
// ValidationError listing duplicate/missing indices when `order` is not a
// permutation of 0..n-1.
double tour_cost(const CityInstance& inst, std::span<const int> order);

// (approx - exact) / exact * 100.
double percent_error(double approx_cost, double exact_cost);

// Rewrites a cyclic order to start at city 0, oriented so that the second
// element is the smaller of city 0's two neighbors.
void canonicalize_order(std::vector<int>& order);

// Reads the tour as the angular order of `final_positions` around `origin`.
// Ties in angle break by radius (nearer first), then by city index. The cost
// is computed on the instance's original coordinates.
Tour extract_tour(const CityInstance& inst, std::span<const Vec2> final_positions, Vec2 origin);

// One "cost=<value>" line followed by the space-separated 0-based order.
std::string serialize_tour(const Tour& tour);
Tour parse_tour(const std::string& text);

}  // namespace nbtsp
