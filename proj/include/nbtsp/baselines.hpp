#pragma once

#include <vector>

#include "nbtsp/instance.hpp"
#include "nbtsp/tour.hpp"

namespace nbtsp {

// Globally optimal tour by enumerating (n-1)!/2 cyclic orders: city 0 is
// fixed and reversed duplicates are skipped. n must be at most 12.
Tour exact_brute_force(const CityInstance& inst);

// Globally optimal tour by subset dynamic programming over masks of cities
// 1..n-1 with parent reconstruction. Memory grows as n*2^n; n is capped at 22.
Tour exact_held_karp(const CityInstance& inst);

// Greedy chain from `start`; distance ties break toward the lower city index.
Tour nearest_neighbor(const CityInstance& inst, int start);

// One greedy tour per start city, in start order.
std::vector<Tour> nearest_neighbor_all(const CityInstance& inst);

// Minimum-cost tour over all start cities.
Tour nearest_neighbor_best(const CityInstance& inst);

}  // namespace nbtsp
