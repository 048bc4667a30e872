#include "nbtsp/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace nbtsp {

Tour exact_brute_force(const CityInstance& inst) {
  const int n = inst.n();
  if (n > 12)
    throw SizeLimitError("exact_brute_force handles at most 12 cities (got " +
                         std::to_string(n) + "); use exact_held_karp");
  const DistanceMatrix d = distance_matrix(inst);

  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best_perm = perm;
  double best = std::numeric_limits<double>::infinity();
  do {
    // Each cyclic order and its reversal appear once each; keep the half
    // with the smaller first entry.
    if (perm.front() > perm.back()) continue;
    double cost = d(0, perm.front()) + d(perm.back(), 0);
    for (int k = 0; k + 1 < n - 1; ++k) cost += d(perm[k], perm[k + 1]);
    if (cost < best) {
      best = cost;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> order;
  order.reserve(n);
  order.push_back(0);
  order.insert(order.end(), best_perm.begin(), best_perm.end());
  canonicalize_order(order);
  // Selection used the accumulated sums; the reported cost is recomputed on
  // the canonical order so equal tours always carry bit-identical costs.
  const double cost = tour_cost(inst, order);
  return {std::move(order), cost};
}

Tour exact_held_karp(const CityInstance& inst) {
  const int n = inst.n();
  if (n > 22)
    throw SizeLimitError("exact_held_karp handles at most 22 cities (got " + std::to_string(n) +
                         ")");
  const DistanceMatrix d = distance_matrix(inst);

  const int m = n - 1;  // cities 1..n-1; city 0 is the anchor
  const std::size_t num_masks = std::size_t{1} << m;
  std::vector<double> dp(num_masks * m, std::numeric_limits<double>::infinity());
  std::vector<std::int8_t> parent(num_masks * m, -1);

  for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = d(0, j + 1);

  for (std::size_t mask = 1; mask < num_masks; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double cur = dp[mask * m + j];
      if (!std::isfinite(cur)) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        const double cand = cur + d(j + 1, k + 1);
        if (cand < dp[next * m + k]) {
          dp[next * m + k] = cand;
          parent[next * m + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }

  const std::size_t full = num_masks - 1;
  double best = std::numeric_limits<double>::infinity();
  int best_end = 0;
  for (int j = 0; j < m; ++j) {
    const double cand = dp[full * m + j] + d(j + 1, 0);
    if (cand < best) {
      best = cand;
      best_end = j;
    }
  }

  std::vector<int> order;
  order.reserve(n);
  std::size_t mask = full;
  int j = best_end;
  while (j >= 0) {
    order.push_back(j + 1);
    const int prev = parent[mask * m + j];
    mask &= ~(std::size_t{1} << j);
    j = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  canonicalize_order(order);
  const double cost = tour_cost(inst, order);
  return {std::move(order), cost};
}

Tour nearest_neighbor(const CityInstance& inst, int start) {
  const int n = inst.n();
  if (start < 0 || start >= n)
    throw DomainError("nearest_neighbor start index " + std::to_string(start) +
                      " is out of range");
  const DistanceMatrix d = distance_matrix(inst);

  std::vector<bool> visited(n, false);
  std::vector<int> order;
  order.reserve(n);
  int current = start;
  visited[current] = true;
  order.push_back(current);
  for (int step = 1; step < n; ++step) {
    int next = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (visited[j]) continue;
      if (d(current, j) < best) {  // strict: ties keep the lower index
        best = d(current, j);
        next = j;
      }
    }
    visited[next] = true;
    order.push_back(next);
    current = next;
  }
  canonicalize_order(order);
  const double cost = tour_cost(inst, order);
  return {std::move(order), cost};
}

std::vector<Tour> nearest_neighbor_all(const CityInstance& inst) {
  std::vector<Tour> tours;
  tours.reserve(inst.n());
  for (int s = 0; s < inst.n(); ++s) tours.push_back(nearest_neighbor(inst, s));
  return tours;
}

Tour nearest_neighbor_best(const CityInstance& inst) {
  std::vector<Tour> tours = nearest_neighbor_all(inst);
  std::size_t best = 0;
  for (std::size_t s = 1; s < tours.size(); ++s)
    if (tours[s].cost < tours[best].cost) best = s;
  return tours[best];
}

}  // namespace nbtsp
