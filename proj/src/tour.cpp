#include "nbtsp/tour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace nbtsp {

namespace {

void check_permutation(int n, std::span<const int> order) {
  std::vector<int> seen(n, 0);
  std::string duplicates, out_of_range;
  for (int v : order) {
    if (v < 0 || v >= n) {
      out_of_range += " " + std::to_string(v);
      continue;
    }
    if (++seen[v] == 2) duplicates += " " + std::to_string(v);
  }
  std::string missing;
  for (int i = 0; i < n; ++i)
    if (seen[i] == 0) missing += " " + std::to_string(i);
  if (static_cast<int>(order.size()) != n || !duplicates.empty() || !missing.empty() ||
      !out_of_range.empty()) {
    std::string msg = "order is not a permutation of 0.." + std::to_string(n - 1);
    if (!duplicates.empty()) msg += "; duplicates:" + duplicates;
    if (!missing.empty()) msg += "; missing:" + missing;
    if (!out_of_range.empty()) msg += "; out of range:" + out_of_range;
    throw ValidationError(msg);
  }
}

}  // namespace

double tour_cost(const CityInstance& inst, std::span<const int> order) {
  const int n = inst.n();
  check_permutation(n, order);
  double cost = 0.0;
  for (int k = 0; k < n; ++k)
    cost += distance(inst.cities[order[k]], inst.cities[order[(k + 1) % n]]);
  return cost;
}

double percent_error(double approx_cost, double exact_cost) {
  if (!(exact_cost > 0.0)) throw DomainError("percent_error requires exact_cost > 0");
  return (approx_cost - exact_cost) / exact_cost * 100.0;
}

void canonicalize_order(std::vector<int>& order) {
  const auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());
  const std::size_t n = order.size();
  if (n > 2 && order[n - 1] < order[1]) std::reverse(order.begin() + 1, order.end());
}

Tour extract_tour(const CityInstance& inst, std::span<const Vec2> final_positions, Vec2 origin) {
  const int n = inst.n();
  if (static_cast<int>(final_positions.size()) != n)
    throw ValidationError("expected " + std::to_string(n) + " final positions, got " +
                          std::to_string(final_positions.size()));

  struct Polar {
    double angle;
    double radius;
    int index;
  };
  std::vector<Polar> polar;
  polar.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 d = final_positions[i] - origin;
    if (d.x == 0.0 && d.y == 0.0)
      throw DegenerateAngleError("particle " + std::to_string(i) +
                                 " sits exactly on the origin; its angle is undefined");
    double angle = std::atan2(d.y, d.x);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    polar.push_back({angle, norm(d), i});
  }
  std::sort(polar.begin(), polar.end(), [](const Polar& a, const Polar& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.index < b.index;
  });

  std::vector<int> order;
  order.reserve(n);
  for (const Polar& p : polar) order.push_back(p.index);
  canonicalize_order(order);
  const double cost = tour_cost(inst, order);
  return {std::move(order), cost};
}

std::string serialize_tour(const Tour& tour) {
  std::ostringstream out;
  out.precision(17);
  out << "cost=" << tour.cost << "\n";
  for (std::size_t k = 0; k < tour.order.size(); ++k) {
    if (k) out << ' ';
    out << tour.order[k];
  }
  out << "\n";
  return out.str();
}

Tour parse_tour(const std::string& text) {
  std::istringstream in(text);
  std::string cost_line;
  if (!std::getline(in, cost_line) || cost_line.rfind("cost=", 0) != 0)
    throw ParseError("expected a 'cost=<value>' line", 1);
  Tour tour;
  try {
    tour.cost = std::stod(cost_line.substr(5));
  } catch (const std::exception&) {
    throw ParseError("could not parse cost value '" + cost_line.substr(5) + "'", 1);
  }
  int v = 0;
  while (in >> v) tour.order.push_back(v);
  if (tour.order.empty()) throw ParseError("tour has no indices", 2);
  return tour;
}

}  // namespace nbtsp
