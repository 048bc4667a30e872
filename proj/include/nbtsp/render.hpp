#pragma once

#include <string>
#include <vector>

#include "nbtsp/instance.hpp"
#include "nbtsp/sim.hpp"
#include "nbtsp/tour.hpp"

namespace nbtsp {

struct RenderSpec {
  int width = 800;
  int height = 800;
  std::size_t stride = 1;  // render every stride-th snapshot
  std::string city_fill = "#1f3b73";
  std::string tour_stroke = "#c0392b";
  std::string inner_wall_stroke = "#7f8c8d";
  std::string outer_wall_stroke = "#2c3e50";
  std::string bubble_stroke = "#27ae60";

  void validate() const;  // throws DomainError
};

// Cities as dots plus the closed tour polyline, drawn in the instance's
// original coordinates.
std::string render_tour(const CityInstance& inst, const Tour& tour, const RenderSpec& spec);

// One SVG per rendered snapshot: particles, both walls, and any bubbles.
std::vector<std::string> render_trace(const std::vector<Snapshot>& trace, const RenderSpec& spec);

}  // namespace nbtsp
