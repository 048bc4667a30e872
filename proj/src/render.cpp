#include "nbtsp/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nbtsp {

void RenderSpec::validate() const {
  if (width < 1 || height < 1) throw DomainError("render dimensions must be positive");
  if (stride < 1) throw DomainError("render stride must be at least 1");
}

namespace {

struct Viewport {
  double scale;
  double offset_x;
  double offset_y;

  // World y grows upward, SVG y grows downward.
  double px(double x) const { return offset_x + scale * x; }
  double py(double y) const { return offset_y - scale * y; }
};

Viewport fit(double min_x, double max_x, double min_y, double max_y, int width, int height) {
  const double margin = 0.05 * std::min(width, height);
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  const double scale = std::min((width - 2.0 * margin) / span_x, (height - 2.0 * margin) / span_y);
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  return {scale, 0.5 * width - scale * cx, 0.5 * height + scale * cy};
}

std::string svg_open(int width, int height) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  return out.str();
}

void append_circle(std::ostringstream& out, double cx, double cy, double r,
                   const std::string& fill, const std::string& stroke, double stroke_width) {
  out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill
      << "\"";
  if (!stroke.empty()) out << " stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width << "\"";
  out << "/>\n";
}

}  // namespace

std::string render_tour(const CityInstance& inst, const Tour& tour, const RenderSpec& spec) {
  spec.validate();
  if (static_cast<int>(tour.order.size()) != inst.n())
    throw ValidationError("tour has " + std::to_string(tour.order.size()) + " indices but the instance has " +
                          std::to_string(inst.n()) + " cities");
  (void)tour_cost(inst, tour.order);  // rejects non-permutations

  double min_x = inst.cities[0].x, max_x = inst.cities[0].x;
  double min_y = inst.cities[0].y, max_y = inst.cities[0].y;
  for (const Vec2& c : inst.cities) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  const Viewport vp = fit(min_x, max_x, min_y, max_y, spec.width, spec.height);

  std::ostringstream out;
  out.precision(10);
  out << svg_open(spec.width, spec.height);

  out << "  <polygon points=\"";
  for (std::size_t k = 0; k < tour.order.size(); ++k) {
    const Vec2 c = inst.cities[tour.order[k]];
    if (k) out << ' ';
    out << vp.px(c.x) << ',' << vp.py(c.y);
  }
  out << "\" fill=\"none\" stroke=\"" << spec.tour_stroke << "\" stroke-width=\"1.5\"/>\n";

  const double dot = std::max(2.0, 0.004 * std::min(spec.width, spec.height));
  for (const Vec2& c : inst.cities)
    append_circle(out, vp.px(c.x), vp.py(c.y), dot, spec.city_fill, "", 0.0);

  out << "</svg>\n";
  return out.str();
}

std::vector<std::string> render_trace(const std::vector<Snapshot>& trace, const RenderSpec& spec) {
  spec.validate();
  std::vector<std::string> frames;
  for (std::size_t k = 0; k < trace.size(); k += spec.stride) {
    const Snapshot& s = trace[k];
    // The outer wall bounds the world; frame it with a small cushion.
    const double extent = s.r_outer * 1.1;
    const Viewport vp = fit(-extent, extent, -extent, extent, spec.width, spec.height);

    std::ostringstream out;
    out.precision(10);
    out << svg_open(spec.width, spec.height);
    append_circle(out, vp.px(0), vp.py(0), vp.scale * s.r_outer, "none", spec.outer_wall_stroke,
                  2.0);
    if (s.r_inner > 0.0)
      append_circle(out, vp.px(0), vp.py(0), vp.scale * s.r_inner, "none", spec.inner_wall_stroke,
                    2.0);
    for (const Bubble& b : s.bubbles)
      if (b.radius > 0.0)
        append_circle(out, vp.px(b.center.x), vp.py(b.center.y), vp.scale * b.radius, "none",
                      spec.bubble_stroke, 1.5);
    const double dot = std::max(2.0, 0.004 * std::min(spec.width, spec.height));
    for (const Vec2& p : s.positions)
      append_circle(out, vp.px(p.x), vp.py(p.y), dot, spec.city_fill, "", 0.0);
    out << "</svg>\n";
    frames.push_back(out.str());
  }
  return frames;
}

}  // namespace nbtsp
