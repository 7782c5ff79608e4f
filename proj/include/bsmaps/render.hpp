#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsmaps/rect_domain.hpp"
#include "bsmaps/surface.hpp"

namespace bsmaps {

enum class Chart { torus, disk };

/// Coordinates are circle angles on the torus chart and disk points on the disk chart.
struct Polyline {
  std::vector<std::pair<double, double>> points;
  std::string stroke = "#000000";
  bool closed = false;
};

struct Label {
  double x = 0;
  double y = 0;
  std::string text;
};

/// An axis-aligned rectangle on the torus chart; lengths are ccw arc lengths.
struct RectShape {
  double x_start = 0;
  double x_length = 0;
  double y_start = 0;
  double y_length = 0;
  int strip = 0;
  std::string label;
};

struct Layer {
  std::string name;
  int hue_count = 1;  // strips are colored by hue = 360 * strip / hue_count
  std::vector<RectShape> rects;
  std::vector<Polyline> lines;
  std::vector<Label> labels;
  std::vector<std::pair<double, std::string>> ticks;  // torus chart only: angle, name
};

struct RenderSpec {
  Chart chart = Chart::torus;
  int width = 800;
  int height = 800;
  double offset = 0;  // angle drawn at the left and bottom edges of the torus chart
  std::string title;
  std::vector<Layer> layers;
};

/// SVG 1.1 text; byte-identical for identical input.
std::string render_svg(const RenderSpec& spec);

/// Degenerate rectangles are dropped.
Layer domain_layer(const RectDomain& domain, const std::string& name, int hue_count);
/// P_i and Q_i ticks on both axes of the torus chart.
Layer tick_layer(const SurfaceGroup& s);
/// Boundary of the set of geodesics meeting the polygon: the geodesics through a
/// vertex that support the polygon, sampled at `samples` points per vertex.
Layer omega_geo_layer(const SurfaceGroup& s, int samples = 512);

/// Disk chart with the unit circle, geodesic sides and side labels 1..N.
RenderSpec polygon_spec(const SurfaceGroup& s, int width = 800);

}  // namespace bsmaps
