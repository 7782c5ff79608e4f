#include "bsmaps/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace bsmaps {

namespace {

constexpr double kMargin = 40;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// SVG 1.1 has no hsl(); convert hue (saturation 0.6, value 0.9) to #rrggbb
std::string hue_fill(int strip, int hue_count) {
  const int n = hue_count > 0 ? hue_count : 1;
  const double h = static_cast<double>(((strip - 1) % n + n) % n) / n * 6;
  const double v = 0.9, c = v * 0.6;
  const double x = c * (1 - std::abs(std::fmod(h, 2.0) - 1));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = v - c;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)),
                static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

class Frame {
 public:
  explicit Frame(const RenderSpec& spec) : spec_(spec) {
    inner_w_ = std::max(1.0, spec.width - 2 * kMargin);
    inner_h_ = std::max(1.0, spec.height - 2 * kMargin);
  }

  // position of an angle in [0, 1) after applying the chart offset
  double unit(double angle) const { return wrap_angle(angle - spec_.offset) / kTwoPi<double>; }

  double px(double a, double /*b*/) const {
    return spec_.chart == Chart::torus ? kMargin + unit(a) * inner_w_
                                       : spec_.width / 2.0 + a * (inner_w_ / 2);
  }
  double py(double a, double b) const {
    (void)a;
    return spec_.chart == Chart::torus ? spec_.height - kMargin - unit(b) * inner_h_
                                       : spec_.height / 2.0 - b * (inner_h_ / 2);
  }
  double inner_w() const { return inner_w_; }
  double inner_h() const { return inner_h_; }

 private:
  const RenderSpec& spec_;
  double inner_w_;
  double inner_h_;
};

// [start, start + length) on the unit torus axis split at the cut into one or two pieces
std::vector<std::pair<double, double>> split_at_cut(double start_unit, double length_unit) {
  if (length_unit >= 1) return {{0.0, 1.0}};
  if (start_unit + length_unit <= 1) return {{start_unit, length_unit}};
  return {{start_unit, 1 - start_unit}, {0.0, start_unit + length_unit - 1}};
}

void emit_rects(std::string& out, const Frame& f, const Layer& layer) {
  for (const auto& r : layer.rects) {
    const auto xs = split_at_cut(f.unit(r.x_start), r.x_length / kTwoPi<double>);
    const auto ys = split_at_cut(f.unit(r.y_start), r.y_length / kTwoPi<double>);
    for (const auto& [x0, xl] : xs)
      for (const auto& [y0, yl] : ys) {
        const double left = kMargin + x0 * f.inner_w();
        const double top = kMargin + (1 - y0 - yl) * f.inner_h();
        out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" +
               num(xl * f.inner_w()) + "\" height=\"" + num(yl * f.inner_h()) + "\" fill=\"" +
               hue_fill(r.strip, layer.hue_count) +
               "\" fill-opacity=\"0.6\" stroke=\"#000000\" stroke-width=\"0.5\">";
        out += "<title>" + escape(r.label) + "</title></rect>\n";
      }
  }
}

void emit_points(std::string& out, const Frame& f, const std::vector<std::pair<double, double>>& pts,
                 const Polyline& line) {
  if (pts.size() < 2) return;
  out += line.closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) out += ' ';
    out += num(f.px(pts[k].first, pts[k].second)) + "," + num(f.py(pts[k].first, pts[k].second));
  }
  out += "\" fill=\"none\" stroke=\"" + line.stroke + "\" stroke-width=\"1\"/>\n";
}

void emit_lines(std::string& out, const Frame& f, const Layer& layer, Chart chart) {
  for (const auto& line : layer.lines) {
    if (chart == Chart::disk) {
      emit_points(out, f, line.points, line);
      continue;
    }
    // break the polyline where it crosses the cut
    std::vector<std::pair<double, double>> run;
    Polyline open = line;
    open.closed = false;
    for (const auto& p : line.points) {
      if (!run.empty()) {
        const auto& q = run.back();
        if (std::abs(f.unit(p.first) - f.unit(q.first)) > 0.5 ||
            std::abs(f.unit(p.second) - f.unit(q.second)) > 0.5) {
          emit_points(out, f, run, open);
          run.clear();
        }
      }
      run.push_back(p);
    }
    emit_points(out, f, run, open);
  }
}

void emit_labels(std::string& out, const Frame& f, const Layer& layer) {
  for (const auto& l : layer.labels)
    out += "<text x=\"" + num(f.px(l.x, l.y)) + "\" y=\"" + num(f.py(l.x, l.y)) +
           "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           escape(l.text) + "</text>\n";
}

void emit_ticks(std::string& out, const Frame& f, const RenderSpec& spec, const Layer& layer) {
  const double bottom = spec.height - kMargin;
  for (const auto& [angle, name] : layer.ticks) {
    const double x = kMargin + f.unit(angle) * f.inner_w();
    const double y = bottom - f.unit(angle) * f.inner_h();
    const bool is_p = !name.empty() && name.front() == 'P';
    const double len = is_p ? 8 : 4;
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(bottom + len) + "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    out += "<line x1=\"" + num(kMargin - len) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kMargin) +
           "\" y2=\"" + num(y) + "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    if (!is_p) continue;  // only P ticks carry text; Q ticks sit too close to read
    out += "<text x=\"" + num(x) + "\" y=\"" + num(bottom + 20) +
           "\" font-size=\"9\" text-anchor=\"middle\">" + escape(name) + "</text>\n";
    out += "<text x=\"" + num(kMargin - 12) + "\" y=\"" + num(y) +
           "\" font-size=\"9\" text-anchor=\"end\" dominant-baseline=\"middle\">" + escape(name) +
           "</text>\n";
  }
}

std::vector<std::pair<double, double>> geodesic_segment(const Complexd& a, const Complexd& b,
                                                        int samples) {
  const Moebiusd m = Moebiusd::to_origin(a);
  const Moebiusd back = m.inverse();
  const Complexd d = m.apply(b);
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k <= samples; ++k) {
    const Complexd z = back.apply(d * (static_cast<double>(k) / samples));
    pts.emplace_back(z.real(), z.imag());
  }
  return pts;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const Frame f(spec);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " + std::to_string(spec.height) +
         "\">\n";
  if (!spec.title.empty()) out += "<title>" + escape(spec.title) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" fill=\"#ffffff\"/>\n";
  if (spec.chart == Chart::torus)
    out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
           num(f.inner_w()) + "\" height=\"" + num(f.inner_h()) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (const auto& layer : spec.layers) {
    out += "<g id=\"" + escape(layer.name) + "\">\n";
    if (spec.chart == Chart::torus) emit_rects(out, f, layer);
    emit_lines(out, f, layer, spec.chart);
    emit_labels(out, f, layer);
    if (spec.chart == Chart::torus) emit_ticks(out, f, spec, layer);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

Layer domain_layer(const RectDomain& domain, const std::string& name, int hue_count) {
  Layer layer;
  layer.name = name;
  layer.hue_count = hue_count;
  for (const auto& r : domain.rects()) {
    if (r.degenerate || r.x.degenerate() || r.y.degenerate()) continue;
    layer.rects.push_back({r.x.start.angle(), r.x.length(), r.y.start.angle(), r.y.length(),
                           r.strip, r.label()});
  }
  return layer;
}

Layer tick_layer(const SurfaceGroup& s) {
  Layer layer;
  layer.name = "ticks";
  for (int i = 1; i <= s.size(); ++i) {
    layer.ticks.emplace_back(s.P(i).angle(), "P" + std::to_string(i));
    layer.ticks.emplace_back(s.Q(i).angle(), "Q" + std::to_string(i));
  }
  return layer;
}

Layer omega_geo_layer(const SurfaceGroup& s, int samples) {
  Layer layer;
  layer.name = "omega-geo";
  const int n = s.size();
  for (int k = 1; k <= n; ++k) {
    const Complexd v = s.vertex(k);
    const Moebiusd m = Moebiusd::to_origin(v);
    const Moebiusd back = m.inverse();
    Polyline run;
    run.stroke = "#202020";
    auto flush = [&] {
      if (run.points.size() >= 2) layer.lines.push_back(run);
      run.points.clear();
    };
    for (int j = 0; j < samples; ++j) {
      // geodesics through v: u and its antipode seen from v
      const double t = kTwoPi<double> * j / samples;
      const CirclePointd u = back.apply(CirclePointd::from_angle(t));
      const CirclePointd w = back.apply(CirclePointd::from_angle(t + std::numbers::pi));
      double lo = 1, hi = -1;
      for (int q = 1; q <= n; ++q) {
        if (q == k) continue;
        const double side = geodesic_side(u, w, s.vertex(q));
        lo = std::min(lo, side);
        hi = std::max(hi, side);
      }
      if (lo >= -kEpsilon || hi <= kEpsilon)
        run.points.emplace_back(u.angle(), w.angle());
      else
        flush();
    }
    flush();
  }
  return layer;
}

RenderSpec polygon_spec(const SurfaceGroup& s, int width) {
  RenderSpec spec;
  spec.chart = Chart::disk;
  spec.width = spec.height = width;
  spec.title = "fundamental polygon, genus " + std::to_string(s.genus());

  Layer circle;
  circle.name = "boundary";
  Polyline ring;
  ring.closed = true;
  ring.stroke = "#808080";
  for (int k = 0; k < 512; ++k) {
    const double t = kTwoPi<double> * k / 512;
    ring.points.emplace_back(std::cos(t), std::sin(t));
  }
  circle.lines.push_back(ring);

  Layer sides;
  sides.name = "sides";
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    Polyline side;
    side.points = geodesic_segment(s.vertex(i), s.vertex(i + 1), 64);
    sides.lines.push_back(side);
    const Moebiusd to_v = Moebiusd::to_origin(s.vertex(i));
    const Complexd d = to_v.apply(s.vertex(i + 1));
    const Complexd mid = to_v.inverse().apply(d / std::abs(d) * std::tanh(std::atanh(std::abs(d)) / 2));
    // push the label outward along the ray through the side midpoint
    const Complexd at = mid * (1 + 0.08 / std::max(std::abs(mid), 1e-3));
    sides.labels.push_back({at.real(), at.imag(), std::to_string(i)});
  }
  spec.layers = {circle, sides};
  return spec;
}

}  // namespace bsmaps
