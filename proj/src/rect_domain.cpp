#include "bsmaps/rect_domain.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>

namespace bsmaps {

double pair_distance(const BoundaryPair& a, const BoundaryPair& b) {
  return std::max(circle_distance(a.u, b.u), circle_distance(a.w, b.w));
}

std::string to_string(RectKind kind) {
  switch (kind) {
    case RectKind::R2: return "R''";
    case RectKind::R1: return "R'";
    case RectKind::R: return "R";
    case RectKind::Ru: return "Ru";
    case RectKind::Rl: return "Rl";
    case RectKind::V: return "V";
    case RectKind::V1: return "V'";
  }
  return "?";
}

double LabeledRect::distance(const BoundaryPair& p) const {
  return std::max(x.distance(p.u), y.distance(p.w));
}

double LabeledRect::edge_distance(const BoundaryPair& p) const {
  const double outside = distance(p);
  if (outside > 0) return outside;
  return std::min(x.endpoint_distance(p.u), y.endpoint_distance(p.w));
}

LabeledRect LabeledRect::flipped() const {
  LabeledRect r = *this;
  std::swap(r.x, r.y);
  return r;
}

RectDomain::RectDomain(std::vector<LabeledRect> rects) : rects_(std::move(rects)) {
  double total = 0;
  for (const auto& r : rects_) cumulative_area_.push_back(total += r.area());
}

std::optional<std::size_t> RectDomain::locate(const BoundaryPair& p, double tol) const {
  for (std::size_t k = 0; k < rects_.size(); ++k)
    if (rects_[k].contains(p, tol)) return k;
  return std::nullopt;
}

std::size_t RectDomain::count_containing(const BoundaryPair& p, double tol) const {
  std::size_t n = 0;
  for (const auto& r : rects_) n += r.contains(p, tol) ? 1 : 0;
  return n;
}

double RectDomain::distance(const BoundaryPair& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rects_)
    if (!r.degenerate) best = std::min(best, r.distance(p));
  return best;
}

double RectDomain::boundary_clearance(const BoundaryPair& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rects_)
    if (!r.degenerate) best = std::min(best, r.edge_distance(p));
  return best;
}

double RectDomain::area() const {
  double a = 0;
  for (const auto& r : rects_) a += r.area();
  return a;
}

BoundaryPair RectDomain::sample(std::mt19937_64& rng) const {
  if (cumulative_area_.empty() || !(cumulative_area_.back() > 0))
    throw DomainError("cannot sample an empty domain");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pick = unit(rng) * cumulative_area_.back();
  std::size_t k = std::upper_bound(cumulative_area_.begin(), cumulative_area_.end(), pick) -
                  cumulative_area_.begin();
  k = std::min(k, rects_.size() - 1);
  while (rects_[k].area() <= 0 && k > 0) --k;
  const LabeledRect& r = rects_[k];
  const double su = unit(rng), sw = unit(rng);
  return {CirclePointd::from_angle(r.x.start.angle() + su * r.x.length()),
          CirclePointd::from_angle(r.y.start.angle() + sw * r.y.length())};
}

RectDomain RectDomain::flipped() const {
  std::vector<LabeledRect> out;
  out.reserve(rects_.size());
  for (const auto& r : rects_) out.push_back(r.flipped());
  return RectDomain(std::move(out));
}

namespace {

std::optional<std::size_t> breakpoint_index(std::span<const CirclePointd> b,
                                            const CirclePointd& x, double tol) {
  for (std::size_t k = 0; k < b.size(); ++k)
    if (coincident(b[k], x, tol)) return k;
  return std::nullopt;
}

std::string angle_text(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", a);
  return buf;
}

}  // namespace

std::vector<TilingIssue> compare_rows(const std::vector<LabeledRect>& pieces,
                                      const std::vector<LabeledRect>& targets,
                                      std::span<const CirclePointd> breakpoints,
                                      std::span<const std::string> names, double tol) {
  const std::size_t m = breakpoints.size();
  std::vector<TilingIssue> issues;
  auto strip_name = [&](std::size_t k) {
    return "[" + names[k] + "," + names[(k + 1) % m] + ")";
  };

  // strip index → rectangles covering it
  std::map<std::size_t, std::vector<const LabeledRect*>> piece_rows, target_rows;
  auto distribute = [&](const std::vector<LabeledRect>& rects, auto& rows, const char* what) {
    for (const auto& r : rects) {
      if (r.degenerate || r.y.degenerate(tol)) continue;
      const auto s = breakpoint_index(breakpoints, r.y.start, tol);
      const auto e = breakpoint_index(breakpoints, r.y.end, tol);
      if (!s || !e) {
        issues.push_back({r.label(), std::string(what) + " " + r.label() +
                                         " has a horizontal edge off the breakpoints"});
        continue;
      }
      for (std::size_t k = *s; k != *e; k = (k + 1) % m) rows[k].push_back(&r);
    }
  };
  distribute(pieces, piece_rows, "piece");
  distribute(targets, target_rows, "target");

  for (std::size_t k = 0; k < m; ++k) {
    const auto& tg = target_rows[k];
    auto& pc = piece_rows[k];
    if (tg.empty()) {
      if (!pc.empty())
        issues.push_back({strip_name(k), "pieces " + pc.front()->label() + " land in a strip with no target"});
      continue;
    }
    if (tg.size() > 1) {
      issues.push_back({strip_name(k), "strip has " + std::to_string(tg.size()) + " targets"});
      continue;
    }
    const Arcd& target = tg.front()->x;
    const double len = target.length(tol);
    const double slack = (kTwoPi<double> - len) / 2;
    auto rel = [&](const CirclePointd& x) {
      double r = ccw_offset(target.start, x);
      if (r > len + slack) r -= kTwoPi<double>;
      return r;
    };
    std::vector<std::pair<double, const LabeledRect*>> order;
    for (const auto* p : pc)
      if (!p->x.degenerate(tol)) order.push_back({rel(p->x.start), p});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    double cur = 0;
    std::string prev = "target start " + tg.front()->label();
    for (const auto& [start, p] : order) {
      if (start > cur + tol)
        issues.push_back({strip_name(k), "gap of " + angle_text(start - cur) + " rad before " +
                                             p->label() + " (after " + prev + ", x-start at " +
                                             angle_text(p->x.start.angle()) + ")"});
      else if (start < cur - tol)
        issues.push_back({strip_name(k), "overlap of " + angle_text(cur - start) + " rad between " +
                                             prev + " and " + p->label() + " (x-start at " +
                                             angle_text(p->x.start.angle()) + ")"});
      cur = start + p->x.length(tol);
      prev = p->label();
    }
    if (std::abs(cur - len) > tol)
      issues.push_back({strip_name(k), (cur < len ? "gap of " : "overflow of ") +
                                           angle_text(std::abs(len - cur)) + " rad at the end of " +
                                           tg.front()->label() + " (after " + prev + ")"});
  }
  return issues;
}

}  // namespace bsmaps
