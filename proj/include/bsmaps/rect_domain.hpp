#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bsmaps/hyperbolic.hpp"

namespace bsmaps {

/// Ordered endpoint pair (u, w) of an oriented geodesic.
struct BoundaryPair {
  CirclePointd u;
  CirclePointd w;
};

/// Componentwise circle distance, max of the two.
double pair_distance(const BoundaryPair& a, const BoundaryPair& b);

/// (u, w) ↦ (w, u).
inline BoundaryPair flip(const BoundaryPair& p) { return {p.w, p.u}; }

inline BoundaryPair apply(const Moebiusd& m, const BoundaryPair& p) {
  return {m.apply(p.u), m.apply(p.w)};
}

/// R2 = R″, R1 = R′ (natural-extension domain); R, Ru, Rl, V, V1 = V′ (dual domain).
enum class RectKind { R2, R1, R, Ru, Rl, V, V1 };

std::string to_string(RectKind kind);

/// x-arc × y-arc, half-open in both coordinates.
struct LabeledRect {
  Arcd x;
  Arcd y;
  int strip = 0;
  RectKind kind = RectKind::R1;
  bool degenerate = false;

  bool contains(const BoundaryPair& p, double tol = kEpsilon) const {
    return !degenerate && x.contains(p.u, tol) && y.contains(p.w, tol);
  }
  /// Angle-measure area, zero when degenerate.
  double area() const { return degenerate ? 0.0 : x.length() * y.length(); }
  /// Coordinate distance to the closed rectangle.
  double distance(const BoundaryPair& p) const;
  /// Distance to the rectangle's edges, whether p is inside or not.
  double edge_distance(const BoundaryPair& p) const;
  LabeledRect flipped() const;
  std::string label() const { return to_string(kind) + "_" + std::to_string(strip); }
};

/// Finite union of labeled rectangles with pairwise-disjoint interiors.
class RectDomain {
 public:
  RectDomain() = default;
  explicit RectDomain(std::vector<LabeledRect> rects);

  const std::vector<LabeledRect>& rects() const { return rects_; }
  std::size_t size() const { return rects_.size(); }

  /// First non-degenerate rectangle containing p.
  std::optional<std::size_t> locate(const BoundaryPair& p, double tol = kEpsilon) const;
  bool contains(const BoundaryPair& p, double tol = kEpsilon) const {
    return locate(p, tol).has_value();
  }
  std::size_t count_containing(const BoundaryPair& p, double tol = kEpsilon) const;
  /// 0 inside the closure, else coordinate distance to the nearest rectangle.
  double distance(const BoundaryPair& p) const;
  /// Distance from p to the nearest rectangle edge.
  double boundary_clearance(const BoundaryPair& p) const;
  double area() const;
  /// Area-weighted uniform sample.
  BoundaryPair sample(std::mt19937_64& rng) const;
  RectDomain flipped() const;

 private:
  std::vector<LabeledRect> rects_;
  std::vector<double> cumulative_area_;
};

/// One tiling defect found by compare_rows.
struct TilingIssue {
  std::string strip;
  std::string message;
};

/// Cuts `pieces` along the elementary y-strips between consecutive `breakpoints`
/// (counterclockwise order) and checks that in each strip the x-arcs of the pieces
/// tile the x-arc of `targets` exactly.  Every y-arc must begin and end at breakpoints.
/// `names` labels the breakpoints in messages.
std::vector<TilingIssue> compare_rows(const std::vector<LabeledRect>& pieces,
                                      const std::vector<LabeledRect>& targets,
                                      std::span<const CirclePointd> breakpoints,
                                      std::span<const std::string> names,
                                      double tol = kEpsilon);

}  // namespace bsmaps
