#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bsmaps/hyperbolic.hpp"
#include "bsmaps/words.hpp"

namespace bsmaps {

/// Side count 8g − 4.
int side_count(int genus);

/// Maps any integer into {1, …, n}.
inline int wrap_index(int i, int n) { return ((i - 1) % n + n) % n + 1; }

/// σ(i) = 4g − i for odd i, 2 − i for even i (mod N).  Involution.
int sigma(int i, int genus);
/// τ(i) = i + 4g − 2 (mod N).  Involution.
int tau(int i, int genus);
/// ρ(i) = σ(i) + 1 (mod N).
int rho(int i, int genus);

/// Index arithmetic for one genus.
class SideIndexMaps {
 public:
  explicit SideIndexMaps(int genus);

  int genus() const { return genus_; }
  int size() const { return n_; }
  int wrap(int i) const { return wrap_index(i, n_); }
  int sigma(int i) const { return sigma_[wrap(i) - 1]; }
  int tau(int i) const { return tau_[wrap(i) - 1]; }
  int rho(int i) const { return wrap(sigma(i) + 1); }
  const std::vector<int>& sigma_table() const { return sigma_; }
  const std::vector<int>& tau_table() const { return tau_; }

 private:
  int genus_;
  int n_;
  std::vector<int> sigma_;
  std::vector<int> tau_;
};

enum class PolygonHit { inside, boundary, outside };

struct RelationCheck {
  std::string name;
  double deviation = 0;
};

struct RelationReport {
  double tolerance = kEpsilon;
  std::vector<RelationCheck> checks;
  bool pass = true;
  /// Name of the worst failing relation, empty on pass.
  std::string first_failure;
  double max_deviation = 0;
};

struct GeometryReport {
  double tolerance = kEpsilon;
  double max_angle_deviation = 0;
  double max_endpoint_deviation = 0;
  bool ordering_ok = true;
  bool angles_ok = true;
  bool endpoints_ok = true;
  bool pass() const { return ordering_ok && angles_ok && endpoints_ok; }
};

/// Fundamental polygon with its side-pairing generators.  Immutable.
class SurfaceGroup {
 public:
  /// Regular (8g−4)-gon; V_1 at angle `offset` (default π/N).
  static SurfaceGroup regular(int genus, std::optional<double> offset = std::nullopt,
                              double tol = kEpsilon);

  /// Externally supplied polygon and generators; validated by the group relations.
  static SurfaceGroup from_data(int genus, std::vector<Complexd> vertices,
                                std::vector<Moebiusd> generators, double offset = 0,
                                double tol = kEpsilon);

  /// Like from_data without validation (fault injection).
  static SurfaceGroup assemble(int genus, std::vector<Complexd> vertices,
                               std::vector<Moebiusd> generators, double offset = 0);

  int genus() const { return maps_.genus(); }
  int size() const { return maps_.size(); }
  double offset() const { return offset_; }
  const SideIndexMaps& maps() const { return maps_; }
  int wrap(int i) const { return maps_.wrap(i); }
  int sigma(int i) const { return maps_.sigma(i); }
  int tau(int i) const { return maps_.tau(i); }
  int rho(int i) const { return maps_.rho(i); }

  const Complexd& vertex(int i) const { return vertices_[wrap(i) - 1]; }
  const CirclePointd& P(int i) const { return p_[wrap(i) - 1]; }
  const CirclePointd& Q(int i) const { return q_[wrap(i) - 1]; }
  const Moebiusd& T(int i) const { return generators_[wrap(i) - 1]; }
  const std::vector<Complexd>& vertices() const { return vertices_; }
  const std::vector<Moebiusd>& generators() const { return generators_; }

  const CirclePointd& point(const NamedPoint& p) const {
    return p.kind == BaseKind::P ? P(p.index) : Q(p.index);
  }
  /// The 2N points P_1, Q_1, …, P_N, Q_N in counterclockwise order.
  std::vector<CirclePointd> boundary_points() const;
  /// Named point within tol of x, if any.
  std::optional<NamedPoint> name_point(const CirclePointd& x, double tol = kEpsilon) const;

  /// T_{l_1} ⋯ T_{l_m}.
  Moebiusd product(const std::vector<int>& letters) const;
  /// Numeric value of a word, applied innermost letter first.
  CirclePointd evaluate(const GroupWord& w) const;

  /// Free reduction by T_{σ(i)} = T_i⁻¹, then innermost letters absorbed into the base
  /// wherever T_l(base) is itself a named point.
  GroupWord reduce(const GroupWord& w) const;
  /// Shortlex-least word of length ≤ min(|reduce(w)|, max_length) with the same value;
  /// reduce(w) when no shorter representative exists.
  GroupWord canonical(const GroupWord& w, int max_length = 3, double tol = kEpsilon) const;

 private:
  SurfaceGroup(int genus, std::vector<Complexd> vertices, std::vector<Moebiusd> generators,
               double offset);
  bool search_word(const CirclePointd& target, int length, double tol, GroupWord& out) const;

  SideIndexMaps maps_;
  double offset_ = 0;
  std::vector<Complexd> vertices_;
  std::vector<CirclePointd> p_;
  std::vector<CirclePointd> q_;
  std::vector<Moebiusd> generators_;
  // base_images_[l − 1][slot] = named image of T_l applied to named point `slot`.
  std::vector<std::vector<std::optional<NamedPoint>>> base_images_;
};

/// Interior angle at each vertex.
std::vector<double> interior_angles(const SurfaceGroup& s);

/// T_{σ(i)} T_i = Id and T_{ρ³(i)} T_{ρ²(i)} T_{ρ(i)} T_i = Id for every i.
RelationReport verify_group_relations(const SurfaceGroup& s, double tol = kEpsilon);

/// Boundary ordering, π/2 angles and the endpoint images T_i P_i = Q_{σ(i)+1}, T_i Q_{i+1} = P_{σ(i)}.
GeometryReport verify_geometry(const SurfaceGroup& s, double tol = kEpsilon);

PolygonHit geodesic_intersects_polygon(const SurfaceGroup& s, const CirclePointd& u,
                                       const CirclePointd& w, double tol = kEpsilon);

/// Side through which the oriented geodesic u → w leaves the polygon.
/// Throws DomainError if it misses the interior, DegenerateError if it grazes a vertex.
int exit_side(const SurfaceGroup& s, const CirclePointd& u, const CirclePointd& w,
              double tol = kEpsilon);

/// Smallest |side value| of the vertices relative to u → w.
double vertex_clearance(const SurfaceGroup& s, const CirclePointd& u, const CirclePointd& w);

}  // namespace bsmaps
