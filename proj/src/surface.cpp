#include "bsmaps/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bsmaps {

namespace {

constexpr double kPi = std::numbers::pi;

void check_genus(int genus) {
  if (genus < 2) throw IndexError("genus must be at least 2, got " + std::to_string(genus));
}

void check_index(int i, int genus) {
  const int n = side_count(genus);
  if (i < 1 || i > n)
    throw IndexError("side index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

int slot_of(const NamedPoint& p) { return 2 * (p.index - 1) + (p.kind == BaseKind::Q ? 1 : 0); }

NamedPoint named_of_slot(int slot) {
  return {slot % 2 == 0 ? BaseKind::P : BaseKind::Q, slot / 2 + 1};
}

}  // namespace

int side_count(int genus) {
  check_genus(genus);
  return 8 * genus - 4;
}

int sigma(int i, int genus) {
  check_index(i, genus);
  const int n = side_count(genus);
  return i % 2 == 1 ? wrap_index(4 * genus - i, n) : wrap_index(2 - i, n);
}

int tau(int i, int genus) {
  check_index(i, genus);
  return wrap_index(i + 4 * genus - 2, side_count(genus));
}

int rho(int i, int genus) { return wrap_index(sigma(i, genus) + 1, side_count(genus)); }

SideIndexMaps::SideIndexMaps(int genus) : genus_(genus), n_(side_count(genus)) {
  sigma_.reserve(n_);
  tau_.reserve(n_);
  for (int i = 1; i <= n_; ++i) {
    sigma_.push_back(bsmaps::sigma(i, genus));
    tau_.push_back(bsmaps::tau(i, genus));
  }
}

SurfaceGroup::SurfaceGroup(int genus, std::vector<Complexd> vertices,
                           std::vector<Moebiusd> generators, double offset)
    : maps_(genus), offset_(offset), vertices_(std::move(vertices)),
      generators_(std::move(generators)) {
  const int n = maps_.size();
  if (static_cast<int>(vertices_.size()) != n || static_cast<int>(generators_.size()) != n)
    throw ConstructionError("expected " + std::to_string(n) + " vertices and generators");
  p_.resize(n);
  q_.resize(n);
  for (int i = 1; i <= n; ++i) {
    const auto [back, fwd] = geodesic_endpoints(vertex(i), vertex(i + 1));
    p_[i - 1] = back;
    q_[wrap(i + 1) - 1] = fwd;
  }
  base_images_.assign(n, std::vector<std::optional<NamedPoint>>(2 * n));
  for (int l = 1; l <= n; ++l)
    for (int slot = 0; slot < 2 * n; ++slot)
      base_images_[l - 1][slot] = name_point(T(l).apply(point(named_of_slot(slot))));
}

SurfaceGroup SurfaceGroup::regular(int genus, std::optional<double> offset, double tol) {
  const int n = side_count(genus);
  const double off = offset.value_or(kPi / n);
  // cosh R = cot(π/N)·cot(π/4) for the circumradius R of a regular N-gon with right angles.
  const double big_r = std::acosh(1.0 / std::tan(kPi / n));
  const double r = std::tanh(big_r / 2);

  std::vector<Complexd> vertices;
  for (int k = 1; k <= n; ++k) vertices.push_back(std::polar(r, 2 * kPi * (k - 1) / n + off));

  const SideIndexMaps maps(genus);
  std::vector<CirclePointd> p(n), q(n);
  for (int i = 1; i <= n; ++i) {
    const auto [back, fwd] = geodesic_endpoints(vertices[i - 1], vertices[maps.wrap(i + 1) - 1]);
    p[i - 1] = back;
    q[maps.wrap(i + 1) - 1] = fwd;
  }
  auto P = [&](int i) { return p[maps.wrap(i) - 1].value(); };
  auto Q = [&](int i) { return q[maps.wrap(i) - 1].value(); };
  auto V = [&](int i) { return vertices[maps.wrap(i) - 1]; };

  std::vector<Moebiusd> generators;
  for (int i = 1; i <= n; ++i) {
    const int s = maps.sigma(i);
    const Complexd from[3] = {P(i), Q(i + 1), V(i)};
    const Complexd to[3] = {Q(s + 1), P(s), V(s + 1)};
    generators.push_back(from_three_points(from, to, tol));
  }

  SurfaceGroup out(genus, std::move(vertices), std::move(generators), off);
  const RelationReport rel = verify_group_relations(out, tol);
  if (!rel.pass) throw ConstructionError("relation fails: " + rel.first_failure);
  const GeometryReport geo = verify_geometry(out, tol);
  if (!geo.ordering_ok) throw ConstructionError("boundary order P_1, Q_1, ..., Q_N fails");
  if (!geo.angles_ok) throw ConstructionError("interior angles differ from pi/2");
  if (!geo.endpoints_ok) throw ConstructionError("generator endpoint images fail");
  return out;
}

SurfaceGroup SurfaceGroup::from_data(int genus, std::vector<Complexd> vertices,
                                     std::vector<Moebiusd> generators, double offset,
                                     double tol) {
  SurfaceGroup out = assemble(genus, std::move(vertices), std::move(generators), offset);
  const RelationReport rel = verify_group_relations(out, tol);
  if (!rel.pass) throw ConstructionError("relation fails: " + rel.first_failure);
  GeometryReport geo = verify_geometry(out, tol);
  if (!geo.ordering_ok) throw ConstructionError("boundary order P_1, Q_1, ..., Q_N fails");
  if (!geo.endpoints_ok) throw ConstructionError("generator endpoint images fail");
  return out;
}

SurfaceGroup SurfaceGroup::assemble(int genus, std::vector<Complexd> vertices,
                                    std::vector<Moebiusd> generators, double offset) {
  for (const auto& v : vertices)
    if (!(std::abs(v) < 1)) throw ConstructionError("vertex outside the open disk");
  return SurfaceGroup(genus, std::move(vertices), std::move(generators), offset);
}

std::vector<CirclePointd> SurfaceGroup::boundary_points() const {
  std::vector<CirclePointd> out;
  out.reserve(2 * size());
  for (int i = 1; i <= size(); ++i) {
    out.push_back(P(i));
    out.push_back(Q(i));
  }
  return out;
}

std::optional<NamedPoint> SurfaceGroup::name_point(const CirclePointd& x, double tol) const {
  for (int i = 1; i <= size(); ++i) {
    if (coincident(x, P(i), tol)) return NamedPoint{BaseKind::P, i};
    if (coincident(x, Q(i), tol)) return NamedPoint{BaseKind::Q, i};
  }
  return std::nullopt;
}

Moebiusd SurfaceGroup::product(const std::vector<int>& letters) const {
  Moebiusd m;
  for (int l : letters) m = m * T(l);
  return m;
}

CirclePointd SurfaceGroup::evaluate(const GroupWord& w) const {
  CirclePointd x = point(w.base);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = T(*it).apply(x);
  return x;
}

GroupWord SurfaceGroup::reduce(const GroupWord& w) const {
  GroupWord out;
  out.base = {w.base.kind, wrap(w.base.index)};
  for (int raw : w.letters) {
    const int l = wrap(raw);
    if (!out.letters.empty() && out.letters.back() == sigma(l))
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  while (!out.letters.empty()) {
    const auto& img = base_images_[out.letters.back() - 1][slot_of(out.base)];
    if (!img) break;
    out.base = *img;
    out.letters.pop_back();
  }
  return out;
}

bool SurfaceGroup::search_word(const CirclePointd& target, int length, double tol,
                               GroupWord& out) const {
  if (length == 0) {
    const auto name = name_point(target, tol);
    if (!name) return false;
    out = GroupWord{{}, *name};
    return true;
  }
  for (int l = 1; l <= size(); ++l) {
    GroupWord inner;
    if (search_word(T(sigma(l)).apply(target), length - 1, tol, inner)) {
      out = prepend(l, inner);
      return true;
    }
  }
  return false;
}

GroupWord SurfaceGroup::canonical(const GroupWord& w, int max_length, double tol) const {
  const GroupWord r = reduce(w);
  const CirclePointd target = evaluate(w);
  const int limit = std::min<int>(static_cast<int>(r.letters.size()), max_length);
  for (int len = 0; len <= limit; ++len) {
    GroupWord found;
    if (search_word(target, len, tol, found)) return found;
  }
  return r;
}

std::vector<double> interior_angles(const SurfaceGroup& s) {
  std::vector<double> out;
  for (int i = 1; i <= s.size(); ++i) {
    const Moebiusd m = Moebiusd::to_origin(s.vertex(i));
    const Complexd next = m.apply(s.vertex(i + 1));
    const Complexd prev = m.apply(s.vertex(i - 1));
    out.push_back(wrap_angle(std::arg(prev) - std::arg(next)));
  }
  return out;
}

RelationReport verify_group_relations(const SurfaceGroup& s, double tol) {
  RelationReport rep;
  rep.tolerance = tol;
  auto record = [&](std::string name, double dev) {
    if (!(dev < tol) && rep.pass) {
      rep.pass = false;
      rep.first_failure = name;
    }
    rep.max_deviation = std::max(rep.max_deviation, dev);
    rep.checks.push_back({std::move(name), dev});
  };
  for (int i = 1; i <= s.size(); ++i) {
    const std::string is = std::to_string(i);
    record("T_{sigma(" + is + ")} T_" + is + " = Id",
           (s.T(s.sigma(i)) * s.T(i)).identity_deviation());
  }
  for (int i = 1; i <= s.size(); ++i) {
    const int r1 = s.rho(i), r2 = s.rho(r1), r3 = s.rho(r2);
    const std::string is = std::to_string(i);
    record("T_{rho^3(" + is + ")} T_{rho^2(" + is + ")} T_{rho(" + is + ")} T_" + is + " = Id",
           (s.T(r3) * s.T(r2) * s.T(r1) * s.T(i)).identity_deviation());
  }
  return rep;
}

GeometryReport verify_geometry(const SurfaceGroup& s, double tol) {
  GeometryReport rep;
  rep.tolerance = tol;
  const auto pts = s.boundary_points();
  double total = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double step = ccw_offset(pts[k], pts[(k + 1) % pts.size()]);
    if (!(step > tol)) rep.ordering_ok = false;
    total += step;
  }
  if (std::abs(total - kTwoPi<double>) > 1e-6) rep.ordering_ok = false;

  for (double a : interior_angles(s))
    rep.max_angle_deviation = std::max(rep.max_angle_deviation, std::abs(a - kPi / 2));
  rep.angles_ok = rep.max_angle_deviation <= tol;

  for (int i = 1; i <= s.size(); ++i) {
    const int sg = s.sigma(i);
    rep.max_endpoint_deviation =
        std::max({rep.max_endpoint_deviation,
                  circle_distance(s.T(i).apply(s.P(i)), s.Q(sg + 1)),
                  circle_distance(s.T(i).apply(s.Q(i + 1)), s.P(sg))});
  }
  rep.endpoints_ok = rep.max_endpoint_deviation <= tol;
  return rep;
}

PolygonHit geodesic_intersects_polygon(const SurfaceGroup& s, const CirclePointd& u,
                                       const CirclePointd& w, double tol) {
  if (coincident(u, w, tol)) throw DegenerateError("geodesic endpoints coincide");
  bool neg = false, pos = false, touch = false;
  for (const auto& v : s.vertices()) {
    const double d = geodesic_side(u, w, v);
    if (d < -tol) neg = true;
    else if (d > tol) pos = true;
    else touch = true;
  }
  if (neg && pos) return PolygonHit::inside;
  return touch ? PolygonHit::boundary : PolygonHit::outside;
}

double vertex_clearance(const SurfaceGroup& s, const CirclePointd& u, const CirclePointd& w) {
  double best = 1;
  for (const auto& v : s.vertices()) best = std::min(best, std::abs(geodesic_side(u, w, v)));
  return best;
}

int exit_side(const SurfaceGroup& s, const CirclePointd& u, const CirclePointd& w, double tol) {
  if (geodesic_intersects_polygon(s, u, w, tol) != PolygonHit::inside)
    throw DomainError("geodesic does not cross the polygon");
  const int n = s.size();
  std::vector<double> side(n);
  for (int k = 1; k <= n; ++k) {
    side[k - 1] = geodesic_side(u, w, s.vertex(k));
    if (std::abs(side[k - 1]) <= tol)
      throw DegenerateError("geodesic passes through vertex " + std::to_string(k));
  }
  for (int k = 1; k <= n; ++k)
    if (side[k - 1] < 0 && side[s.wrap(k + 1) - 1] > 0) return k;
  throw DegenerateError("no exit side found");
}

}  // namespace bsmaps
