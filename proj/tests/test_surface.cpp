#include <doctest.h>

#include <numbers>

#include "bsmaps/surface.hpp"

using namespace bsmaps;

namespace {

double hyperbolic_distance(Complexd z, Complexd w) {
  return 2 * std::atanh(std::abs((z - w) / (1.0 - std::conj(w) * z)));
}

// Euclidean center of the circle orthogonal to S¹ through z1 and z2.
Complexd orthogonal_center(Complexd z1, Complexd z2) {
  const double a11 = 2 * z1.real(), a12 = 2 * z1.imag(), b1 = std::norm(z1) + 1;
  const double a21 = 2 * z2.real(), a22 = 2 * z2.imag(), b2 = std::norm(z2) + 1;
  const double det = a11 * a22 - a12 * a21;
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

}  // namespace

TEST_CASE("side pairing and shift tables at genus 2") {
  // σ(i) = 4g − i for odd i, 2 − i for even i, reduced into 1..12
  const std::vector<int> sigma_g2 = {7, 12, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2};
  const std::vector<int> tau_g2 = {7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6};
  for (int i = 1; i <= 12; ++i) {
    CHECK(sigma(i, 2) == sigma_g2[i - 1]);
    CHECK(tau(i, 2) == tau_g2[i - 1]);
    CHECK(rho(i, 2) == wrap_index(sigma_g2[i - 1] + 1, 12));
  }
}

TEST_CASE("sigma is an involution without fixed points for g = 2..6") {
  for (int g = 2; g <= 6; ++g) {
    const int n = side_count(g);
    CHECK(n == 8 * g - 4);
    for (int i = 1; i <= n; ++i) {
      CHECK(sigma(sigma(i, g), g) == i);
      CHECK(sigma(i, g) != i);
      CHECK(tau(tau(i, g), g) == i);  // τ shifts by half of N
    }
  }
}

TEST_CASE("index and genus errors") {
  CHECK_THROWS_AS(side_count(1), IndexError);
  CHECK_THROWS_AS(sigma(0, 2), IndexError);
  CHECK_THROWS_AS(sigma(13, 2), IndexError);
  CHECK_THROWS_AS(SurfaceGroup::regular(1), IndexError);
}

TEST_CASE("regular polygon matches closed-form geometry") {
  for (int g = 2; g <= 4; ++g) {
    const SurfaceGroup s = SurfaceGroup::regular(g);
    const int n = s.size();
    // regular n-gon with right angles: cosh(side / 2) = cos(π/n) / sin(π/4)
    const double side = 2 * std::acosh(std::cos(std::numbers::pi / n) / std::sin(std::numbers::pi / 4));
    for (int i = 1; i <= n; ++i) {
      CHECK(hyperbolic_distance(s.vertex(i), s.vertex(i + 1)) == doctest::Approx(side).epsilon(1e-10));
      // adjacent side circles meet at right angles: their radii at the vertex are perpendicular
      const Complexd c1 = orthogonal_center(s.vertex(i - 1), s.vertex(i));
      const Complexd c2 = orthogonal_center(s.vertex(i), s.vertex(i + 1));
      const Complexd r1 = s.vertex(i) - c1, r2 = s.vertex(i) - c2;
      CHECK(std::abs((r1 * std::conj(r2)).real()) / (std::abs(r1) * std::abs(r2)) < 1e-9);
    }
  }
  const SurfaceGroup s2 = SurfaceGroup::regular(2);
  CHECK(std::abs(s2.vertex(1)) == doctest::Approx(0.7598356856515924).epsilon(1e-12));
  CHECK(std::arg(s2.vertex(1)) == doctest::Approx(std::numbers::pi / 12));
}

TEST_CASE("group relations and geometry hold for g = 2, 3, 4") {
  for (int g = 2; g <= 4; ++g) {
    CAPTURE(g);
    const SurfaceGroup s = SurfaceGroup::regular(g);
    const RelationReport rel = verify_group_relations(s);
    CHECK(rel.pass);
    CHECK(rel.max_deviation < kEpsilon);
    const GeometryReport geo = verify_geometry(s);
    CHECK(geo.pass());
    for (double a : interior_angles(s)) CHECK(a == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
    // direct products, outside the library's relation checker
    for (int i = 1; i <= s.size(); ++i) {
      CHECK((s.T(s.sigma(i)) * s.T(i)).identity_deviation() < kEpsilon);
      const int r1 = s.rho(i), r2 = s.rho(r1), r3 = s.rho(r2);
      CHECK((s.T(r3) * s.T(r2) * s.T(r1) * s.T(i)).identity_deviation() < kEpsilon);
    }
  }
}

TEST_CASE("boundary order P_1, Q_1, P_2, Q_2, ... counterclockwise") {
  for (int g = 2; g <= 4; ++g) {
    const SurfaceGroup s = SurfaceGroup::regular(g);
    const auto pts = s.boundary_points();
    REQUIRE(pts.size() == static_cast<std::size_t>(2 * s.size()));
    double prev = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const double off = ccw_offset(pts[0], pts[k]);
      CHECK(off > prev);
      prev = off;
    }
    for (int i = 1; i <= s.size(); ++i) {
      CHECK(coincident(pts[2 * (i - 1)], s.P(i)));
      CHECK(coincident(pts[2 * (i - 1) + 1], s.Q(i)));
    }
  }
}

TEST_CASE("side i lies on the geodesic from P_i to Q_{i+1}") {
  const SurfaceGroup s = SurfaceGroup::regular(3);
  for (int i = 1; i <= s.size(); ++i) {
    CHECK(std::abs(geodesic_side(s.P(i), s.Q(i + 1), s.vertex(i))) < 1e-9);
    CHECK(std::abs(geodesic_side(s.P(i), s.Q(i + 1), s.vertex(i + 1))) < 1e-9);
  }
}

TEST_CASE("T_i glues side i to side sigma(i) and moves the polygon across it") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  for (int i = 1; i <= s.size(); ++i) {
    const int j = s.sigma(i);
    CHECK(std::abs(s.T(i).apply(s.vertex(i)) - s.vertex(j + 1)) < 1e-9);
    CHECK(std::abs(s.T(i).apply(s.vertex(i + 1)) - s.vertex(j)) < 1e-9);
    CHECK(coincident(s.T(i).apply(s.P(i)), s.Q(j + 1)));
    CHECK(coincident(s.T(i).apply(s.Q(i + 1)), s.P(j)));
    // origin and its image lie on opposite sides of side σ(i)
    const double here = geodesic_side(s.P(j), s.Q(j + 1), Complexd(0));
    const double there = geodesic_side(s.P(j), s.Q(j + 1), s.T(i).apply(Complexd(0)));
    CHECK(here * there < 0);
  }
}

TEST_CASE("diameters exit through the side they point at") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  const int n = s.size();
  for (int k = 1; k <= n; ++k) {
    // side k spans the vertex angles 2π(k−1)/n + π/n .. 2πk/n + π/n
    const double mid = kTwoPi<double> * k / n;
    for (double d : {-0.2, 0.0, 0.2}) {
      const double theta = mid + d * kTwoPi<double> / n;
      const auto u = CirclePointd::from_angle(theta + std::numbers::pi);
      const auto w = CirclePointd::from_angle(theta);
      CHECK(geodesic_intersects_polygon(s, u, w) == PolygonHit::inside);
      CHECK(exit_side(s, u, w) == k);
    }
  }
  // a geodesic hugging the circle misses the polygon
  const auto a = CirclePointd::from_angle(0.3), b = CirclePointd::from_angle(0.35);
  CHECK(geodesic_intersects_polygon(s, a, b) == PolygonHit::outside);
  CHECK_THROWS_AS(exit_side(s, a, b), DomainError);
  // the extension of a side only touches the polygon
  CHECK(geodesic_intersects_polygon(s, s.P(1), s.Q(2)) == PolygonHit::boundary);
}

TEST_CASE("word reduction and canonical forms") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  const GroupWord cancel = GroupWord::parse("T7T1P3");  // σ(1) = 7
  CHECK(s.reduce(cancel).to_string() == "P3");
  const GroupWord w = GroupWord::parse("T10T6T3P1");
  const GroupWord c = s.canonical(w);
  CHECK(c.to_string() == "T3T10P1");
  CHECK(coincident(s.evaluate(w), s.evaluate(c)));
  CHECK(s.canonical(GroupWord::parse("T2P1")).to_string() == "P1");  // P_1 is fixed by T_2
  CHECK(GroupWord::parse("T_6 T_3 P_1").to_string() == "T6T3P1");
  CHECK_THROWS_AS(GroupWord::parse("T6X1"), ParseError);
  const auto named = s.name_point(s.Q(5));
  REQUIRE(named.has_value());
  CHECK(named->to_string() == "Q5");
  CHECK_FALSE(s.name_point(CirclePointd::from_angle(s.P(1).angle() + 1e-3)).has_value());
}

TEST_CASE("from_data rejects a perturbed generator") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  auto gens = s.generators();
  gens[4] = Moebiusd(gens[4].a() * 1.001, gens[4].c());
  CHECK_THROWS_AS(SurfaceGroup::from_data(2, s.vertices(), gens, s.offset()), ConstructionError);
  CHECK_NOTHROW(SurfaceGroup::from_data(2, s.vertices(), s.generators(), s.offset()));
  // the unchecked path accepts it and the checker names the failure
  const SurfaceGroup bad = SurfaceGroup::assemble(2, s.vertices(), gens, s.offset());
  const RelationReport rel = verify_group_relations(bad);
  CHECK_FALSE(rel.pass);
  CHECK(rel.first_failure.find("T_") != std::string::npos);
}
