#include <doctest.h>

#include <random>

#include "bsmaps/hyperbolic.hpp"

using namespace bsmaps;

namespace {

// Oracle: the textbook Blaschke form e^{iθ}(z − a)/(1 − ā z).
Complexd blaschke(double theta, Complexd a, Complexd z) {
  return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
}

Complexd random_disk_point(std::mt19937_64& rng, double max_radius = 0.9) {
  std::uniform_real_distribution<double> r(0, max_radius), t(0, kTwoPi<double>);
  return std::polar(r(rng), t(rng));
}

// Oracle: the circle orthogonal to S¹ through z1 and z2 meets S¹ at c/|c|·e^{±iα}, cos α = 1/|c|.
std::pair<Complexd, Complexd> orthogonal_circle_endpoints(Complexd z1, Complexd z2) {
  // 2 Re(z c̄) = |z|² + 1 for z = z1, z2
  const double a11 = 2 * z1.real(), a12 = 2 * z1.imag(), b1 = std::norm(z1) + 1;
  const double a21 = 2 * z2.real(), a22 = 2 * z2.imag(), b2 = std::norm(z2) + 1;
  const double det = a11 * a22 - a12 * a21;
  const Complexd c((b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det);
  const double alpha = std::acos(1 / std::abs(c));
  const Complexd dir = c / std::abs(c);
  return {dir * std::polar(1.0, alpha), dir * std::polar(1.0, -alpha)};
}

}  // namespace

TEST_CASE("angles wrap into [0, 2pi)") {
  CHECK(wrap_angle(-0.5) == doctest::Approx(kTwoPi<double> - 0.5));
  CHECK(wrap_angle(kTwoPi<double>) == 0.0);
  CHECK(wrap_angle(3 * kTwoPi<double> + 1) == doctest::Approx(1.0));
  const auto a = CirclePointd::from_angle(0.1), b = CirclePointd::from_angle(kTwoPi<double> - 0.1);
  CHECK(circle_distance(a, b) == doctest::Approx(0.2));
  CHECK(ccw_offset(b, a) == doctest::Approx(0.2));
  CHECK(ccw_offset(a, b) == doctest::Approx(kTwoPi<double> - 0.2));
}

TEST_CASE("half-open arcs include the start only, across the cut too") {
  const auto s = CirclePointd::from_angle(6.0), e = CirclePointd::from_angle(0.5);
  const Arcd arc = Arcd::half_open(s, e);
  CHECK(arc.contains(s));
  CHECK_FALSE(arc.contains(e));
  CHECK(arc.contains(CirclePointd::from_angle(0.1)));
  CHECK(arc.contains(CirclePointd::from_angle(6.2)));
  CHECK_FALSE(arc.contains(CirclePointd::from_angle(3.0)));
  CHECK(arc.length() == doctest::Approx(0.5 + kTwoPi<double> - 6.0));
  CHECK(Arcd::closed(s, e).contains(e));
  CHECK_FALSE(Arcd::open(s, e).contains(s));
}

TEST_CASE("ccw orientation of three circle points") {
  const auto a = CirclePointd::from_angle(0), b = CirclePointd::from_angle(1),
             c = CirclePointd::from_angle(2);
  CHECK(ccw(a, b, c) == Orientation::counterclockwise);
  CHECK(ccw(a, c, b) == Orientation::clockwise);
  CHECK(ccw(a, a, b) == Orientation::degenerate);
}

TEST_CASE("composition and inverse agree with the Blaschke oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t(0, kTwoPi<double>);
  for (int n = 0; n < 200; ++n) {
    const double th1 = t(rng), th2 = t(rng);
    const Complexd a1 = random_disk_point(rng), a2 = random_disk_point(rng);
    // e^{iθ}(z − a)/(1 − āz) in the (a, c) normal form
    const Moebiusd m1(std::polar(1.0, th1 / 2), -std::conj(a1) * std::polar(1.0, -th1 / 2));
    const Moebiusd m2(std::polar(1.0, th2 / 2), -std::conj(a2) * std::polar(1.0, -th2 / 2));
    const Complexd z = random_disk_point(rng);
    CHECK(std::abs(m1.apply(z) - blaschke(th1, a1, z)) < 1e-12);
    CHECK(std::abs((m1 * m2).apply(z) - blaschke(th1, a1, blaschke(th2, a2, z))) < 1e-12);
    CHECK(std::abs(m1.inverse().apply(m1.apply(z)) - z) < 1e-12);
    CHECK((m1 * m1.inverse()).identity_deviation() < 1e-12);
    CHECK((m1 * m2).determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("three-point interpolation recovers a disk automorphism") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> t(0, kTwoPi<double>);
  for (int n = 0; n < 200; ++n) {
    const double th = t(rng);
    const Complexd a = random_disk_point(rng);
    Complexd z[3], w[3];
    for (int k = 0; k < 3; ++k) {
      z[k] = std::polar(1.0, t(rng));
      w[k] = blaschke(th, a, z[k]);
    }
    const Moebiusd m = from_three_points(z, w);
    for (int k = 0; k < 5; ++k) {
      const Complexd x = random_disk_point(rng, 0.99);
      CHECK(std::abs(m.apply(x) - blaschke(th, a, x)) < 1e-9);
    }
  }
}

TEST_CASE("three-point interpolation rejects bad data") {
  const Complexd z[3] = {1.0, Complexd(0, 1), -1.0};
  const Complexd dup[3] = {1.0, 1.0, -1.0};
  CHECK_THROWS_AS(from_three_points(dup, z), DegenerateError);
  // orientation reversing data is not a disk automorphism
  const Complexd rev[3] = {-1.0, Complexd(0, 1), 1.0};
  CHECK_THROWS_AS(from_three_points(z, rev), NotDiskAutomorphismError);
}

TEST_CASE("fixed points match the quadratic oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> len(0.2, 4), t(0, kTwoPi<double>);
  for (int n = 0; n < 200; ++n) {
    // translation of length l along a diameter, conjugated by a random map
    const double l = len(rng), phi = t(rng);
    const Moebiusd shift(std::cosh(l / 2), std::sinh(l / 2) * std::polar(1.0, phi));
    const Moebiusd conj = Moebiusd::to_origin(random_disk_point(rng));
    const Moebiusd m = conj.inverse() * shift * conj;
    // c z² + (ā − a) z − c̄ = 0
    const Complexd qa = m.c(), qb = std::conj(m.a()) - m.a(), qc = -std::conj(m.c());
    const Complexd disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    Complexd r1 = (-qb + disc) / (2.0 * qa), r2 = (-qb - disc) / (2.0 * qa);
    if (m.derivative_modulus(r1) > m.derivative_modulus(r2)) std::swap(r1, r2);
    const auto [attr, rep] = fixed_points_on_circle(m);
    CHECK(std::abs(attr.value() - r1) < 1e-9);
    CHECK(std::abs(rep.value() - r2) < 1e-9);
    CHECK(m.derivative_modulus(attr.value()) == doctest::Approx(std::exp(-l)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(fixed_points_on_circle(Moebiusd(std::polar(1.0, 0.3), 0.0)), NotHyperbolicError);
}

TEST_CASE("geodesic endpoints match the orthogonal-circle oracle") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 500; ++n) {
    const Complexd z1 = random_disk_point(rng), z2 = random_disk_point(rng);
    // skip near-diameters where the oracle circle degenerates
    if (std::abs((z1 * std::conj(z2)).imag()) < 1e-3) continue;
    const auto [back, fwd] = geodesic_endpoints(z1, z2);
    const auto [e1, e2] = orthogonal_circle_endpoints(z1, z2);
    const bool same = std::abs(back.value() - e1) < 1e-9 && std::abs(fwd.value() - e2) < 1e-9;
    const bool swapped = std::abs(back.value() - e2) < 1e-9 && std::abs(fwd.value() - e1) < 1e-9;
    CHECK((same || swapped));
    // z2 lies between z1 and the forward endpoint
    CHECK(std::abs(fwd.value() - z2) < std::abs(fwd.value() - z1));
  }
  CHECK_THROWS_AS(geodesic_endpoints(Complexd(0.1), Complexd(0.1)), DegenerateError);
  CHECK_THROWS_AS(geodesic_endpoints(Complexd(1.5), Complexd(0.1)), DegenerateError);
}

TEST_CASE("geodesic side is negative on the counterclockwise arc") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t(0, kTwoPi<double>), gap(0.2, 6.0);
  for (int n = 0; n < 500; ++n) {
    const double a = t(rng), d = gap(rng);
    const auto u = CirclePointd::from_angle(a), w = CirclePointd::from_angle(a + d);
    CHECK(geodesic_side(u, w, std::polar(0.999, a + d / 2)) < 0);
    CHECK(geodesic_side(u, w, std::polar(0.999, a + d + (kTwoPi<double> - d) / 2)) > 0);
  }
  // the diameter from 1 to −1 passes through 0
  CHECK(std::abs(geodesic_side(CirclePointd::from_angle(0), CirclePointd::from_angle(3.141592653589793),
                               Complexd(0.3, 0))) < 1e-12);
}

TEST_CASE("apply rejects the pole and non-automorphisms") {
  const Moebiusd m(2.0, 1.0);  // pole at −ā/c = −2 after normalization
  const Moebiusd n = m.normalized();
  const Complexd pole = -std::conj(n.a()) / n.c();
  CHECK_THROWS_AS(n.apply(pole), SingularityError);
  CHECK_THROWS_AS(Moebiusd(1.0, 2.0).normalized(), NotDiskAutomorphismError);
}
