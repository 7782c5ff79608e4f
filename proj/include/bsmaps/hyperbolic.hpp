#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "bsmaps/errors.hpp"

namespace bsmaps {

/// Global tolerance for point equality and identity checks.
inline constexpr double kEpsilon = 1e-9;

template <typename Scalar>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// Reduces an angle into [0, 2π).
template <typename Scalar>
Scalar wrap_angle(Scalar angle) {
  Scalar r = std::fmod(angle, kTwoPi<Scalar>);
  if (r < 0) r += kTwoPi<Scalar>;
  if (r >= kTwoPi<Scalar>) r = 0;
  return r;
}

/// A point of the unit circle.  The angle lies in [0, 2π) and value = exp(i·angle).
template <typename Scalar>
class CirclePoint {
 public:
  using Complex = std::complex<Scalar>;

  CirclePoint() = default;

  static CirclePoint from_angle(Scalar angle) {
    const Scalar a = wrap_angle(angle);
    return CirclePoint(a, std::polar(Scalar(1), a));
  }

  /// Radial projection of a nonzero complex number.
  static CirclePoint from_complex(const Complex& z) {
    const Scalar r = std::abs(z);
    if (!(r > 0)) throw DegenerateError("cannot project 0 onto the circle");
    return CirclePoint(wrap_angle(std::arg(z)), z / r);
  }

  Scalar angle() const { return angle_; }
  const Complex& value() const { return value_; }

 private:
  CirclePoint(Scalar angle, const Complex& value) : angle_(angle), value_(value) {}

  Scalar angle_ = 0;
  Complex value_{1, 0};
};

/// Counterclockwise angular offset from `from` to `to`, in [0, 2π).
template <typename Scalar>
Scalar ccw_offset(const CirclePoint<Scalar>& from, const CirclePoint<Scalar>& to) {
  return wrap_angle(to.angle() - from.angle());
}

/// Geodesic (arc-length) distance on the circle, in [0, π].
template <typename Scalar>
Scalar circle_distance(const CirclePoint<Scalar>& a, const CirclePoint<Scalar>& b) {
  const Scalar d = std::abs(a.angle() - b.angle());
  return std::min(d, kTwoPi<Scalar> - d);
}

template <typename Scalar>
bool coincident(const CirclePoint<Scalar>& a, const CirclePoint<Scalar>& b,
                Scalar tol = Scalar(kEpsilon)) {
  return circle_distance(a, b) <= tol;
}

enum class Orientation { counterclockwise, clockwise, degenerate };

/// counterclockwise iff b lies strictly on the counterclockwise arc from a to c.
template <typename Scalar>
Orientation ccw(const CirclePoint<Scalar>& a, const CirclePoint<Scalar>& b,
                const CirclePoint<Scalar>& c, Scalar tol = Scalar(kEpsilon)) {
  if (coincident(a, b, tol) || coincident(b, c, tol) || coincident(a, c, tol))
    return Orientation::degenerate;
  return ccw_offset(a, b) < ccw_offset(a, c) ? Orientation::counterclockwise
                                             : Orientation::clockwise;
}

/// Counterclockwise arc from start to end.  start = end is the single point.
template <typename Scalar>
struct Arc {
  using Point = CirclePoint<Scalar>;

  Point start;
  Point end;
  bool closed_left = true;
  bool closed_right = false;

  static Arc half_open(const Point& s, const Point& e) { return {s, e, true, false}; }
  static Arc closed(const Point& s, const Point& e) { return {s, e, true, true}; }
  static Arc open(const Point& s, const Point& e) { return {s, e, false, false}; }

  bool degenerate(Scalar tol = Scalar(kEpsilon)) const { return coincident(start, end, tol); }

  Scalar length(Scalar tol = Scalar(kEpsilon)) const {
    return degenerate(tol) ? Scalar(0) : ccw_offset(start, end);
  }

  /// Endpoint hits within tol are resolved by the closure flags.
  bool contains(const Point& x, Scalar tol = Scalar(kEpsilon)) const {
    if (degenerate(tol)) return (closed_left || closed_right) && coincident(x, start, tol);
    if (coincident(x, start, tol)) return closed_left;
    if (coincident(x, end, tol)) return closed_right;
    return ccw_offset(start, x) < ccw_offset(start, end);
  }

  /// Distance from x to the closed arc.
  Scalar distance(const Point& x, Scalar tol = Scalar(kEpsilon)) const {
    if (!degenerate(tol) && ccw_offset(start, x) <= ccw_offset(start, end)) return 0;
    return std::min(circle_distance(x, start), circle_distance(x, end));
  }

  /// Distance from x to the nearer endpoint.
  Scalar endpoint_distance(const Point& x) const {
    return std::min(circle_distance(x, start), circle_distance(x, end));
  }
};

/// z ↦ (a·z + conj(c)) / (c·z + conj(a)), with |a|² − |c|² = 1.
template <typename Scalar>
class Moebius {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;
  using Point = CirclePoint<Scalar>;

  Moebius() = default;
  Moebius(const Complex& a, const Complex& c) : a_(a), c_(c) {}

  static Moebius identity() { return Moebius(); }

  /// Disk automorphism sending z0 to 0, fixing the direction at z0.
  static Moebius to_origin(const Complex& z0) {
    return Moebius(Complex(1), -std::conj(z0)).normalized();
  }

  const Complex& a() const { return a_; }
  const Complex& c() const { return c_; }

  Scalar determinant() const { return std::norm(a_) - std::norm(c_); }
  Scalar trace() const { return Scalar(2) * a_.real(); }

  Matrix matrix() const {
    Matrix m;
    m << a_, std::conj(c_), c_, std::conj(a_);
    return m;
  }

  Moebius normalized() const {
    const Scalar det = determinant();
    if (!(det > 0)) throw NotDiskAutomorphismError("|a|^2 - |c|^2 is not positive");
    const Scalar s = std::sqrt(det);
    return Moebius(a_ / s, c_ / s);
  }

  Moebius inverse() const { return Moebius(std::conj(a_), -c_); }

  Complex apply(const Complex& z, Scalar tol = Scalar(kEpsilon)) const {
    const Complex den = c_ * z + std::conj(a_);
    if (std::abs(den) < tol) throw SingularityError("denominator vanishes");
    return (a_ * z + std::conj(c_)) / den;
  }

  Point apply(const Point& x, Scalar tol = Scalar(kEpsilon)) const {
    const Complex z = apply(x.value(), tol);
    if (std::abs(std::abs(z) - Scalar(1)) > std::sqrt(tol))
      throw SingularityError("image left the unit circle");
    return Point::from_complex(z);
  }

  /// |m'(z)|.
  Scalar derivative_modulus(const Complex& z) const {
    return determinant() / std::norm(c_ * z + std::conj(a_));
  }

  /// min(‖M − I‖, ‖M + I‖) in operator norm; both matrices represent the identity.
  Scalar identity_deviation() const {
    const Matrix m = matrix();
    const Matrix id = Matrix::Identity();
    Eigen::JacobiSVD<Matrix> minus(m - id), plus(m + id);
    return std::min(minus.singularValues()(0), plus.singularValues()(0));
  }

  /// Composition lhs ∘ rhs, renormalized.
  friend Moebius operator*(const Moebius& lhs, const Moebius& rhs) {
    const Complex a = lhs.a_ * rhs.a_ + std::conj(lhs.c_) * rhs.c_;
    const Complex c = lhs.c_ * rhs.a_ + std::conj(lhs.a_) * rhs.c_;
    return Moebius(a, c).normalized();
  }

 private:
  Complex a_{1, 0};
  Complex c_{0, 0};
};

/// The unique disk automorphism with z[k] ↦ w[k].
template <typename Scalar>
Moebius<Scalar> from_three_points(const std::complex<Scalar> (&z)[3],
                                  const std::complex<Scalar> (&w)[3],
                                  Scalar tol = Scalar(kEpsilon)) {
  using Complex = std::complex<Scalar>;
  using Matrix = typename Moebius<Scalar>::Matrix;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(z[i] - z[j]) <= tol || std::abs(w[i] - w[j]) <= tol)
        throw DegenerateError("three-point data is not pairwise distinct");

  // Sends p[0] → 0, p[1] → ∞, p[2] → 1.
  auto standard = [](const Complex (&p)[3]) {
    Matrix m;
    m << p[2] - p[1], -p[0] * (p[2] - p[1]), p[2] - p[0], -p[1] * (p[2] - p[0]);
    return m;
  };
  Matrix m = standard(w).inverse() * standard(z);
  m /= std::sqrt(m.determinant());

  const Scalar scale = std::max(Scalar(1), m.cwiseAbs().maxCoeff());
  if (std::abs(m(1, 1) - std::conj(m(0, 0))) > tol * scale ||
      std::abs(m(0, 1) - std::conj(m(1, 0))) > tol * scale)
    throw NotDiskAutomorphismError("three-point data does not preserve the disk");

  const Moebius<Scalar> result = Moebius<Scalar>(m(0, 0), m(1, 0)).normalized();
  for (int k = 0; k < 3; ++k)
    if (std::abs(result.apply(z[k]) - w[k]) > std::sqrt(tol))
      throw NotDiskAutomorphismError("interpolated map misses its data");
  return result;
}

/// (attracting, repelling) fixed points of a hyperbolic map.
template <typename Scalar>
std::pair<CirclePoint<Scalar>, CirclePoint<Scalar>> fixed_points_on_circle(
    const Moebius<Scalar>& map, Scalar tol = Scalar(kEpsilon)) {
  using Complex = std::complex<Scalar>;
  using Matrix = typename Moebius<Scalar>::Matrix;
  const Moebius<Scalar> m = map.normalized();
  if (!(std::abs(m.trace()) > Scalar(2) + tol))
    throw NotHyperbolicError("no two circle fixed points: trace magnitude <= 2");

  Eigen::ComplexEigenSolver<Matrix> solver(m.matrix());
  CirclePoint<Scalar> points[2];
  Scalar slopes[2];
  for (int k = 0; k < 2; ++k) {
    const auto v = solver.eigenvectors().col(k);
    if (std::abs(v(1)) <= tol) throw NotHyperbolicError("fixed point at infinity");
    const Complex z = v(0) / v(1);
    points[k] = CirclePoint<Scalar>::from_complex(z);
    slopes[k] = m.derivative_modulus(points[k].value());
    if (!coincident(m.apply(points[k]), points[k], std::sqrt(tol)))
      throw NotHyperbolicError("eigenvector is not a fixed point");
  }
  if (slopes[0] < slopes[1]) return {points[0], points[1]};
  return {points[1], points[0]};
}

/// (backward, forward) ideal endpoints of the geodesic through z1 toward z2.
template <typename Scalar>
std::pair<CirclePoint<Scalar>, CirclePoint<Scalar>> geodesic_endpoints(
    const std::complex<Scalar>& z1, const std::complex<Scalar>& z2,
    Scalar tol = Scalar(kEpsilon)) {
  if (!(std::abs(z1) < 1) || !(std::abs(z2) < 1))
    throw DegenerateError("geodesic endpoints need points inside the disk");
  if (std::abs(z1 - z2) <= tol) throw DegenerateError("coincident disk points");
  const Moebius<Scalar> m = Moebius<Scalar>::to_origin(z1);
  const std::complex<Scalar> d = m.apply(z2);
  const CirclePoint<Scalar> forward = CirclePoint<Scalar>::from_complex(d);
  const CirclePoint<Scalar> backward = CirclePoint<Scalar>::from_complex(-d);
  const Moebius<Scalar> back = m.inverse();
  return {back.apply(backward), back.apply(forward)};
}

/// Signed tanh of the hyperbolic distance from z to the geodesic u → w.
/// Negative on the side bounded by the counterclockwise arc from u to w.
template <typename Scalar>
Scalar geodesic_side(const CirclePoint<Scalar>& u, const CirclePoint<Scalar>& w,
                     const std::complex<Scalar>& z) {
  const Scalar half = ccw_offset(u, w) / 2;
  const std::complex<Scalar> h =
      std::polar(Scalar(1), half) * (z - u.value()) / (z - w.value());
  return h.real() / std::abs(h);
}

using CirclePointd = CirclePoint<double>;
using Arcd = Arc<double>;
using Moebiusd = Moebius<double>;
using Complexd = std::complex<double>;

}  // namespace bsmaps
