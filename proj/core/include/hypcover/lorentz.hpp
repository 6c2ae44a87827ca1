#pragma once

// Lorentzian linear algebra of the projective (Beltrami-Cayley-Klein) model of
// hyperbolic n-space, n = 2 or 3. Vectors live in R^{n+1} with the form
//   <x, y> = -x0*y0 + x1*y1 + ... + xn*yn.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>

#include "hypcover/error.hpp"

namespace hypcover::lorentz {

/// |<x,x>| <= kIdealTolerance * |x|^2 (Euclidean norm) classifies a point as ideal.
inline constexpr double kIdealTolerance = 1e-10;
/// Cosh arguments this far below 1 are treated as roundoff and clamped.
inline constexpr double kAcoshSlack = 1e-12;

struct PointTag {};
struct FormTag {};

/// Homogeneous coordinate vector; Tag distinguishes points from hyperplane forms.
template <std::size_t Dim, class Tag>
class Homogeneous {
  static_assert(Dim == 2 || Dim == 3, "only the hyperbolic plane and 3-space are supported");

 public:
  static constexpr std::size_t kSize = Dim + 1;
  using Coords = std::array<double, kSize>;

  explicit Homogeneous(const Coords& c) : c_(c) {
    for (double v : c_) {
      if (!std::isfinite(v)) throw Error(Errc::DomainError, "non-finite homogeneous coordinate");
    }
    bool all_zero = true;
    for (double v : c_) all_zero = all_zero && v == 0.0;
    if (all_zero) throw Error(Errc::ZeroVector, "homogeneous vector must be nonzero");
  }

  template <typename... T>
    requires(sizeof...(T) == kSize && (std::is_arithmetic_v<T> && ...))
  explicit Homogeneous(T... c) : Homogeneous(Coords{static_cast<double>(c)...}) {}

  const Coords& coords() const noexcept { return c_; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }

  Homogeneous scaled(double s) const {
    Coords r = c_;
    for (double& v : r) v *= s;
    return Homogeneous(r);
  }

  /// Representative with x0 = 1. Requires x0 != 0.
  Homogeneous chart() const {
    if (c_[0] == 0.0) throw Error(Errc::DomainError, "point at infinity of the affine chart");
    return scaled(1.0 / c_[0]);
  }

  double euclidean_norm() const noexcept {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return std::sqrt(s);
  }

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;

 private:
  Coords c_;
};

template <std::size_t Dim>
using ProjPoint = Homogeneous<Dim, PointTag>;
template <std::size_t Dim>
using ProjForm = Homogeneous<Dim, FormTag>;

using ProjPoint4 = ProjPoint<3>;
using ProjForm4 = ProjForm<3>;
using ProjPoint3 = ProjPoint<2>;
using ProjForm3 = ProjForm<2>;

enum class PointClass { Proper, Ideal, Outer };

inline const char* to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Proper: return "Proper";
    case PointClass::Ideal: return "Ideal";
    case PointClass::Outer: return "Outer";
  }
  return "?";
}

template <std::size_t Dim, class TagA, class TagB>
double bilinear(const Homogeneous<Dim, TagA>& x, const Homogeneous<Dim, TagB>& y) noexcept {
  double s = -x[0] * y[0];
  for (std::size_t i = 1; i <= Dim; ++i) s += x[i] * y[i];
  return s;
}

template <std::size_t Dim>
PointClass classify(const ProjPoint<Dim>& x, double tol = kIdealTolerance) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "classification tolerance must be positive");
  const double q = bilinear(x, x);
  const double n = x.euclidean_norm();
  if (std::abs(q) <= tol * n * n) return PointClass::Ideal;
  return q < 0.0 ? PointClass::Proper : PointClass::Outer;
}

template <std::size_t Dim>
bool is_proper(const ProjPoint<Dim>& x) {
  return classify(x) == PointClass::Proper;
}

namespace detail {

template <std::size_t Dim>
void require_proper(const ProjPoint<Dim>& x, const char* who) {
  if (!is_proper(x)) throw Error(Errc::NonProperPoint, std::string(who) + ": point is not proper");
}

}  // namespace detail

/// Hyperbolic distance between two proper points.
///
/// The cosh argument -<x,y>/sqrt(<x,x><y,y>) is checked against 1; the value
/// itself is recovered from sinh^2 d = (|q-p|^2 - |p ^ (q-p)|^2) / ((1-|p|^2)(1-|q|^2))
/// in the affine chart, which keeps full relative precision for short segments.
template <std::size_t Dim>
double distance(const ProjPoint<Dim>& x, const ProjPoint<Dim>& y) {
  detail::require_proper(x, "distance");
  detail::require_proper(y, "distance");
  const auto p = x.chart();
  const auto q = y.chart();

  const double pp = bilinear(p, p);
  const double qq = bilinear(q, q);
  const double cosh_d = -bilinear(p, q) / std::sqrt(pp * qq);
  if (cosh_d < 1.0 - kAcoshSlack) {
    throw Error(Errc::DomainError, "cosh of a distance below 1");
  }

  std::array<double, Dim> delta{};
  double delta2 = 0.0;
  for (std::size_t i = 0; i < Dim; ++i) {
    delta[i] = q[i + 1] - p[i + 1];
    delta2 += delta[i] * delta[i];
  }
  double wedge2 = 0.0;
  for (std::size_t i = 0; i < Dim; ++i) {
    for (std::size_t j = i + 1; j < Dim; ++j) {
      const double m = p[i + 1] * delta[j] - p[j + 1] * delta[i];
      wedge2 += m * m;
    }
  }
  const double sinh2 = (delta2 - wedge2) / (pp * qq);
  return std::asinh(std::sqrt(std::max(0.0, sinh2)));
}

/// Distance from a proper point to a hyperplane that meets the model.
template <std::size_t Dim>
double point_plane_distance(const ProjPoint<Dim>& x, const ProjForm<Dim>& a) {
  detail::require_proper(x, "point_plane_distance");
  const double aa = bilinear(a, a);
  if (!(aa > 0.0)) throw Error(Errc::DegeneratePlane, "plane does not meet the model");
  const double xx = bilinear(x, x);
  return std::asinh(std::abs(bilinear(x, a)) / std::sqrt(-xx * aa));
}

/// Polar hyperplane: <y, polar(x)> = <y, x> for every y.
template <std::size_t Dim>
ProjForm<Dim> polar(const ProjPoint<Dim>& x) {
  return ProjForm<Dim>(x.coords());
}

/// Pole of a hyperplane (inverse of `polar`).
template <std::size_t Dim>
ProjPoint<Dim> pole(const ProjForm<Dim>& a) {
  return ProjPoint<Dim>(a.coords());
}

template <std::size_t Dim>
bool incident(const ProjPoint<Dim>& x, const ProjForm<Dim>& a, double tol = 1e-10) {
  return std::abs(bilinear(x, a)) <= tol * x.euclidean_norm() * a.euclidean_norm();
}

/// s*x + t*y as a point.
template <std::size_t Dim, class TagA, class TagB>
ProjPoint<Dim> combine(double s, const Homogeneous<Dim, TagA>& x, double t,
                       const Homogeneous<Dim, TagB>& y) {
  typename ProjPoint<Dim>::Coords r{};
  for (std::size_t i = 0; i <= Dim; ++i) r[i] = s * x[i] + t * y[i];
  return ProjPoint<Dim>(r);
}

/// Intersection of line xy with hyperplane a: x<y,a> - y<x,a>.
template <std::size_t Dim>
ProjPoint<Dim> meet(const ProjPoint<Dim>& x, const ProjPoint<Dim>& y, const ProjForm<Dim>& a) {
  return combine(bilinear(y, a), x, -bilinear(x, a), y);
}

/// Representative with |<x,x>| = 1 (timelike vectors keep their sheet).
template <std::size_t Dim, class Tag>
Homogeneous<Dim, Tag> unit(const Homogeneous<Dim, Tag>& x) {
  const double q = bilinear(x, x);
  if (q == 0.0) throw Error(Errc::DomainError, "cannot normalize a null vector");
  return x.scaled(1.0 / std::sqrt(std::abs(q)));
}

template <std::size_t Dim>
bool projectively_equal(const ProjPoint<Dim>& p, const ProjPoint<Dim>& q, double tol = 1e-14) {
  // all 2x2 minors vanish
  const double scale = p.euclidean_norm() * q.euclidean_norm();
  for (std::size_t i = 0; i <= Dim; ++i) {
    for (std::size_t j = i + 1; j <= Dim; ++j) {
      if (std::abs(p[i] * q[j] - p[j] * q[i]) > tol * scale) return false;
    }
  }
  return true;
}

/// Point of segment pq at affine-chart parameter t: t = 0 gives p, t = 1 gives q.
template <std::size_t Dim>
ProjPoint<Dim> segment_point(const ProjPoint<Dim>& p, const ProjPoint<Dim>& q, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::InvalidArgument, "segment parameter outside [0,1]");
  if (projectively_equal(p, q)) throw Error(Errc::InvalidArgument, "segment endpoints coincide");
  const auto pc = p.chart();
  const auto qc = q.chart();
  return combine(1.0 - t, pc, t, qc);
}

}  // namespace hypcover::lorentz
