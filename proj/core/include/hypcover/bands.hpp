#pragma once

// Intersections of segments with hyperball (or hypercycle) bands.
//
// For P(t) = p + t (q - p) on a chart-normalized segment and a plane form a,
// dist(P, a) <= h  <=>  <P,a>^2 + sinh^2(h) <a,a> <P,P> <= 0,
// which is a quadratic inequality in t and is solved in closed form.
//
// The root finding is templated on the scalar so that badly conditioned
// configurations (vertices a hair away from the ideal boundary) can run it in
// extended precision.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "hypcover/lorentz.hpp"

namespace hypcover {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Gap tolerance when assembling a union of closed intervals.
inline constexpr double kMergeTolerance = 1e-12;

/// Specialize for scalars without std::sqrt / std::abs overloads.
template <class T>
struct ScalarOps {
  static T sqrt(T x) { return std::sqrt(x); }
  static T abs(T x) { return x < T(0) ? -x : x; }
};

template <class T>
struct BasicQuadratic {
  T a{}, b{}, c{};
  T operator()(T t) const noexcept { return (a * t + b) * t + c; }
};

using Quadratic = BasicQuadratic<double>;

/// Real roots of a t^2 + b t + c in ascending order (0, 1 or 2 of them).
template <class T>
std::vector<T> real_roots(const BasicQuadratic<T>& f) {
  using Ops = ScalarOps<T>;
  std::vector<T> roots;
  const T scale = Ops::abs(f.a) + Ops::abs(f.b) + Ops::abs(f.c);
  if (scale == T(0)) return roots;
  if (Ops::abs(f.a) <= T(1e-15) * scale) {
    if (f.b != T(0)) roots.push_back(-f.c / f.b);
    return roots;
  }
  const T disc = f.b * f.b - T(4) * f.a * f.c;
  if (disc < T(0)) return roots;
  // q = -(b + sign(b) sqrt(disc)) / 2; the roots are q/a and c/q.
  const T sq = Ops::sqrt(disc);
  const T q = f.b < T(0) ? T(-0.5) * (f.b - sq) : T(-0.5) * (f.b + sq);
  T r1 = q / f.a;
  T r2 = q != T(0) ? f.c / q : r1;
  if (r2 < r1) std::swap(r1, r2);
  roots.push_back(r1);
  if (r2 != r1) roots.push_back(r2);
  return roots;
}

/// Maximal closed sub-intervals of [0,1] on which f <= 0, up to measure zero.
template <class T>
std::vector<Interval> nonpositive_set(const BasicQuadratic<T>& f) {
  std::vector<T> cuts{T(0)};
  for (T r : real_roots(f)) {
    if (r > T(0) && r < T(1)) cuts.push_back(r);
  }
  cuts.push_back(T(1));

  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const T lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    if (f((lo + hi) / T(2)) <= T(0)) {
      const double dlo = static_cast<double>(lo), dhi = static_cast<double>(hi);
      if (!out.empty() && out.back().hi == dlo) {
        out.back().hi = dhi;
      } else {
        out.push_back({dlo, dhi});
      }
    }
  }
  return out;
}

struct UnionCoverage {
  bool covered = false;
  /// Leftmost maximal uncovered gap when not covered.
  std::optional<Interval> witness;
};

/// Whether the union of `parts` covers [0,1] (gaps below `tol` are merged).
UnionCoverage covers_unit_interval(std::vector<Interval> parts, double tol = kMergeTolerance);

/// Band quadratic for chart points p, q (p[0] = q[0] = 1), plane form a and
/// s = sinh^2(h).
template <class T, std::size_t N>
BasicQuadratic<T> band_quadratic(const std::array<T, N>& p, const std::array<T, N>& q,
                                 const std::array<T, N>& a, T sinh2_h) {
  auto dot = [](const std::array<T, N>& x, const std::array<T, N>& y) {
    T s = -x[0] * y[0];
    for (std::size_t i = 1; i < N; ++i) s += x[i] * y[i];
    return s;
  };
  std::array<T, N> d{};
  for (std::size_t i = 0; i < N; ++i) d[i] = q[i] - p[i];
  const T alpha = dot(p, a);
  const T beta = dot(d, a);
  const T gamma = dot(p, p);
  const T eps = dot(p, d);
  const T zeta = dot(d, d);
  const T s = sinh2_h * dot(a, a);
  return {beta * beta + s * zeta, T(2) * (alpha * beta + s * eps), alpha * alpha + s * gamma};
}

/// Parameters t in [0,1] where segment point P(t) lies within distance h of plane a.
template <std::size_t Dim>
std::vector<Interval> within_distance(const lorentz::ProjPoint<Dim>& p,
                                      const lorentz::ProjPoint<Dim>& q,
                                      const lorentz::ProjForm<Dim>& a, double h) {
  if (h < 0.0) throw Error(Errc::NegativeHeight, "band height must be non-negative");
  if (!(lorentz::bilinear(a, a) > 0.0)) throw Error(Errc::DegeneratePlane, "plane does not meet the model");
  const double sh = std::sinh(h);
  return nonpositive_set(band_quadratic(p.chart().coords(), q.chart().coords(), a.coords(), sh * sh));
}

}  // namespace hypcover
