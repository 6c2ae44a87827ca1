#pragma once

#include <cmath>
#include <numbers>

#include "hypcover/lorentz.hpp"
#include "hypcover/orthoscheme.hpp"

namespace hypcover {

/// Lobachevsky function L(x) = -int_0^x log|2 sin t| dt. Odd and pi-periodic.
double lobachevsky(double x);

/// Auxiliary angle of the orthoscheme volume formula, in [0, pi/2).
/// tan(theta) = sqrt(cos^2(pi/v) - sin^2(pi/u) sin^2(pi/w)) / (cos(pi/u) cos(pi/w)).
double theta(double u, double v, double w);

/// Volume of the complete (doubly truncated) orthoscheme with essential
/// angles pi/u, pi/v, pi/w.
double orthoscheme_volume(double u, double v, double w);

/// Area of a hyperbolic triangle from its angle defect; angles come from the
/// hyperbolic law of cosines on the three side lengths.
template <std::size_t Dim>
double triangle_area(const lorentz::ProjPoint<Dim>& p, const lorentz::ProjPoint<Dim>& q,
                     const lorentz::ProjPoint<Dim>& r);

/// Bolyai volume of a hyperball piece of height h over a base polygon:
/// area * (sinh(2h) + 2h) / 4.
double hyperball_piece_volume(double area, double h);

struct VolumeReport {
  double orthoscheme_volume = 0.0;
  double theta = 0.0;
  double area_QEJ = 0.0;
  double area_HLC = 0.0;
};

VolumeReport volume_report(const TruncatedOrthoscheme& o);

// ---------------------------------------------------------------------------

namespace detail {

void require_non_collinear(double cross_norm, double scale);

}  // namespace detail

template <std::size_t Dim>
double triangle_area(const lorentz::ProjPoint<Dim>& p, const lorentz::ProjPoint<Dim>& q,
                     const lorentz::ProjPoint<Dim>& r) {
  const auto pc = p.chart(), qc = q.chart(), rc = r.chart();
  // Collinearity in the chart: the Klein model maps geodesics to chords.
  double e1[3] = {}, e2[3] = {};
  for (std::size_t i = 0; i < Dim; ++i) {
    e1[i] = qc[i + 1] - pc[i + 1];
    e2[i] = rc[i + 1] - pc[i + 1];
  }
  const double cx = e1[1] * e2[2] - e1[2] * e2[1];
  const double cy = e1[2] * e2[0] - e1[0] * e2[2];
  const double cz = e1[0] * e2[1] - e1[1] * e2[0];
  const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  const double n2 = std::sqrt(e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2]);
  detail::require_non_collinear(std::sqrt(cx * cx + cy * cy + cz * cz), n1 * n2);

  const double a = lorentz::distance(q, r);
  const double b = lorentz::distance(p, r);
  const double c = lorentz::distance(p, q);
  auto angle = [](double opposite, double s1, double s2) {
    const double cosv =
        (std::cosh(s1) * std::cosh(s2) - std::cosh(opposite)) / (std::sinh(s1) * std::sinh(s2));
    return std::acos(std::clamp(cosv, -1.0, 1.0));
  };
  const double defect = std::numbers::pi - angle(a, b, c) - angle(b, a, c) - angle(c, a, b);
  return std::max(0.0, defect);
}

}  // namespace hypcover
