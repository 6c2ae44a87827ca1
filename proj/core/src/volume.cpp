#include "hypcover/volume.hpp"

#include <array>
#include <cmath>

namespace hypcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaSlack = 1e-14;
constexpr int kClausenTerms = 40;

// zeta(2k) / (k (2k+1) (2 pi)^{2k}) for k = 1..kClausenTerms.
std::array<double, kClausenTerms> clausen_coefficients() {
  std::array<double, kClausenTerms> c{};
  const double two_pi_sq = 4.0 * kPi * kPi;
  double scale = 1.0;
  for (int k = 1; k <= kClausenTerms; ++k) {
    scale *= two_pi_sq;
    const double zeta = std::riemann_zeta(2.0 * k);
    c[static_cast<std::size_t>(k - 1)] = zeta / (k * (2.0 * k + 1.0) * scale);
  }
  return c;
}

// Clausen function Cl2 for |t| <= pi:
//   Cl2(t) = t - t log|t| + sum_k zeta(2k) t^{2k+1} / (k (2k+1) (2 pi)^{2k}).
// The ratio of consecutive terms is at most (t / 2pi)^2 <= 1/4.
double clausen_reduced(double t) {
  static const auto coeff = clausen_coefficients();
  if (t == 0.0) return 0.0;
  const double t2 = t * t;
  double power = t;
  double tail = 0.0;
  for (double c : coeff) {
    power *= t2;
    const double term = c * power;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(tail)) break;
  }
  return t - t * std::log(std::abs(t)) + tail;
}

}  // namespace

namespace detail {

void require_non_collinear(double cross_norm, double scale) {
  if (!(cross_norm > 1e-12 * scale)) {
    throw Error(Errc::DegenerateTriangle, "triangle vertices are collinear");
  }
}

}  // namespace detail

double lobachevsky(double x) {
  if (!std::isfinite(x)) throw Error(Errc::DomainError, "lobachevsky of a non-finite argument");
  // L(x) = Cl2(2x) / 2, and Cl2 is 2pi-periodic.
  double t = std::remainder(2.0 * x, 2.0 * kPi);
  return 0.5 * clausen_reduced(t);
}

double theta(double u, double v, double w) {
  const double a01 = kPi / u, a12 = kPi / v, a23 = kPi / w;
  double radicand = std::pow(std::cos(a12), 2) - std::pow(std::sin(a01) * std::sin(a23), 2);
  if (radicand < -kThetaSlack) {
    throw Error(Errc::DomainError, "negative radicand in theta: parameters are not hyperbolic");
  }
  radicand = std::max(0.0, radicand);
  return std::atan2(std::sqrt(radicand), std::cos(a01) * std::cos(a23));
}

double orthoscheme_volume(double u, double v, double w) {
  const double a01 = kPi / u, a12 = kPi / v, a23 = kPi / w;
  const double th = theta(u, v, w);
  const double half_pi = 0.5 * kPi;
  const double sum = lobachevsky(a01 + th) - lobachevsky(a01 - th) +
                     lobachevsky(half_pi + a12 - th) + lobachevsky(half_pi - a12 - th) +
                     lobachevsky(a23 + th) - lobachevsky(a23 - th) +
                     2.0 * lobachevsky(half_pi - th);
  return 0.25 * sum;
}

double hyperball_piece_volume(double area, double h) {
  if (h < 0.0) throw Error(Errc::NegativeHeight, "hyperball height must be non-negative");
  if (area < 0.0) throw Error(Errc::InvalidArgument, "base area must be non-negative");
  return 0.25 * area * (std::sinh(2.0 * h) + 2.0 * h);
}

VolumeReport volume_report(const TruncatedOrthoscheme& o) {
  const auto& p = o.params();
  VolumeReport r;
  r.theta = theta(p.u, p.v, p.w);
  r.orthoscheme_volume = orthoscheme_volume(p.u, p.v, p.w);
  r.area_QEJ = triangle_area(o.vertex(Vertex::Q), o.vertex(Vertex::E), o.vertex(Vertex::J));
  r.area_HLC = triangle_area(o.vertex(Vertex::H), o.vertex(Vertex::L), o.vertex(Vertex::C));
  return r;
}

}  // namespace hypcover
