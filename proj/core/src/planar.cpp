#include "hypcover/planar.hpp"

#include <quadmath.h>

#include <array>
#include <cmath>
#include <sstream>

namespace hypcover {

template <>
struct ScalarOps<__float128> {
  static __float128 sqrt(__float128 x) { return sqrtq(x); }
  static __float128 abs(__float128 x) { return fabsq(x); }
};

}  // namespace hypcover

namespace hypcover::planar {

namespace {

using lorentz::bilinear;

using Quad = __float128;
using QVec = std::array<Quad, 3>;

Quad qdot(const QVec& u, const QVec& v) { return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

// Form n with <x, n> = det(x, p, q): Euclidean cross product, time component flipped.
QVec line_through(const QVec& p, const QVec& q) {
  return {-(p[1] * q[2] - p[2] * q[1]), p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

Quad polygon_area_q(const std::vector<QVec>& v) {
  const std::size_t n = v.size();
  QVec centroid{1, 0, 0};
  for (const auto& p : v) {
    centroid[1] += p[1] / p[0] / static_cast<Quad>(n);
    centroid[2] += p[2] / p[0] / static_cast<Quad>(n);
  }
  // Inward-oriented unit side lines.
  std::vector<QVec> sides;
  sides.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QVec l = line_through(v[i], v[(i + 1) % n]);
    const Quad ll = qdot(l, l);
    if (!(ll > 0)) throw Error(Errc::DegeneratePlane, "polygon side misses the model");
    Quad s = 1 / sqrtq(ll);
    if (qdot(centroid, l) < 0) s = -s;
    for (auto& x : l) x *= s;
    sides.push_back(l);
  }
  Quad angle_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Quad c = -qdot(sides[(i + n - 1) % n], sides[i]);
    c = c > 1 ? Quad(1) : (c < -1 ? Quad(-1) : c);
    angle_sum += acosq(c);
  }
  return static_cast<Quad>(n - 2) * acosq(Quad(-1)) - angle_sum;
}

/// The pentagon rebuilt in quad precision from a and b. Near (1, inf) the
/// contact at J is resolved only to ~1e-8 in double, far above the interval
/// merge tolerance, and the angle sum loses ~1e-6.
struct QuadPentagon {
  QVec O, E, D, C, F, J;
  QVec base1, base2;

  QuadPentagon(double a_in, double b_in) {
    const Quad a = a_in, b = b_in;
    const Quad ia = 1 / a, ib = 1 / b;
    const Quad c1 = b * ((a - 1) * (a + 1)) * ia * ia;
    const Quad d2 = a * ((b - 1) * (b + 1)) * ib * ib;
    O = {1, 0, 0};
    E = {1, ib, 0};
    D = {1, ib, d2};
    C = {1, c1, ia};
    F = {1, 0, ia};
    J = {1, (c1 + ib) / 2, (ia + d2) / 2};
    base1 = {0, 0, 1};
    base2 = {1, 0, a};
  }
  std::vector<QVec> vertices() const { return {O, E, D, C, F}; }
};

}  // namespace

PlanarConfig build_pentagon(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 1.0) || !(b > 1.0)) {
    throw Error(Errc::InvalidArgument, "planar parameters need a > 1 and b > 1");
  }
  const double ia = 1.0 / a, ib = 1.0 / b;
  if (!(ia * ia + ib * ib > 1.0)) {
    std::ostringstream os;
    os << "line AB misses the disk for a=" << a << ", b=" << b << " (needs 1/a^2 + 1/b^2 > 1)";
    throw Error(Errc::NoIntersection, os.str());
  }

  const double eps = a - 1.0;  // exact for a in (1, 2]
  const double a2m1 = eps * (a + 1.0);
  const double b2m1 = (b - 1.0) * (b + 1.0);

  PlanarConfig c;
  c.a = a;
  c.b = b;
  c.A = ProjPoint3(1.0, 0.0, a);
  c.B = ProjPoint3(1.0, b, 0.0);
  c.O = ProjPoint3(1.0, 0.0, 0.0);
  c.E = ProjPoint3(1.0, ib, 0.0);
  c.F = ProjPoint3(1.0, 0.0, ia);
  const double c1 = b * a2m1 * ia * ia;
  const double d2 = a * b2m1 * ib * ib;
  c.C = ProjPoint3(1.0, c1, ia);
  c.D = ProjPoint3(1.0, ib, d2);
  const double p1 = 0.5 * (c1 + ib);
  const double p2 = 0.5 * (ia + d2);
  c.J = ProjPoint3(1.0, p1, p2);
  c.base_OE = ProjForm3(0.0, 0.0, 1.0);
  c.base_FC = lorentz::polar(c.A);

  // 1 - p2 = (a/b^2 - (a-1)^2/a) / 2 without cancellation.
  const double one_minus_p2 = 0.5 * (a * ib * ib - eps * eps * ia);
  const double q = one_minus_p2 * (1.0 + p2) - p1 * p1;  // -<J,J>
  if (!(q > 0.0)) throw Error(Errc::DomainError, "midpoint J left the disk");

  c.len_OE = std::atanh(ib);
  c.len_FC = std::atanh(b * std::sqrt(a2m1) * ia);
  c.h1 = std::asinh(p2 / std::sqrt(q));
  c.h2 = std::asinh(std::abs(eps - a * one_minus_p2) / std::sqrt(q * a2m1));
  return c;
}

double hypercycle_piece_area(double s, double h) {
  if (s < 0.0) throw Error(Errc::InvalidArgument, "base length must be non-negative");
  if (h < 0.0) throw Error(Errc::NegativeHeight, "hypercycle height must be non-negative");
  return s * std::sinh(h);
}

double polygon_area(const std::vector<ProjPoint3>& vertices) {
  if (vertices.size() < 3) throw Error(Errc::InvalidArgument, "polygon needs at least three vertices");
  std::vector<QVec> v;
  for (const auto& x : vertices) v.push_back({x[0], x[1], x[2]});
  return static_cast<double>(polygon_area_q(v));
}

PlanarCoverage check_covering(const PlanarConfig& cfg, int chords_per_side) {
  if (chords_per_side < 1) throw Error(Errc::InvalidArgument, "need at least one chord per side");

  if (!(cfg.h1 >= 0.0) || !(cfg.h2 >= 0.0)) throw Error(Errc::NegativeHeight, "hypercycle heights must be >= 0");
  const QuadPentagon g(cfg.a, cfg.b);
  const Quad sh1 = sinhq(static_cast<Quad>(cfg.h1)), sh2 = sinhq(static_cast<Quad>(cfg.h2));
  const Quad s1 = sh1 * sh1, s2 = sh2 * sh2;

  PlanarCoverage r;
  auto test = [&](const QVec& p, const QVec& q, const std::string& part) {
    auto parts = nonpositive_set(band_quadratic(p, q, g.base1, s1));
    const auto more = nonpositive_set(band_quadratic(p, q, g.base2, s2));
    parts.insert(parts.end(), more.begin(), more.end());
    const UnionCoverage u = covers_unit_interval(std::move(parts));
    ++r.chords_checked;
    if (!u.covered) {
      r.failing_part = part;
      r.witness = u.witness;
      return false;
    }
    return true;
  };

  const auto poly = g.vertices();
  const char* names[] = {"OE", "ED", "DC", "CF", "FO"};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!test(poly[i], poly[(i + 1) % poly.size()], names[i])) return r;
  }
  // J lies on DC; chords to that side would run along it.
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i == 2) continue;
    const QVec& p = poly[i];
    const QVec& q = poly[(i + 1) % poly.size()];
    for (int k = 0; k < chords_per_side; ++k) {
      const Quad t = static_cast<Quad>(k) / chords_per_side;
      QVec x{};
      for (std::size_t m = 0; m < 3; ++m) x[m] = (1 - t) * p[m] + t * q[m];
      if (!test(g.J, x, "interior")) return r;
    }
  }
  r.covered = true;
  return r;
}

PlanarDensity density_report(const PlanarConfig& cfg) {
  const PlanarCoverage cov = check_covering(cfg);
  if (!cov.covered) {
    std::ostringstream os;
    os << "hypercycle bands leave part of " << cov.failing_part << " uncovered";
    if (cov.witness) os << " (chord parameters " << cov.witness->lo << ".." << cov.witness->hi << ")";
    throw Error(Errc::NotACovering, os.str());
  }
  PlanarDensity d;
  d.area_OE = hypercycle_piece_area(cfg.len_OE, cfg.h1);
  d.area_FC = hypercycle_piece_area(cfg.len_FC, cfg.h2);
  d.pentagon_area = static_cast<double>(polygon_area_q(QuadPentagon(cfg.a, cfg.b).vertices()));
  d.delta = (d.area_OE + d.area_FC) / d.pentagon_area;
  return d;
}

double density_2d(const PlanarConfig& cfg) { return density_report(cfg).delta; }

ScanReport limit_scan(const std::vector<std::pair<double, double>>& path) {
  ScanReport r;
  for (const auto& [a, b] : path) {
    const PlanarConfig cfg = build_pentagon(a, b);
    const PlanarDensity d = density_report(cfg);
    r.rows.push_back({a, b, cfg.h1, cfg.h2, d.pentagon_area, d.delta, d.delta - kLimitDensity});
  }
  r.strictly_decreasing = true;
  r.all_above_limit = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i > 0 && !(r.rows[i].delta < r.rows[i - 1].delta)) r.strictly_decreasing = false;
    if (!(r.rows[i].delta > kLimitDensity)) r.all_above_limit = false;
  }
  if (!r.rows.empty()) r.terminal_gap = r.rows.back().gap_to_limit;
  return r;
}

std::vector<std::pair<double, double>> diagonal_path(int n) {
  std::vector<std::pair<double, double>> p;
  for (int k = 1; k <= n; ++k) p.emplace_back(1.0 + std::pow(10.0, -k), std::pow(10.0, k));
  return p;
}

std::vector<std::pair<double, double>> admissible_path(int n) {
  std::vector<std::pair<double, double>> p;
  for (int k = 1; k <= n; ++k) p.emplace_back(1.0 + std::pow(10.0, -3 * k), std::pow(10.0, k));
  return p;
}

}  // namespace hypcover::planar
