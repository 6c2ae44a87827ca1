#pragma once

// Hypercycle coverings of a doubly truncated planar orthoscheme.
//
// The right triangle with vertices O = (1,0,0), A = (1,0,a), B = (1,b,0)
// (A and B outer) is cut by the polar lines of A and B, leaving the pentagon
// O E D C F with five right angles:
//   E = (1, 1/b, 0)   F = (1, 0, 1/a)   C = AB ∩ Pol(A)   D = AB ∩ Pol(B).
// Two hypercycle bands, based on OE and FC, both pass through J, the chart
// midpoint of CD.
//
// Near (a, b) -> (1, inf) the vertices C, D, J approach the ideal boundary and
// generic Lorentz formulas lose most of their digits, so lengths and heights
// use closed forms in a - 1 and 1/b.

#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypcover/bands.hpp"
#include "hypcover/lorentz.hpp"

namespace hypcover::planar {

using lorentz::ProjForm3;
using lorentz::ProjPoint3;

/// sqrt(12) / pi, the density that the configurations approach from above.
inline const double kLimitDensity = std::sqrt(12.0) / std::numbers::pi;

struct PlanarConfig {
  double a = 0.0;
  double b = 0.0;
  ProjPoint3 A{1.0, 0.0, 2.0};
  ProjPoint3 B{1.0, 2.0, 0.0};
  ProjPoint3 F{1.0, 0.0, 0.5};
  ProjPoint3 C{1.0, 0.0, 0.5};
  ProjPoint3 D{1.0, 0.5, 0.0};
  ProjPoint3 E{1.0, 0.5, 0.0};
  ProjPoint3 O{1.0, 0.0, 0.0};
  ProjPoint3 J{1.0, 0.0, 0.0};
  /// Base line OE (x2 = 0) and base line FC (Pol(A)).
  ProjForm3 base_OE{0.0, 0.0, 1.0};
  ProjForm3 base_FC{1.0, 0.0, 2.0};
  double len_OE = 0.0;
  double len_FC = 0.0;
  double h1 = 0.0;  ///< d(J, OE)
  double h2 = 0.0;  ///< d(J, FC)

  /// Vertices in counterclockwise order O, E, D, C, F.
  std::vector<ProjPoint3> pentagon() const { return {O, E, D, C, F}; }
};

/// Requires a, b > 1 and 1/a^2 + 1/b^2 > 1 (AB meets the disk), else
/// Errc::NoIntersection (Errc::InvalidArgument for a, b <= 1).
PlanarConfig build_pentagon(double a, double b);

/// Area between a geodesic segment of length s and its equidistant curve at
/// distance h, cut off by the perpendiculars at the segment ends: s sinh(h).
double hypercycle_piece_area(double s, double h);

/// Area of a convex polygon (chart vertices in cyclic order) from its angle sum.
double polygon_area(const std::vector<ProjPoint3>& vertices);

struct PlanarCoverage {
  bool covered = false;
  /// Pentagon side ("OE", "ED", ...) or "interior" where coverage fails.
  std::string failing_part;
  std::optional<Interval> witness;
  int chords_checked = 0;
};

/// Band-union test on the five sides and on a fan of chords from J.
PlanarCoverage check_covering(const PlanarConfig& cfg, int chords_per_side = 16);

struct PlanarDensity {
  double delta = 0.0;
  double area_OE = 0.0;
  double area_FC = 0.0;
  double pentagon_area = 0.0;
};

/// Throws Errc::NotACovering when the bands leave part of the pentagon uncovered.
PlanarDensity density_report(const PlanarConfig& cfg);
double density_2d(const PlanarConfig& cfg);

struct ScanRow {
  double a = 0.0, b = 0.0;
  double h1 = 0.0, h2 = 0.0;
  double pentagon_area = 0.0;
  double delta = 0.0;
  double gap_to_limit = 0.0;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  bool strictly_decreasing = false;
  bool all_above_limit = false;
  double terminal_gap = 0.0;
};

ScanReport limit_scan(const std::vector<std::pair<double, double>>& path);

/// a = 1 + 10^-k, b = 10^k for k = 1..n.
std::vector<std::pair<double, double>> diagonal_path(int n);
/// a = 1 + 10^-3k, b = 10^k for k = 1..n; every point keeps AB inside the disk.
std::vector<std::pair<double, double>> admissible_path(int n);

}  // namespace hypcover::planar
