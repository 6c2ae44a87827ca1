#pragma once

// Two-hyperball coverings of a truncated orthoscheme.
//
// H1 is the hyperball piece over the face QEJ (plane pi3), H2 the piece over
// HLC (plane pi0). Both hyperball surfaces pass through one contact point T
// on an edge of the body, which fixes the heights h1 = d(T, QEJ) and
// h2 = d(T, HLC).

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypcover/bands.hpp"
#include "hypcover/optimize.hpp"
#include "hypcover/orthoscheme.hpp"
#include "hypcover/volume.hpp"

namespace hypcover {

/// The six edges not contained in a polar plane. Parameter t = 0 sits at the
/// first-named endpoint (the one on a polar plane; A1 for A1A2).
enum class EdgeId { QA2, EA1, JH, LA2, CA1, A1A2 };
inline constexpr std::array<EdgeId, 6> kAllEdges{EdgeId::QA2, EdgeId::EA1, EdgeId::JH,
                                                 EdgeId::LA2, EdgeId::CA1, EdgeId::A1A2};

const char* to_string(EdgeId e) noexcept;
/// Parses "QA2", "A1A2", ... Throws Errc::InvalidArgument otherwise.
EdgeId parse_edge(const std::string& name);
std::pair<Vertex, Vertex> endpoints(EdgeId e) noexcept;

enum class BasePlane { QEJ, HLC };
const char* to_string(BasePlane p) noexcept;

const ProjForm4& plane_form(const TruncatedOrthoscheme& o, BasePlane p) noexcept;

/// Point of the edge at parameter t (affine interpolation in the chart).
ProjPoint4 edge_point(const TruncatedOrthoscheme& o, EdgeId e, double t);

double edge_plane_distance(const TruncatedOrthoscheme& o, BasePlane plane, EdgeId e, double t);

struct Heights {
  double h1 = 0.0;
  double h2 = 0.0;
};

Heights heights_at(const TruncatedOrthoscheme& o, EdgeId contact, double t);

struct EdgeReport {
  EdgeId edge = EdgeId::QA2;
  bool covered = false;
  std::optional<Interval> witness;
};

EdgeReport edge_covered(const TruncatedOrthoscheme& o, EdgeId e, double h1, double h2);

struct CoveringConfig {
  SchlafliParams params;
  EdgeId contact_edge = EdgeId::A1A2;
  double t = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  bool feasible = false;
  std::array<EdgeReport, 6> per_edge{};
};

/// Configuration with heights from the contact point; the report is empty.
CoveringConfig make_config(const TruncatedOrthoscheme& o, EdgeId contact, double t);

/// Fills the per-edge report and the feasibility flag.
CoveringConfig coverage_check(const TruncatedOrthoscheme& o, CoveringConfig config);

struct OptimizerTrace {
  std::string method = "direct";
  int grid_samples = 0;
  int feasible_samples = 0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct DensityResult {
  CoveringConfig config;
  double density = 0.0;
  double vol_H1 = 0.0;
  double vol_H2 = 0.0;
  double vol_F = 0.0;
  OptimizerTrace optimizer_trace;
};

/// Caches the volume of F and the two base areas of one orthoscheme.
class CoveringProblem {
 public:
  explicit CoveringProblem(TruncatedOrthoscheme o);

  const TruncatedOrthoscheme& orthoscheme() const noexcept { return o_; }
  const VolumeReport& volumes() const noexcept { return vol_; }

  DensityResult evaluate(const CoveringConfig& config) const;
  /// Density of the contact configuration, +infinity when it is not a covering.
  double density_or_inf(EdgeId contact, double t) const;

 private:
  TruncatedOrthoscheme o_;
  VolumeReport vol_;
};

/// Density for the heights stored in config. Feasibility is reported, not required.
DensityResult density(const TruncatedOrthoscheme& o, const CoveringConfig& config);

/// Minimal density over contact points of the edge, rejecting non-coverings.
DensityResult minimize_noncongruent(const TruncatedOrthoscheme& o, EdgeId contact,
                                    const SearchOptions& opts = {});

/// Contact point where both hyperballs have the same height.
DensityResult solve_congruent(const TruncatedOrthoscheme& o, EdgeId contact = EdgeId::A1A2);

struct FamilyResult {
  double u_star = 0.0;
  DensityResult best;
  /// Non-integer u: the reflection images do not tile space.
  bool extendable = false;
  int outer_iterations = 0;
};

/// Minimum over u in [u_lo, u_hi] of the A1A2-contact density of {u,3,7}.
FamilyResult optimize_family_u37(double u_lo, double u_hi, const SearchOptions& inner = {},
                                 double u_tolerance = 1e-9);

}  // namespace hypcover
