#include "hypcover/covering.hpp"

#include <cmath>
#include <limits>

namespace hypcover {

namespace {

void require_unit_parameter(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::InvalidArgument, "edge parameter must lie in [0,1]");
}

bool feasible_contact(EdgeId e) {
  return e == EdgeId::QA2 || e == EdgeId::CA1 || e == EdgeId::A1A2;
}

}  // namespace

// ---------------------------------------------------------------------------
// edges and planes

const char* to_string(EdgeId e) noexcept {
  switch (e) {
    case EdgeId::QA2: return "QA2";
    case EdgeId::EA1: return "EA1";
    case EdgeId::JH: return "JH";
    case EdgeId::LA2: return "LA2";
    case EdgeId::CA1: return "CA1";
    case EdgeId::A1A2: return "A1A2";
  }
  return "?";
}

EdgeId parse_edge(const std::string& name) {
  for (EdgeId e : kAllEdges) {
    if (name == to_string(e)) return e;
  }
  throw Error(Errc::InvalidArgument, "unknown edge '" + name + "'");
}

std::pair<Vertex, Vertex> endpoints(EdgeId e) noexcept {
  switch (e) {
    case EdgeId::QA2: return {Vertex::Q, Vertex::A2};
    case EdgeId::EA1: return {Vertex::E, Vertex::A1};
    case EdgeId::JH: return {Vertex::J, Vertex::H};
    case EdgeId::LA2: return {Vertex::L, Vertex::A2};
    case EdgeId::CA1: return {Vertex::C, Vertex::A1};
    case EdgeId::A1A2: return {Vertex::A1, Vertex::A2};
  }
  return {Vertex::Q, Vertex::A2};
}

const char* to_string(BasePlane p) noexcept { return p == BasePlane::QEJ ? "QEJ" : "HLC"; }

const ProjForm4& plane_form(const TruncatedOrthoscheme& o, BasePlane p) noexcept {
  return p == BasePlane::QEJ ? o.pi3() : o.pi0();
}

ProjPoint4 edge_point(const TruncatedOrthoscheme& o, EdgeId e, double t) {
  require_unit_parameter(t);
  const auto [p, q] = endpoints(e);
  return lorentz::segment_point(o.vertex(p), o.vertex(q), t);
}

double edge_plane_distance(const TruncatedOrthoscheme& o, BasePlane plane, EdgeId e, double t) {
  return lorentz::point_plane_distance(edge_point(o, e, t), plane_form(o, plane));
}

Heights heights_at(const TruncatedOrthoscheme& o, EdgeId contact, double t) {
  const ProjPoint4 T = edge_point(o, contact, t);
  return {lorentz::point_plane_distance(T, o.pi3()), lorentz::point_plane_distance(T, o.pi0())};
}

// ---------------------------------------------------------------------------
// coverage

EdgeReport edge_covered(const TruncatedOrthoscheme& o, EdgeId e, double h1, double h2) {
  if (h1 < 0.0 || h2 < 0.0) throw Error(Errc::NegativeHeight, "hyperball heights must be non-negative");
  const auto [p, q] = endpoints(e);
  auto parts = within_distance(o.vertex(p), o.vertex(q), o.pi3(), h1);
  const auto second = within_distance(o.vertex(p), o.vertex(q), o.pi0(), h2);
  parts.insert(parts.end(), second.begin(), second.end());
  const UnionCoverage u = covers_unit_interval(std::move(parts));
  return {e, u.covered, u.witness};
}

CoveringConfig make_config(const TruncatedOrthoscheme& o, EdgeId contact, double t) {
  CoveringConfig c;
  c.params = o.params();
  c.contact_edge = contact;
  c.t = t;
  const Heights h = heights_at(o, contact, t);
  c.h1 = h.h1;
  c.h2 = h.h2;
  for (std::size_t i = 0; i < kAllEdges.size(); ++i) c.per_edge[i].edge = kAllEdges[i];
  return c;
}

CoveringConfig coverage_check(const TruncatedOrthoscheme& o, CoveringConfig config) {
  config.feasible = true;
  for (std::size_t i = 0; i < kAllEdges.size(); ++i) {
    config.per_edge[i] = edge_covered(o, kAllEdges[i], config.h1, config.h2);
    config.feasible = config.feasible && config.per_edge[i].covered;
  }
  return config;
}

// ---------------------------------------------------------------------------
// density

CoveringProblem::CoveringProblem(TruncatedOrthoscheme o) : o_(std::move(o)), vol_(volume_report(o_)) {}

DensityResult CoveringProblem::evaluate(const CoveringConfig& config) const {
  DensityResult r;
  r.config = coverage_check(o_, config);
  r.vol_F = vol_.orthoscheme_volume;
  r.vol_H1 = hyperball_piece_volume(vol_.area_QEJ, config.h1);
  r.vol_H2 = hyperball_piece_volume(vol_.area_HLC, config.h2);
  r.density = (r.vol_H1 + r.vol_H2) / r.vol_F;
  return r;
}

double CoveringProblem::density_or_inf(EdgeId contact, double t) const {
  const CoveringConfig c = coverage_check(o_, make_config(o_, contact, t));
  if (!c.feasible) return std::numeric_limits<double>::infinity();
  return (hyperball_piece_volume(vol_.area_QEJ, c.h1) + hyperball_piece_volume(vol_.area_HLC, c.h2)) /
         vol_.orthoscheme_volume;
}

DensityResult density(const TruncatedOrthoscheme& o, const CoveringConfig& config) {
  return CoveringProblem(o).evaluate(config);
}

DensityResult minimize_noncongruent(const TruncatedOrthoscheme& o, EdgeId contact,
                                    const SearchOptions& opts) {
  if (!feasible_contact(contact)) {
    throw Error(Errc::InvalidArgument,
                std::string("contact edge ") + to_string(contact) + " never yields a covering; use QA2, CA1 or A1A2");
  }
  const CoveringProblem problem(o);
  const ScalarMinimum m =
      grid_golden_minimize([&](double t) { return problem.density_or_inf(contact, t); }, 0.0, 1.0, opts);
  DensityResult r = problem.evaluate(make_config(o, contact, m.x));
  r.optimizer_trace = {"grid+golden", m.grid_samples, m.finite_samples, m.iterations, m.bracket_lo,
                       m.bracket_hi};
  return r;
}

DensityResult solve_congruent(const TruncatedOrthoscheme& o, EdgeId contact) {
  auto gap = [&](double t) {
    const Heights h = heights_at(o, contact, t);
    return h.h2 - h.h1;
  };
  const double t = bisect_root(gap, 0.0, 1.0);
  const CoveringProblem problem(o);
  DensityResult r = problem.evaluate(make_config(o, contact, t));
  r.optimizer_trace.method = "bisection";
  return r;
}

FamilyResult optimize_family_u37(double u_lo, double u_hi, const SearchOptions& inner, double u_tolerance) {
  if (!(6.0 < u_lo && u_lo < u_hi && u_hi < 7.0)) {
    throw Error(Errc::InvalidArgument, "family range must satisfy 6 < u_lo < u_hi < 7");
  }
  auto best_at = [&](double u) {
    try {
      return minimize_noncongruent(embed(u, 3.0, 7.0), EdgeId::A1A2, inner).density;
    } catch (const Error& e) {
      if (e.code() == Errc::Inadmissible || e.code() == Errc::NoFeasiblePoint) {
        return std::numeric_limits<double>::infinity();
      }
      throw;
    }
  };
  SearchOptions outer = inner;
  outer.tolerance = u_tolerance;
  const ScalarMinimum m = grid_golden_minimize(best_at, u_lo, u_hi, outer);

  FamilyResult f;
  f.u_star = m.x;
  f.best = minimize_noncongruent(embed(m.x, 3.0, 7.0), EdgeId::A1A2, inner);
  f.best.optimizer_trace.method = "nested grid+golden";
  f.extendable = f.best.config.params.extendable;
  f.outer_iterations = m.iterations;
  return f;
}

}  // namespace hypcover
