#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <tuple>
#include <vector>

#include "hypcover/covering.hpp"

using namespace hypcover;
using lorentz::bilinear;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidArgument;
}

const TruncatedOrthoscheme& o737() {
  static const TruncatedOrthoscheme o = embed(7, 3, 7);
  return o;
}

const TruncatedOrthoscheme& o373() {
  static const TruncatedOrthoscheme o = embed(3, 7, 3);
  return o;
}

}  // namespace

// --- interval machinery ----------------------------------------------------

TEST(Bands, RealRoots) {
  auto r = real_roots(Quadratic{1, -3, 2});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], 2.0);
  EXPECT_TRUE(real_roots(Quadratic{1, 0, 1}).empty());
  r = real_roots(Quadratic{0, 2, -1});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[0], 0.5);
  // Cancellation-prone case stays accurate.
  r = real_roots(Quadratic{1, -1e8, 1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 1e-8, 1e-22);
}

TEST(Bands, NonpositiveSet) {
  auto s = nonpositive_set(Quadratic{1, -1, 0.21});  // roots 0.3, 0.7
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].lo, 0.3, 1e-15);
  EXPECT_NEAR(s[0].hi, 0.7, 1e-15);
  s = nonpositive_set(Quadratic{-1, 1, -0.21});  // outside (0.3, 0.7)
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].lo, 0.0);
  EXPECT_EQ(s[1].hi, 1.0);
  EXPECT_TRUE(nonpositive_set(Quadratic{1, -1, 0.25}).empty());  // touches zero at one point
  s = nonpositive_set(Quadratic{0, 0, -1});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (Interval{0.0, 1.0}));
}

TEST(Bands, UnionCoverage) {
  auto u = covers_unit_interval({{0.0, 0.4}, {0.4 + 1e-13, 1.0}});
  EXPECT_TRUE(u.covered);
  u = covers_unit_interval({{0.5, 1.0}, {0.0, 0.3}});
  EXPECT_FALSE(u.covered);
  ASSERT_TRUE(u.witness);
  EXPECT_EQ(*u.witness, (Interval{0.3, 0.5}));
  u = covers_unit_interval({});
  EXPECT_EQ(*u.witness, (Interval{0.0, 1.0}));
  u = covers_unit_interval({{0.0, 0.9}});
  EXPECT_EQ(*u.witness, (Interval{0.9, 1.0}));
}

TEST(Optimize, GridGoldenFindsInteriorMinimum) {
  const auto m = grid_golden_minimize([](double x) { return (x - 0.3137) * (x - 0.3137) + 2.0; }, 0.0, 1.0);
  EXPECT_NEAR(m.x, 0.3137, 1e-7);
  EXPECT_NEAR(m.value, 2.0, 1e-14);
  EXPECT_EQ(m.grid_samples, 257);
  EXPECT_LE(m.bracket_hi - m.bracket_lo, 2.0 / 256 + 1e-15);
}

TEST(Optimize, RejectsInfeasibleSamples) {
  auto f = [](double x) { return x < 0.6 ? std::numeric_limits<double>::infinity() : x; };
  const auto m = grid_golden_minimize(f, 0.0, 1.0);
  EXPECT_NEAR(m.x, 0.6, 1e-9);
  EXPECT_EQ(code_of([] {
              grid_golden_minimize([](double) { return std::numeric_limits<double>::infinity(); }, 0.0, 1.0);
            }),
            Errc::NoFeasiblePoint);
}

TEST(Optimize, Bisection) {
  EXPECT_NEAR(bisect_root([](double x) { return x * x - 0.5; }, 0.0, 1.0), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(code_of([] { bisect_root([](double x) { return x + 1.0; }, 0.0, 1.0); }), Errc::NoRoot);
}

// --- edges -----------------------------------------------------------------

TEST(Edges, NamesRoundTrip) {
  for (EdgeId e : kAllEdges) EXPECT_EQ(parse_edge(to_string(e)), e);
  EXPECT_EQ(code_of([] { parse_edge("QE"); }), Errc::InvalidArgument);
}

TEST(EdgePlaneDistance, IncidenceExamples) {
  const auto& o = o737();
  EXPECT_NEAR(edge_plane_distance(o, BasePlane::QEJ, EdgeId::JH, 0.0), 0.0, 1e-12);
  EXPECT_NEAR(edge_plane_distance(o, BasePlane::HLC, EdgeId::JH, 1.0), 0.0, 1e-12);
  EXPECT_NEAR(edge_plane_distance(o, BasePlane::QEJ, EdgeId::QA2, 0.0), 0.0, 1e-12);
  EXPECT_NEAR(edge_plane_distance(o, BasePlane::HLC, EdgeId::CA1, 0.0), 0.0, 1e-12);
  EXPECT_EQ(code_of([&] { edge_plane_distance(o, BasePlane::QEJ, EdgeId::JH, 1.2); }), Errc::InvalidArgument);
}

TEST(EdgePlaneDistance, JHClosedFormsAgreeWithGenericRoute) {
  // JH is perpendicular to both planes, so the distances are d(T,J) and d(T,H).
  for (auto [u, v, w] : {std::tuple{7.0, 3.0, 7.0}, {3.0, 7.0, 3.0}, {5.0, 4.0, 6.0}}) {
    const auto o = embed(u, v, w);
    const auto& p = o.placement();
    const double r = 1 - p.x * p.x - p.y * p.y;
    for (double t : {0.1, 0.5, 0.9}) {
      const double hlc = std::acosh((r - t * p.zH * p.zH) /
                                    std::sqrt((r - p.zH * p.zH) * (r - t * t * p.zH * p.zH)));
      const double qej = std::acosh(std::sqrt(r / (r - t * t * p.zH * p.zH)));
      EXPECT_NEAR(edge_plane_distance(o, BasePlane::HLC, EdgeId::JH, t), hlc, 1e-10);
      EXPECT_NEAR(edge_plane_distance(o, BasePlane::QEJ, EdgeId::JH, t), qej, 1e-10);
    }
  }
}

TEST(Heights, ContactPointLiesOnBothSurfaces) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> tt(0.0, 1.0);
  for (auto [u, v, w] : {std::tuple{7.0, 3.0, 7.0}, {3.0, 8.0, 3.0}, {4.0, 5.0, 5.0}, {6.3, 3.0, 7.0}}) {
    const auto o = embed(u, v, w);
    for (EdgeId e : kAllEdges) {
      for (int i = 0; i < 10; ++i) {
        const double t = tt(rng);
        const Heights h = heights_at(o, e, t);
        const ProjPoint4 T = lorentz::unit(edge_point(o, e, t));
        for (auto [a, hh] : {std::pair{lorentz::unit(o.pi3()), h.h1}, std::pair{lorentz::unit(o.pi0()), h.h2}}) {
          // <T,a>^2 + sinh^2(h) <a,a> <T,T> = 0 with |<T,T>| = <a,a> = 1
          EXPECT_NEAR(std::pow(bilinear(T, a), 2) - std::pow(std::sinh(hh), 2), 0.0,
                      1e-10 * std::cosh(hh) * std::cosh(hh));
        }
      }
    }
  }
  EXPECT_EQ(heights_at(o737(), EdgeId::QA2, 0.0).h1, 0.0);
}

// --- coverage ----------------------------------------------------------------

TEST(EdgeCovered, DominatingHeightsCover) {
  const auto& o = o737();
  for (EdgeId e : kAllEdges) {
    double m1 = 0, m2 = 0;
    for (int i = 0; i <= 200; ++i) {
      m1 = std::max(m1, edge_plane_distance(o, BasePlane::QEJ, e, i / 200.0));
      m2 = std::max(m2, edge_plane_distance(o, BasePlane::HLC, e, i / 200.0));
    }
    EXPECT_TRUE(edge_covered(o, e, m1 + 1e-9, 0.0).covered || edge_covered(o, e, 0.0, m2 + 1e-9).covered);
    EXPECT_TRUE(edge_covered(o, e, m1 + 1e-9, m2 + 1e-9).covered);
  }
}

TEST(EdgeCovered, ZeroHeightsLeaveA1A2Open) {
  const auto r = edge_covered(o737(), EdgeId::A1A2, 0.0, 0.0);
  EXPECT_FALSE(r.covered);
  ASSERT_TRUE(r.witness);
  EXPECT_NEAR(r.witness->lo, 0.0, 1e-12);
  EXPECT_NEAR(r.witness->hi, 1.0, 1e-12);
  EXPECT_EQ(code_of([] { edge_covered(o737(), EdgeId::A1A2, -1.0, 0.0); }), Errc::NegativeHeight);
}

TEST(EdgeCovered, RecordConfigurationCoversAllEdges) {
  const auto c = solve_congruent(o737());
  for (EdgeId e : kAllEdges) {
    EXPECT_TRUE(edge_covered(o737(), e, c.config.h1, c.config.h2).covered) << to_string(e);
    // Rounded up to the printed digits.
    EXPECT_TRUE(edge_covered(o737(), e, 1.49904, 1.49904).covered) << to_string(e);
  }
}

TEST(CoverageCheck, FeasibleContactsOn373) {
  const auto& o = o373();
  for (EdgeId e : {EdgeId::QA2, EdgeId::CA1, EdgeId::A1A2}) {
    for (int i = 0; i <= 20; ++i) {
      const auto c = coverage_check(o, make_config(o, e, i / 20.0));
      EXPECT_TRUE(c.feasible) << to_string(e) << " t=" << i / 20.0;
      for (const auto& r : c.per_edge) EXPECT_EQ(r.covered, !r.witness.has_value());
    }
  }
}

TEST(CoverageCheck, InfeasibleContactsOn373) {
  const auto& o = o373();
  const auto ea1 = coverage_check(o, make_config(o, EdgeId::EA1, 0.5));
  EXPECT_FALSE(ea1.feasible);
  bool named_edge = false;
  for (const auto& r : ea1.per_edge) {
    if (!r.covered) {
      EXPECT_TRUE(r.edge == EdgeId::QA2 || r.edge == EdgeId::A1A2);
      ASSERT_TRUE(r.witness);
      EXPECT_LT(r.witness->lo, r.witness->hi);
      named_edge = true;
    }
  }
  EXPECT_TRUE(named_edge);
  EXPECT_FALSE(coverage_check(o, make_config(o, EdgeId::JH, 0.5)).feasible);
  EXPECT_FALSE(coverage_check(o, make_config(o, EdgeId::LA2, 0.5)).feasible);
}

// --- density and optimizers --------------------------------------------------

TEST(Density, DefinitionAndDegenerateCase) {
  auto cfg = make_config(o737(), EdgeId::A1A2, 0.3);
  const auto r = density(o737(), cfg);
  EXPECT_NEAR(r.density, (r.vol_H1 + r.vol_H2) / r.vol_F, 1e-15);
  cfg.h1 = cfg.h2 = 0.0;
  const auto z = density(o737(), cfg);
  EXPECT_EQ(z.density, 0.0);
  EXPECT_FALSE(z.config.feasible);
}

TEST(Minimize, TableExamples) {
  auto q = minimize_noncongruent(o373(), EdgeId::QA2);
  EXPECT_NEAR(q.density, 1.28943, 5e-5);
  EXPECT_NEAR(q.config.h1, 0.92295, 5e-5);
  EXPECT_NEAR(q.config.h2, 1.55521, 5e-5);
  EXPECT_TRUE(q.config.feasible);

  q = minimize_noncongruent(embed(3, 8, 3), EdgeId::QA2);
  EXPECT_NEAR(q.density, 1.34248, 5e-5);
  EXPECT_NEAR(q.config.h1, 0.67445, 5e-5);
  EXPECT_NEAR(q.config.h2, 1.35737, 5e-5);

  q = minimize_noncongruent(embed(7, 3, 8), EdgeId::A1A2);
  EXPECT_NEAR(q.density, 1.28228, 5e-5);
  EXPECT_NEAR(q.config.h1, 1.53709, 5e-5);
  EXPECT_NEAR(q.config.h2, 1.22995, 5e-5);
}

TEST(Minimize, SwappedPairAndDuality) {
  const auto a = minimize_noncongruent(embed(5, 4, 6), EdgeId::A1A2);
  const auto b = minimize_noncongruent(embed(6, 4, 5), EdgeId::A1A2);
  EXPECT_NEAR(a.density, 1.34255, 5e-5);
  EXPECT_NEAR(a.config.h1, 1.26048, 5e-5);
  EXPECT_NEAR(a.config.h2, 0.95234, 5e-5);
  EXPECT_NEAR(a.density, b.density, 1e-8);
  EXPECT_NEAR(a.config.h1, b.config.h2, 1e-8);
  EXPECT_NEAR(a.config.h2, b.config.h1, 1e-8);
  for (auto [u, v, w] : {std::tuple{3.0, 8.0, 4.0}, {4.0, 5.0, 5.0}, {7.0, 3.0, 8.0}}) {
    const auto x = minimize_noncongruent(embed(u, v, w), EdgeId::A1A2);
    const auto y = minimize_noncongruent(embed(w, v, u), EdgeId::A1A2);
    EXPECT_NEAR(x.density, y.density, 1e-8);
    EXPECT_NEAR(x.config.h1, y.config.h2, 1e-8);
  }
}

TEST(Minimize, RejectsNeverFeasibleContacts) {
  for (EdgeId e : {EdgeId::EA1, EdgeId::LA2, EdgeId::JH}) {
    EXPECT_EQ(code_of([&] { minimize_noncongruent(o737(), e); }), Errc::InvalidArgument);
  }
}

TEST(Minimize, FeasibleResultsExceedOne) {
  for (auto [u, v, w] : {std::tuple{3.0, 7.0, 3.0}, {4.0, 6.0, 4.0}, {7.0, 4.0, 5.0}, {5.0, 5.0, 4.0}}) {
    const auto o = embed(u, v, w);
    for (EdgeId e : {EdgeId::QA2, EdgeId::CA1, EdgeId::A1A2}) {
      const auto r = minimize_noncongruent(o, e);
      EXPECT_TRUE(r.config.feasible);
      EXPECT_GT(r.density, 1.0);
    }
  }
}

TEST(Minimize, RobustToGridDensity) {
  for (auto [u, v, w, e] : {std::tuple{3.0, 7.0, 3.0, EdgeId::QA2}, {7.0, 3.0, 8.0, EdgeId::A1A2},
                            {5.0, 4.0, 5.0, EdgeId::CA1}}) {
    const auto o = embed(u, v, w);
    std::vector<double> ts, ds;
    for (int n : {65, 257, 1025}) {
      SearchOptions s;
      s.grid_samples = n;
      const auto r = minimize_noncongruent(o, e, s);
      ts.push_back(r.config.t);
      ds.push_back(r.density);
    }
    EXPECT_NEAR(ts[0], ts[1], 1e-6);
    EXPECT_NEAR(ts[1], ts[2], 1e-6);
    EXPECT_NEAR(ds[0], ds[2], 1e-12);
  }
}

TEST(Minimize, DensityGrowsAlongSeriesAtQA2) {
  const std::vector<std::vector<std::tuple<double, double, double>>> chains{
      {{3, 7, 3}, {3, 8, 3}},
      {{4, 5, 4}, {4, 6, 4}, {5, 5, 4}, {6, 5, 4}},
      {{5, 4, 5}, {6, 4, 5}, {7, 4, 5}},
  };
  for (const auto& chain : chains) {
    double last = 0.0;
    for (auto [u, v, w] : chain) {
      const double d = minimize_noncongruent(embed(u, v, w), EdgeId::QA2).density;
      EXPECT_GT(d, last) << u << "," << v << "," << w;
      last = d;
    }
  }
}

TEST(Congruent, Examples) {
  auto c = solve_congruent(embed(4, 6, 4));
  EXPECT_NEAR(c.density, 1.45714, 5e-5);
  EXPECT_NEAR(c.config.h1, 0.99583, 5e-5);
  EXPECT_NEAR(c.config.h1, c.config.h2, 1e-10);
  c = solve_congruent(embed(7, 3, 8));
  EXPECT_NEAR(c.density, 1.36586, 5e-5);
  EXPECT_NEAR(c.config.h1, 1.39916, 5e-5);
  EXPECT_TRUE(c.config.feasible);
  // Not the optimum here: the non-congruent configuration is thinner.
  EXPECT_LT(minimize_noncongruent(embed(7, 3, 8), EdgeId::A1A2).density, c.density - 0.05);
}

TEST(Congruent, SymmetricParamsMatchNoncongruentOptimum) {
  for (auto [u, v, w] : {std::tuple{7.0, 3.0, 7.0}, {3.0, 7.0, 3.0}, {4.0, 5.0, 4.0}, {6.0, 4.0, 6.0}}) {
    const auto o = embed(u, v, w);
    const auto c = solve_congruent(o);
    const auto n = minimize_noncongruent(o, EdgeId::A1A2);
    EXPECT_NEAR(c.config.h1, c.config.h2, 1e-10);
    EXPECT_NEAR(c.density, n.density, 1e-10);
    EXPECT_NEAR(c.config.t, n.config.t, 1e-6);
  }
}

TEST(Congruent, NoEqualHeightPointOnQA2OrCA1) {
  for (auto [u, v, w] : {std::tuple{7.0, 3.0, 7.0}, {3.0, 7.0, 3.0}, {5.0, 4.0, 6.0}}) {
    const auto o = embed(u, v, w);
    EXPECT_EQ(code_of([&] { solve_congruent(o, EdgeId::QA2); }), Errc::NoRoot);
    EXPECT_EQ(code_of([&] { solve_congruent(o, EdgeId::CA1); }), Errc::NoRoot);
  }
}

TEST(Family, BeatsRecordAndIsLocal) {
  const auto f = optimize_family_u37(6.05, 6.95);
  EXPECT_GT(f.u_star, 6.05);
  EXPECT_LT(f.u_star, 6.95);
  EXPECT_FALSE(f.extendable);
  EXPECT_LT(f.best.density, 1.26829);
  EXPECT_NEAR(f.best.density, 1.26454, 5e-5);
  EXPECT_TRUE(f.best.config.feasible);
  EXPECT_EQ(code_of([] { optimize_family_u37(5.9, 6.5); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { optimize_family_u37(6.5, 6.4); }), Errc::InvalidArgument);
}

TEST(Family, ContinuousAtIntegerBoundary) {
  const double at7 = minimize_noncongruent(o737(), EdgeId::A1A2).density;
  const double near7 = minimize_noncongruent(embed(7.0 - 1e-6, 3, 7), EdgeId::A1A2).density;
  EXPECT_NEAR(near7, at7, 1e-5);
  EXPECT_NEAR(at7, 1.26829, 5e-5);
}
