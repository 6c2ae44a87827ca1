#pragma once

// One-dimensional search used by the covering optimizers: a uniform grid
// locates the basin, golden-section refinement polishes the minimizer.
// Infeasible samples are expected to report +infinity.

#include <cmath>
#include <limits>
#include <numbers>

#include "hypcover/error.hpp"

namespace hypcover {

struct SearchOptions {
  int grid_samples = 257;
  double tolerance = 1e-12;
  int max_iterations = 500;
};

struct ScalarMinimum {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
  int grid_samples = 0;
  int finite_samples = 0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

template <class F>
ScalarMinimum grid_golden_minimize(F&& f, double lo, double hi, const SearchOptions& opts = {}) {
  if (!(hi > lo)) throw Error(Errc::InvalidArgument, "empty search interval");
  if (opts.grid_samples < 3) throw Error(Errc::InvalidArgument, "grid needs at least 3 samples");
  if (!(opts.tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");

  ScalarMinimum best;
  best.grid_samples = opts.grid_samples;
  const int n = opts.grid_samples;
  const double step = (hi - lo) / (n - 1);
  int best_i = -1;
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? hi : lo + i * step;
    const double v = f(x);
    if (std::isfinite(v)) {
      ++best.finite_samples;
      if (v < best.value) {
        best.value = v;
        best.x = x;
        best_i = i;
      }
    }
  }
  if (best_i < 0) throw Error(Errc::NoFeasiblePoint, "no feasible sample on the search grid");

  double a = best_i == 0 ? lo : lo + (best_i - 1) * step;
  double b = best_i == n - 1 ? hi : lo + (best_i + 1) * step;
  best.bracket_lo = a;
  best.bracket_hi = b;

  const double inv_phi = 1.0 / std::numbers::phi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  auto consider = [&best](double x, double v) {
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
  };
  consider(c, fc);
  consider(d, fd);
  while (b - a > opts.tolerance && best.iterations < opts.max_iterations) {
    ++best.iterations;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

/// Root of a continuous f on [lo, hi] by bisection. Throws Errc::NoRoot when
/// f(lo) and f(hi) have the same strict sign.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol = 1e-15, int max_iterations = 300) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw Error(Errc::NoRoot, "no sign change on the interval");
  for (int i = 0; i < max_iterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hypcover
