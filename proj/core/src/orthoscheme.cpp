#include "hypcover/orthoscheme.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hypcover {

namespace {

using lorentz::bilinear;
using lorentz::meet;
using lorentz::polar;

constexpr double kPi = std::numbers::pi;
constexpr double kIntegerTol = 1e-12;
constexpr double kBoundaryTol = 1e-12;

bool is_integer(double x) { return std::abs(x - std::round(x)) < kIntegerTol; }

[[noreturn]] void inadmissible(double u, double v, double w, const std::string& why) {
  std::ostringstream os;
  os << "{" << u << "," << v << "," << w << "}: " << why;
  throw Error(Errc::Inadmissible, os.str());
}

double checked_acosh(double c) {
  if (!std::isfinite(c) || c < 1.0 - lorentz::kAcoshSlack) {
    throw Error(Errc::DomainError, "closed-form cosh value below 1");
  }
  return std::acosh(std::max(1.0, c));
}

}  // namespace

const char* to_string(Series s) noexcept {
  switch (s) {
    case Series::VAtLeast7: return "u>=3,v>=7,w>=3";
    case Series::V5or6: return "u>=4,v=5|6,w>=4";
    case Series::V4: return "u>=5,v=4,w>=5";
    case Series::V3: return "u>=7,v=3,w>=7";
    case Series::RealFamily: return "real-parameter";
  }
  return "?";
}

const char* to_string(Vertex v) noexcept {
  switch (v) {
    case Vertex::Q: return "Q";
    case Vertex::E: return "E";
    case Vertex::J: return "J";
    case Vertex::H: return "H";
    case Vertex::L: return "L";
    case Vertex::C: return "C";
    case Vertex::A1: return "A1";
    case Vertex::A2: return "A2";
  }
  return "?";
}

SchlafliParams classify_params(double u, double v, double w) {
  if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w)) {
    inadmissible(u, v, w, "parameters must be finite");
  }
  if (u < 3.0 || v < 3.0 || w < 3.0) inadmissible(u, v, w, "requires u, v, w >= 3");

  const double su = std::sin(kPi / u), sw = std::sin(kPi / w), cv = std::cos(kPi / v);
  const double det = su * su * sw * sw - cv * cv;
  if (!(det < 0.0)) inadmissible(u, v, w, "B = sin^2(pi/u) sin^2(pi/w) - cos^2(pi/v) >= 0");
  if (!(1.0 / u + 1.0 / v < 0.5 - kBoundaryTol)) {
    inadmissible(u, v, w, "1/u + 1/v < 1/2 violated (A0 is not an outer vertex)");
  }
  if (!(1.0 / w + 1.0 / v < 0.5 - kBoundaryTol)) {
    inadmissible(u, v, w, "1/w + 1/v < 1/2 violated (A3 is not an outer vertex)");
  }

  SchlafliParams p{u, v, w, Series::RealFamily, false};

  // Line A0A3 must cross the model; otherwise the truncation degenerates.
  const auto g = gram(p);
  const double h00 = g.h[0][0], h03 = g.h[0][3], h33 = g.h[3][3];
  if (!(h03 * h03 > h00 * h33 * (1.0 + kBoundaryTol))) {
    inadmissible(u, v, w, "line A0A3 misses the model (Lambert cube case)");
  }

  if (is_integer(u) && is_integer(v) && is_integer(w)) {
    const long iv = std::lround(v);
    p.extendable = true;
    if (iv >= 7) {
      p.series = Series::VAtLeast7;
    } else if (iv == 5 || iv == 6) {
      p.series = Series::V5or6;
    } else if (iv == 4) {
      p.series = Series::V4;
    } else {
      p.series = Series::V3;
    }
  }
  return p;
}

GramPair gram(const SchlafliParams& params) {
  const double cu = std::cos(kPi / params.u), cv = std::cos(kPi / params.v),
               cw = std::cos(kPi / params.w);
  const double su2 = std::pow(std::sin(kPi / params.u), 2);
  const double sw2 = std::pow(std::sin(kPi / params.w), 2);

  GramPair g;
  g.b = {{{1.0, -cu, 0.0, 0.0}, {-cu, 1.0, -cv, 0.0}, {0.0, -cv, 1.0, -cw}, {0.0, 0.0, -cw, 1.0}}};
  g.det = su2 * sw2 - cv * cv;

  const double B = g.det;
  const Mat4 num = {{{sw2 - cv * cv, cu * sw2, cu * cv, cu * cv * cw},
                     {cu * sw2, sw2, cv, cw * cv},
                     {cu * cv, cv, su2, cw * su2},
                     {cu * cv * cw, cw * cv, cw * su2, su2 - cv * cv}}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g.h[i][j] = num[i][j] / B;
  }
  return g;
}

TruncatedOrthoscheme::TruncatedOrthoscheme(SchlafliParams params, GramPair gram,
                                           std::array<ProjPoint4, 4> principal,
                                           std::array<ProjPoint4, 8> vertices, Placement placement)
    : params_(params),
      gram_(gram),
      principal_(principal),
      vertices_(vertices),
      pi0_(polar(principal[0])),
      pi3_(polar(principal[3])),
      placement_(placement) {}

TruncatedOrthoscheme embed(const SchlafliParams& params) {
  const GramPair g = gram(params);

  // Normalized Gram matrix of unit vertex vectors.
  Mat4 G{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      G[i][j] = g.h[i][j] / std::sqrt(std::abs(g.h[i][i] * g.h[j][j]));
    }
  }

  // Signed Cholesky factorization. Vertices are taken in the order A3, A2,
  // A1, A0 and each one introduces one new axis (x3, x0, x2, x1), which yields
  // the lower-triangular coordinate pattern of the model placement directly.
  constexpr std::array<std::size_t, 4> order{3, 2, 1, 0};
  constexpr std::array<std::size_t, 4> axis{3, 0, 2, 1};
  auto metric = [](std::size_t ax) { return ax == 0 ? -1.0 : 1.0; };

  double c[4][4] = {};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = G[order[k]][order[j]];
      for (std::size_t m = 0; m < j; ++m) s -= c[k][m] * c[j][m] * metric(axis[m]);
      c[k][j] = s / (c[j][j] * metric(axis[j]));
    }
    double pivot = G[order[k]][order[k]];
    for (std::size_t m = 0; m < k; ++m) pivot -= metric(axis[m]) * c[k][m] * c[k][m];
    pivot *= metric(axis[k]);
    if (!(pivot > 0.0)) {
      throw Error(Errc::EmbeddingFailure, "Gram matrix does not have Lorentzian signature (1,3)");
    }
    c[k][k] = std::sqrt(pivot);
  }

  std::array<std::array<double, 4>, 4> raw{};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t m = 0; m <= k; ++m) raw[order[k]][axis[m]] = c[k][m];
  }
  // Reflect coordinate axes so that x, y, z2 come out positive.
  std::array<double, 4> flip{1.0, 1.0, 1.0, 1.0};
  if (raw[2][3] / raw[2][0] > 0.0) flip[3] = -1.0;
  if (raw[1][2] / raw[1][0] < 0.0) flip[2] = -1.0;
  if (raw[0][0] != 0.0 && raw[0][1] / raw[0][0] < 0.0) flip[1] = -1.0;
  for (auto& r : raw) {
    for (std::size_t i = 0; i < 4; ++i) r[i] *= flip[i];
  }

  const std::array<ProjPoint4, 4> a{ProjPoint4(raw[0]), ProjPoint4(raw[1]), ProjPoint4(raw[2]),
                                    ProjPoint4(raw[3])};
  const ProjForm4 pi0 = polar(a[0]);
  const ProjForm4 pi3 = polar(a[3]);

  auto proper_chart = [](const ProjPoint4& p, const char* name) {
    if (!lorentz::is_proper(p)) {
      throw Error(Errc::EmbeddingFailure, std::string("vertex ") + name + " is not proper");
    }
    return p.chart();
  };

  const ProjPoint4 A1 = proper_chart(a[1], "A1");
  const ProjPoint4 A2 = proper_chart(a[2], "A2");
  const ProjPoint4 Q = proper_chart(meet(a[2], a[3], pi3), "Q");
  const ProjPoint4 E = proper_chart(meet(a[1], a[3], pi3), "E");
  const ProjPoint4 J = proper_chart(meet(a[0], a[3], pi3), "J");
  const ProjPoint4 H = proper_chart(meet(a[3], a[0], pi0), "H");

  if (a[0][0] == 0.0) throw Error(Errc::EmbeddingFailure, "A0 lies at infinity of the chart");
  const ProjPoint4 A0 = a[0].chart();

  // L and C from the incidence <P, a0> = 0, linear in the chart parameter.
  auto solve_on_segment = [&](const ProjPoint4& from, const char* name) {
    const double f0 = bilinear(from, pi0);
    const double f1 = bilinear(A0, pi0);
    if (f0 == f1) throw Error(Errc::EmbeddingFailure, std::string("edge to ") + name + " is parallel to pi0");
    return f0 / (f0 - f1);
  };
  Placement pl;
  pl.t1 = solve_on_segment(A2, "L");
  pl.t2 = solve_on_segment(A1, "C");
  const ProjPoint4 L = proper_chart(lorentz::combine(1.0 - pl.t1, A2, pl.t1, A0), "L");
  const ProjPoint4 C = proper_chart(lorentz::combine(1.0 - pl.t2, A1, pl.t2, A0), "C");

  pl.x = J[1];
  pl.y = E[2];
  pl.z0 = -A0[3];
  pl.z1 = -A1[3];
  pl.z2 = -A2[3];
  pl.zH = -H[3];

  return TruncatedOrthoscheme(params, g, a, {Q, E, J, H, L, C, A1, A2}, pl);
}

EdgeLengths closed_form_distances(const GramPair& g) {
  const auto& h = g.h;
  const double h00 = h[0][0], h02 = h[0][2], h03 = h[0][3];
  const double h11 = h[1][1], h12 = h[1][2], h13 = h[1][3];
  const double h22 = h[2][2], h23 = h[2][3], h33 = h[3][3];

  const double mq = h22 * h33 - h23 * h23;  // <q,q>/h33
  const double me = h11 * h33 - h13 * h13;  // <e,e>/h33
  const double mj = h00 * h33 - h03 * h03;  // <j,j>/h33

  EdgeLengths d;
  d.QE = checked_acosh(std::abs(h13 * h23 - h12 * h33) / std::sqrt(mq * me));
  d.QJ = checked_acosh(std::abs(h03 * h23 - h02 * h33) / std::sqrt(mq * mj));
  d.EA1 = checked_acosh(std::sqrt(me / (h11 * h33)));
  d.QA2 = checked_acosh(std::sqrt(mq / (h22 * h33)));
  // j ~ a0 h33 - a3 h03 and h ~ a3 h00 - a0 h03 give <j,h> = h03 (h03^2 - h00 h33).
  d.JH = checked_acosh(std::abs(h03) / std::sqrt(h00 * h33));
  return d;
}

EdgeLengths coordinate_distances(const TruncatedOrthoscheme& o) {
  using lorentz::distance;
  EdgeLengths d;
  d.QE = distance(o.vertex(Vertex::Q), o.vertex(Vertex::E));
  d.QJ = distance(o.vertex(Vertex::Q), o.vertex(Vertex::J));
  d.EA1 = distance(o.vertex(Vertex::E), o.vertex(Vertex::A1));
  d.QA2 = distance(o.vertex(Vertex::Q), o.vertex(Vertex::A2));
  d.JH = distance(o.vertex(Vertex::J), o.vertex(Vertex::H));
  return d;
}

}  // namespace hypcover
