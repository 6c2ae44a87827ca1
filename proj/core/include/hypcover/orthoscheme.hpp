#pragma once

// Doubly truncated Coxeter orthoschemes {u,v,w} in the projective model of H^3.
//
// The principal vertices A0 and A3 are outer points; they are cut off by their
// polar planes pi0 = Pol(A0) (face HLC) and pi3 = Pol(A3) (face QEJ). The
// remaining body has proper vertices Q, E, J (on pi3), H, L, C (on pi0), A1, A2.

#include <array>
#include <string>

#include "hypcover/lorentz.hpp"

namespace hypcover {

using lorentz::ProjForm4;
using lorentz::ProjPoint4;

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Which integer series {u,v,w} belongs to, if any.
enum class Series {
  VAtLeast7,   ///< u >= 3, v >= 7, w >= 3
  V5or6,       ///< u >= 4, v in {5,6}, w >= 4
  V4,          ///< u >= 5, v = 4, w >= 5
  V3,          ///< u >= 7, v = 3, w >= 7
  RealFamily,  ///< admissible but non-integer: local configuration only
};

const char* to_string(Series s) noexcept;

struct SchlafliParams {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  Series series = Series::RealFamily;
  /// True when the reflection images tile all of H^3 (integer parameters).
  bool extendable = false;
};

/// Validates admissibility and tags the series. Throws Errc::Inadmissible with
/// the violated inequality in the message.
SchlafliParams classify_params(double u, double v, double w);

/// Coxeter-Schlafli matrix b, its inverse h (closed form) and det(b).
struct GramPair {
  Mat4 b{};
  Mat4 h{};
  double det = 0.0;
};

GramPair gram(const SchlafliParams& params);

/// Coordinates of the model placement:
///   Q=(1,0,0,0)  E=(1,0,y,0)  J=(1,x,y,0)  A0=(1,x,y,-z0)  A1=(1,0,y,-z1)
///   A2=(1,0,0,-z2)  H=(1,x,y,-zH)  L=(1-t1)A2+t1*A0  C=(1-t2)A1+t2*A0.
struct Placement {
  double x = 0.0, y = 0.0;
  double z0 = 0.0, z1 = 0.0, z2 = 0.0, zH = 0.0;
  double t1 = 0.0, t2 = 0.0;
};

enum class Vertex { Q, E, J, H, L, C, A1, A2 };
inline constexpr std::array<Vertex, 8> kAllVertices{Vertex::Q, Vertex::E, Vertex::J, Vertex::H,
                                                    Vertex::L, Vertex::C, Vertex::A1, Vertex::A2};
const char* to_string(Vertex v) noexcept;

class TruncatedOrthoscheme {
 public:
  TruncatedOrthoscheme(SchlafliParams params, GramPair gram, std::array<ProjPoint4, 4> principal,
                       std::array<ProjPoint4, 8> vertices, Placement placement);

  const SchlafliParams& params() const noexcept { return params_; }
  const GramPair& gram() const noexcept { return gram_; }
  const Placement& placement() const noexcept { return placement_; }

  /// Vertex vectors a0..a3 with <ai,ai> = -1 (A1, A2) or +1 (A0, A3) and
  /// <ai,aj> = h_ij / sqrt(|h_ii h_jj|).
  const ProjPoint4& principal(int i) const { return principal_.at(static_cast<std::size_t>(i)); }

  /// Proper vertex in the affine chart (x0 = 1).
  const ProjPoint4& vertex(Vertex v) const noexcept { return vertices_[static_cast<std::size_t>(v)]; }

  /// pi0 = Pol(A0), the plane of HLC.
  const ProjForm4& pi0() const noexcept { return pi0_; }
  /// pi3 = Pol(A3), the plane of QEJ.
  const ProjForm4& pi3() const noexcept { return pi3_; }

 private:
  SchlafliParams params_;
  GramPair gram_;
  std::array<ProjPoint4, 4> principal_;
  std::array<ProjPoint4, 8> vertices_;
  ProjForm4 pi0_;
  ProjForm4 pi3_;
  Placement placement_;
};

/// Builds the coordinates of the truncated orthoscheme. Throws
/// Errc::EmbeddingFailure if the Gram matrix has the wrong signature.
TruncatedOrthoscheme embed(const SchlafliParams& params);

inline TruncatedOrthoscheme embed(double u, double v, double w) {
  return embed(classify_params(u, v, w));
}

/// d(Q,E), d(Q,J), d(E,A1), d(Q,A2), d(J,H) from the entries of h alone.
struct EdgeLengths {
  double QE = 0.0;
  double QJ = 0.0;
  double EA1 = 0.0;
  double QA2 = 0.0;
  double JH = 0.0;
};

EdgeLengths closed_form_distances(const GramPair& gram);

/// The same five lengths measured on the embedded coordinates.
EdgeLengths coordinate_distances(const TruncatedOrthoscheme& o);

}  // namespace hypcover
