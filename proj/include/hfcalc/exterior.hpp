#pragma once

#include <array>
#include <string>

#include "hfcalc/matrix.hpp"

namespace hfc {

using Vec3 = std::array<Int, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
Int dot(const Vec3& a, const Vec3& b);
bool is_primitive(const Vec3& v);

Int det3(const ZMat& m);
bool is_unimodular(const ZMat& m);
// det(m) * m^{-1}, integral for any integer matrix
ZMat adjugate3(const ZMat& m);
Vec3 apply3(const ZMat& m, const Vec3& v);

/// Homogeneous class in the standard model of the Floer homology of the
/// 3-torus: (Lambda^2 + Lambda^1) H^1 tensor Z[U], with Lambda^2 in degree
/// -3/2 and Lambda^1 in degree -5/2, U of degree -2. Lambda^2 coordinates
/// are taken in the basis dual to the three coordinate circles (the
/// Poincare duals), so the dual of a curve c has coordinates c itself.
struct T3Class {
  enum Part { Lambda2, Lambda1 };
  Part part = Lambda2;
  Vec3 coords{Int(0), Int(0), Int(0)};
  int u_power = 0;
  bool sign_ambiguous = false;

  Rat degree() const;
  bool operator==(const T3Class&) const = default;
  std::string str() const;
};

/// Image of the top generator under the cap cobordism: the Lambda^2 class
/// Poincare dual to the primitive curve c, defined up to sign. Contraction
/// against c annihilates it.
T3Class t3_theta_image(const Vec3& c);

/// Contraction of a Lambda^2 class by a curve class; in the chosen bases
/// this is the cross product of the coordinate vectors.
T3Class contract(const T3Class& x, const Vec3& c);

/// Action of the mapping cylinder of a diffeomorphism with matrix phi on
/// H_1(T^3): duals of curves map by (phi c)^*, i.e. Lambda^2 coordinates
/// transform by phi itself; Lambda^1 coordinates by the transposed adjugate
/// (integral since det phi = +-1).
T3Class cylinder_action(const ZMat& phi, const T3Class& x);

}  // namespace hfc
