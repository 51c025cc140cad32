#include "hfcalc/exterior.hpp"

#include <sstream>

namespace hfc {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Int dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_primitive(const Vec3& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g == 1;
}

Int det3(const ZMat& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DomainError("expected 3x3 matrix");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool is_unimodular(const ZMat& m) {
  Int d = det3(m);
  return d == 1 || d == -1;
}

ZMat adjugate3(const ZMat& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DomainError("expected 3x3 matrix");
  ZMat a(3, 3);
  auto cof = [&](int r, int c) {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
    int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  // adj(m)(i, j) = cofactor(j, i); the cyclic index trick absorbs the signs
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = cof(j, i);
  return a;
}

Vec3 apply3(const ZMat& m, const Vec3& v) {
  Vec3 out{Int(0), Int(0), Int(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m(i, j) * v[j];
  return out;
}

Rat T3Class::degree() const {
  Rat base = part == Lambda2 ? make_rat(-3, 2) : make_rat(-5, 2);
  return base - Rat(2 * u_power);
}

std::string T3Class::str() const {
  std::ostringstream out;
  out << (part == Lambda2 ? "L2" : "L1") << "(" << coords[0].str() << ","
      << coords[1].str() << "," << coords[2].str() << ")";
  if (u_power) out << "*U^" << u_power;
  if (sign_ambiguous) out << " (up to sign)";
  return out.str();
}

T3Class t3_theta_image(const Vec3& c) {
  if (!is_primitive(c))
    throw DomainError("theta image must be dual to a primitive curve");
  T3Class x;
  x.part = T3Class::Lambda2;
  x.coords = c;
  x.u_power = 0;
  x.sign_ambiguous = true;
  return x;
}

T3Class contract(const T3Class& x, const Vec3& c) {
  if (x.part != T3Class::Lambda2)
    throw DomainError("contraction is defined on Lambda^2 classes here");
  T3Class out;
  out.part = T3Class::Lambda1;
  out.coords = cross(x.coords, c);
  out.u_power = x.u_power;
  out.sign_ambiguous = x.sign_ambiguous;
  return out;
}

T3Class cylinder_action(const ZMat& phi, const T3Class& x) {
  if (!is_unimodular(phi))
    throw DomainError("mapping cylinder requires a unimodular matrix");
  T3Class out = x;
  if (x.part == T3Class::Lambda2) {
    out.coords = apply3(phi, x.coords);
  } else {
    ZMat adj = adjugate3(phi);
    ZMat adj_t(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) adj_t(i, j) = adj(j, i);
    out.coords = apply3(adj_t, x.coords);
  }
  return out;
}

}  // namespace hfc
