#include "hfcalc/grading.hpp"

namespace hfc {

Rat degree_shift(const CobordismData& d) {
  return (d.c1_square - Rat(3 * d.signature) - Rat(2 * d.euler)) / Rat(4);
}

Rat tau(std::int64_t n, std::int64_t k) {
  if (n == 0) throw DomainError("tau requires n != 0");
  Int an = n < 0 ? -n : n;
  Int ak = k < 0 ? -k : k;
  Int num = an - (2 * ak - an) * (2 * ak - an);
  return make_rat(num, 4 * an);
}

Rat reduced_support_degree(std::int64_t g, std::int64_t k) {
  if (g < 1) throw DomainError("genus must be positive");
  Int ak = k < 0 ? -k : k;
  return Rat(-ak) + tau(1 - 2 * g, k);
}

std::pair<Rat, Rat> relative_invariant_degree(std::int64_t n, std::int64_t g) {
  if (n >= 0)
    throw DomainError("relative_invariant_degree is derived for n < 0");
  if (g < 1) throw DomainError("genus must be positive");
  Int nn(n);
  Int a = Int(2 * g - 2) - nn;
  Int num = -4 * nn - a * a - Int(1 + 4 * g) * nn;
  Rat d_minus = make_rat(num, 4 * nn);
  return {d_minus, -d_minus - 2};
}

std::pair<Rat, Rat> relative_invariant_degree_family(std::int64_t g) {
  if (g < 1) throw DomainError("genus must be positive");
  // At n = 2-2g the numerator of d- factors as -2(4g-13)(g-1) against the
  // denominator -8(g-1); the cancelled form extends to g = 1.
  Rat d_minus = make_rat(Int(4 * g - 13), 4);
  return {d_minus, -d_minus - 2};
}

Int BlowupLattice::a_square_via_form() const {
  ZMat at(1, 2);
  at(0, 0) = a(0, 0);
  at(0, 1) = a(1, 0);
  ZMat q = zmat_mul(zmat_mul(at, intersection_form), a);
  return q(0, 0);
}

bool BlowupLattice::a_in_kernel_of_b() const {
  ZMat img = zmat_mul(b_map, a);
  return img(0, 0) == 0;
}

ZMat BlowupLattice::c_of_a() const {
  ZMat coord(2, 1);
  coord(0, 0) = 0;
  coord(1, 0) = 1;
  return zmat_mul(c_map, coord);
}

std::pair<Int, Int> BlowupLattice::canonical_restriction(std::int64_t g) const {
  // K~ = (2g-2-n) s*_n - e* in the dual basis; apply C^T
  ZMat k(2, 1);
  k(0, 0) = Int(2 * g - 2) - Int(n);
  k(1, 0) = -1;
  ZMat ct(2, 2);
  ct(0, 0) = c_map(0, 0);
  ct(0, 1) = c_map(1, 0);
  ct(1, 0) = c_map(0, 1);
  ct(1, 1) = c_map(1, 1);
  ZMat out = zmat_mul(ct, k);
  return {out(0, 0), out(1, 0)};
}

bool BlowupLattice::restriction_identities() const {
  ZMat s_star(2, 1);
  s_star(0, 0) = 1;
  s_star(1, 0) = 0;
  ZMat ct(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ct(i, j) = c_map(j, i);
  ZMat out = zmat_mul(ct, s_star);
  return out(0, 0) == 1 && out(1, 0) == 1;
}

BlowupLattice blowup_lattice(std::int64_t n) {
  BlowupLattice lat;
  lat.n = n;
  lat.intersection_form = ZMat(2, 2, Int(0));
  lat.intersection_form(0, 0) = n;
  lat.intersection_form(1, 1) = -1;
  lat.a = ZMat(2, 1);
  lat.a(0, 0) = 1;
  lat.a(1, 0) = -Int(n);
  lat.b_map = ZMat(1, 2);
  lat.b_map(0, 0) = n;
  lat.b_map(0, 1) = 1;
  lat.c_map = ZMat(2, 2);
  lat.c_map(0, 0) = 1;
  lat.c_map(0, 1) = 1;
  lat.c_map(1, 0) = -1;
  lat.c_map(1, 1) = -Int(n);
  return lat;
}

Int spinc_family_c1(std::int64_t l, std::int64_t m, std::int64_t g) {
  if (g < 1) throw DomainError("genus must be positive");
  return Int(2 * g - 2) * (Int(2 * g - 1) * Int(2 * m + 1) - Int(2 * l));
}

std::int64_t adjunction(std::int64_t g, std::int64_t n) { return 2 * g - 2 - n; }

const DegreeProfileRow& DegreeProfile::row(std::int64_t ell) const {
  for (const auto& r : rows)
    if (r.ell == ell) return r;
  throw DomainError("degree profile has no such row");
}

DegreeProfile blowup_degree_profile(std::int64_t g) {
  if (g < 2) throw DomainError("blowup_degree_profile requires g >= 2");
  DegreeProfile profile;
  profile.g = g;
  // a^2 = -(2g-1)(2g-2) on the cobordism between squares 2-2g and 1-2g,
  // so (a*)^2 = -1/((2g-1)(2g-2)); sigma = -1 and e = 1.
  BlowupLattice lat = blowup_lattice(2 - 2 * g);
  Int a_sq = lat.a_square_via_form();
  Rat a_star_sq = make_rat(1, a_sq);

  for (std::int64_t ell = -(g - 1); ell <= g - 1; ++ell) {
    DegreeProfileRow row;
    row.ell = ell;
    if (ell > 0)
      row.m_candidates = {0};
    else if (ell < 0)
      row.m_candidates = {-1};
    else
      row.m_candidates = {0, -1};
    row.c1_coefficient = spinc_family_c1(ell, row.m_candidates.front(), g);
    CobordismData data;
    data.c1_square = Rat(row.c1_coefficient * row.c1_coefficient) * a_star_sq;
    data.signature = -1;
    data.euler = 1;
    row.cobordism_shift = degree_shift(data);
    row.bottom_degree = reduced_support_degree(g, ell);
    row.degree_sum = row.bottom_degree + row.cobordism_shift;
    Int al = ell < 0 ? -ell : ell;
    row.printed_quadratic =
        Rat(-Int(ell) * Int(ell) + Int(2 * g - 2) * al) -
        make_rat(Int(2 * g - 1) * Int(2 * g - 1), 4);
    row.discrepancy = row.degree_sum - row.printed_quadratic;
    profile.rows.push_back(row);
  }

  profile.max_degree_sum = profile.rows.front().degree_sum;
  for (const auto& r : profile.rows)
    if (r.degree_sum > profile.max_degree_sum)
      profile.max_degree_sum = r.degree_sum;
  for (const auto& r : profile.rows)
    if (r.degree_sum == profile.max_degree_sum)
      profile.argmax_ells.push_back(r.ell);

  profile.strictly_increasing_below_top = true;
  for (std::int64_t ell = 0; ell + 1 <= g - 1; ++ell)
    if (!(profile.row(ell).degree_sum < profile.row(ell + 1).degree_sum))
      profile.strictly_increasing_below_top = false;
  return profile;
}

}  // namespace hfc
