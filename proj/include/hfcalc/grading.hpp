#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hfcalc/matrix.hpp"

namespace hfc {

struct CobordismData {
  Rat c1_square;
  std::int64_t signature = 0;
  std::int64_t euler = 0;
};

/// (c1^2 - 3*sigma - 2*e) / 4, the degree shift of a cobordism map.
Rat degree_shift(const CobordismData& d);

/// tau_{n,k} = (|n| - (2|k| - |n|)^2) / (4|n|), the grading shift of the
/// surgery cobordism in the spin^c structure labeled k.
Rat tau(std::int64_t n, std::int64_t k);

/// D(k) = -|k| + tau_{1-2g,k} = -k^2/(2g-1) - (g-1)/2, the degree carrying
/// the reduced Floer homology of Y_{1-2g}.
Rat reduced_support_degree(std::int64_t g, std::int64_t k);

/// Degree of the relative invariant of the complement of a genus-g surface
/// of square n < 0, and its dual degree d+ = -d- - 2.
std::pair<Rat, Rat> relative_invariant_degree(std::int64_t n, std::int64_t g);

/// The same pair along the family n = 2-2g, with the common factor (g-1)
/// cancelled so the value (g - 13/4, 5/4 - g) extends to g = 1.
std::pair<Rat, Rat> relative_invariant_degree_family(std::int64_t g);

/// Second homology of the blowup cobordism W between circle-bundle
/// neighborhoods: basis {s_n, e} with intersection form diag(n, -1), the
/// generator a = s_n - n e of ker B, and the Mayer-Vietoris matrix C.
struct BlowupLattice {
  std::int64_t n = 0;
  ZMat intersection_form;  // 2x2 diag(n, -1)
  ZMat a;                  // 2x1 column, a = s_n - n*e
  ZMat b_map;              // 1x2, x -> (x . s_{n-1}) d
  ZMat c_map;              // 2x2, [[1,1],[-1,-n]]

  Int a_square_via_form() const;   // a^T Q a, matrix arithmetic only
  Int a_square_closed_form() const { return Int(-n) * Int(n - 1); }
  bool a_in_kernel_of_b() const;
  // C applied to the coordinate column of a in the basis (s_{n-1}, a)
  ZMat c_of_a() const;
  // components of C^*(K~) = (2g-1-n) s*_{n-1} + (2g-2) a*
  std::pair<Int, Int> canonical_restriction(std::int64_t g) const;
  // C^*(s*_n) = s*_{n-1} + a*, the equation behind the boundary restriction
  // identities a*|_{Y_{n-1}} = s*_{n-1}| and a*|_{Y_n} = s*_n|
  bool restriction_identities() const;
};

BlowupLattice blowup_lattice(std::int64_t n);

/// (2g-2) * ((2g-1)(2m+1) - 2l), the a*-coefficient of c_1 of the spin^c
/// family r_{l,m} on the blowup cobordism.
Int spinc_family_c1(std::int64_t l, std::int64_t m, std::int64_t g);

/// 2g - 2 - n, the pairing of the canonical class with a square-n surface.
std::int64_t adjunction(std::int64_t g, std::int64_t n);

struct DegreeProfileRow {
  std::int64_t ell = 0;
  std::vector<std::int64_t> m_candidates;  // both listed on the l = 0 tie
  Int c1_coefficient;                      // coefficient of a*
  Rat cobordism_shift;                     // d(r_l) from c1^2, sigma, e
  Rat bottom_degree;                       // D(l)
  Rat degree_sum;                          // D(l) + d(r_l)
  Rat printed_quadratic;                     // -l^2 + (2g-2)|l| - (2g-1)^2/4
  Rat discrepancy;                         // degree_sum - printed_quadratic
};

struct DegreeProfile {
  std::int64_t g = 0;
  std::vector<DegreeProfileRow> rows;      // ell = -(g-1) .. g-1
  std::vector<std::int64_t> argmax_ells;
  Rat max_degree_sum;
  bool strictly_increasing_below_top = false;

  const DegreeProfileRow& row(std::int64_t ell) const;
};

/// Degree bookkeeping for the blowup cobordism: for each spin^c family
/// r_{l, m} picks the maximizing m, computes D(l) + d(r_l) from first
/// principles (c1^2 against the lattice, sigma = -1, e = 1), and reports the
/// mismatch with the combined quadratic as printed in its source, which is
/// off by 1/2 from the endpoint value 5/4 - g.
DegreeProfile blowup_degree_profile(std::int64_t g);

}  // namespace hfc
