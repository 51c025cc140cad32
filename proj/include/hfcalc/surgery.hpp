#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfcalc/circle_bundle.hpp"
#include "hfcalc/exterior.hpp"
#include "hfcalc/novikov.hpp"

namespace hfc {

/// Group ring Z[Z^r] or F2[Z^r] on named circle classes; the names label
/// the exponent slots of the Laurent coefficients.
struct GroupRing {
  int nvars = 1;
  Coeffs ring = Coeffs::Z;
  std::vector<std::string> names;

  static GroupRing standard(int nvars, Coeffs ring);
  bool operator==(const GroupRing&) const = default;
  int index_of(const std::string& name) const;  // -1 when absent
};

/// Relative invariant as a module element: for each spin^c label a vector
/// over the group ring with a stated degree, carried up to the declared
/// ambiguity (overall sign, translation by a unit monomial).
struct FormalInvariant {
  GroupRing ring;
  int rank = 1;
  struct Component {
    std::string spinc;
    std::vector<Laurent> coords;
    Rat degree;
  };
  std::vector<Component> components;
  bool sign_ambiguity = true;
  bool unit_translation_ambiguity = true;

  static FormalInvariant generator(const GroupRing& ring, int rank,
                                   const std::string& spinc, int slot,
                                   const Rat& degree);
  const Component* find(const std::string& spinc) const;
  bool is_zero() const;
  // mod-2 reduction clears the sign ambiguity
  FormalInvariant reduced_mod2() const;
  FormalInvariant scaled(const Laurent& c) const;
  FormalInvariant operator+(const FormalInvariant& o) const;
  FormalInvariant scaled_int(const Int& c) const;
};

/// p * b1 + q * b2 + r * b3 over a shared coefficient ring; the value of the
/// averaged invariant after a logarithmic transformation of type (p, q, r).
FormalInvariant log_transform_combination(std::int64_t p, std::int64_t q,
                                          std::int64_t r,
                                          const FormalInvariant& b1,
                                          const FormalInvariant& b2,
                                          const FormalInvariant& b3);

/// Group-ring quotient map induced by a surjection of the underlying
/// exponent lattices; pushes coefficients forward monomial by monomial.
struct CoefficientProjection {
  GroupRing source;
  GroupRing target;
  ZMat map;  // target.nvars x source.nvars

  Laurent apply(const Laurent& p) const;
};

/// Sums the components in the declared spin^c orbit and pushes the result
/// through the projection; the T-averaged invariant.
FormalInvariant t_average(const FormalInvariant& family,
                          const CoefficientProjection& projection,
                          const std::vector<std::string>& orbit);

/// Pairing of invariants over the same group ring, antilinear in the second
/// slot: sum over matching labels of sum_i x_i * involution(y_i).
Laurent pair_invariants(const FormalInvariant& x, const FormalInvariant& y);

/// Knot surgery multiplies every component by Delta(t_class). The sign
/// ambiguity must already be resolved, which in practice means mod-2
/// coefficients.
FormalInvariant knot_surgery_multiply(const FormalInvariant& inv,
                                      const Laurent& delta_univariate,
                                      const std::string& t_class);

/// Equality up to the declared ambiguity: some monomial u (and sign when
/// allowed) with a = u * b componentwise.
bool unit_equivalent(const FormalInvariant& a, const FormalInvariant& b);

/// The rim-tori-projected fiber-sum product (t - 2 + t^-1) * o1 * o2 in the
/// single distinguished variable.
Laurent fiber_sum_product(const Laurent& o1, const Laurent& o2);
NovikovSeries fiber_sum_product(const NovikovSeries& o1,
                                const NovikovSeries& o2);

/// Invariants of S^1 x (0-surgery on K) and of S^1 x (knot complement):
/// Delta/(t - 2 + t^-1) and Delta/(t - 1) as Novikov series.
struct S1SurgeryInvariants {
  NovikovSeries closed;
  NovikovSeries complement;
};
S1SurgeryInvariants s1_cross_surgery_invariant(
    const Laurent& delta, Direction dir = Direction::PositivePowers,
    std::int64_t order = 20);

struct VerdictPair {
  std::string knot_a, knot_b;
  std::string verdict;  // "smoothly distinct" | "not distinguished by this invariant"
  std::string mod2_class_a, mod2_class_b;
};

struct VerdictReport {
  std::int64_t genus = 0;
  std::int64_t self_intersection = 0;
  int blowups_applied = 0;
  std::string hf_top_structure;
  std::vector<std::string> knots;
  std::vector<std::string> mod2_classes;
  std::vector<VerdictPair> pairs;
  bool all_pairwise_distinct = false;
};

/// Decision procedure for rim surgery on a genus-g surface of square n:
/// blows down to square 1-2g, checks that the top of the boundary Floer
/// homology is free of rank one, and partitions the knots by mod-2
/// Alexander class. Pairs in distinct classes are smoothly distinct; equal
/// classes are reported as not distinguished (never as equivalent).
VerdictReport rim_surgery_verdict(std::int64_t g, std::int64_t n,
                                  const std::vector<std::string>& knot_names);

}  // namespace hfc
