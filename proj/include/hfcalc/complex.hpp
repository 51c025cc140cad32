#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hfcalc/matrix.hpp"

namespace hfc {

/// Chain complex of free modules over a Laurent ring. The differential at
/// position p maps into position p-1 and has shape rank(p-1) x rank(p).
class FreeComplex {
 public:
  FreeComplex(int lo, int hi, int nvars, Coeffs ring);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int nvars() const { return nvars_; }
  Coeffs ring() const { return ring_; }

  int rank_at(int p) const;
  const LMat& differential_at(int p) const;  // valid for lo < p <= hi
  const std::vector<Rat>& gradings_at(int p) const;

  void set_rank(int p, int rank);
  void set_differential(int p, LMat d);
  void set_gradings(int p, std::vector<Rat> g);

  // Shape consistency and d o d = 0; throws DomainError on violation.
  void validate() const;

 private:
  int lo_, hi_;
  int nvars_;
  Coeffs ring_;
  std::vector<int> ranks_;
  std::vector<LMat> diffs_;  // diffs_[p - lo_] maps p -> p-1; entry at lo_ unused
  std::vector<std::vector<Rat>> gradings_;
};

/// Koszul complex on the regular sequence (t_1 - 1, ..., t_2g - 1) over
/// Z[t_i^{+-1}] or F2[t_i^{+-1}]: ranks binomial(2g, l) at positions
/// l = 0..2g, differential contraction with alternating signs, generator at
/// position l graded l - g.
FreeComplex koszul_complex(int g, Coeffs ring);

std::int64_t binomial(int n, int k);

// Basis of rank-l wedge products: sorted index subsets in lexicographic
// order, so subset(g, l, i) is the i-th basis element of position l.
std::vector<std::vector<int>> wedge_basis(int n, int l);

/// Ranks of the homology of c over the fraction field, computed by exact
/// rational evaluation at random integer points with 3-point agreement.
std::vector<int> fraction_field_homology_ranks(const FreeComplex& c,
                                               std::uint64_t seed);

// Rank over the fraction field of a single Laurent matrix, same scheme.
std::size_t fraction_field_rank(const LMat& m, int nvars, std::uint64_t seed);

// Draws agreeing evaluation points for a family of matrices; all callers of
// the generic-rank machinery funnel through here.
std::vector<std::vector<Rat>> evaluation_points(int nvars, int count, Rng& rng);

/// Module given by generators and a relation matrix whose columns are the
/// relations (relation_matrix has generator_count rows).
struct PresentedModule {
  int generators = 0;
  LMat relations;
  std::vector<Rat> generator_degrees;

  // Equality after discarding identically-zero relation columns.
  bool same_presentation(const PresentedModule& o) const;
  PresentedModule pruned() const;
};

/// Syzygy module Z_l of the Koszul resolution: binomial(2g, l) generators,
/// relations the next Koszul differential. Z_0 is Z presented by the
/// relations (t_i - 1); Z_2g is free of rank one.
PresentedModule syzygy_presentation(int l, int g, Coeffs ring);

}  // namespace hfc
