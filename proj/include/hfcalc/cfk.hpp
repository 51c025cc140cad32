#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfcalc/bigraded.hpp"

namespace hfc {

/// Bigraded model of the twisted knot complex of the g-fold Borromean-knot
/// connected sum: one Koszul complex per column i, with the generator of
/// wedge-degree l in column i placed at bigrading (i, l - g + i) and
/// homological degree l - g + 2i. Only the vertical (in-column) differential
/// is carried.
BigradedComplex cfk_model(int g, std::int64_t column_min, std::int64_t column_max,
                          Coeffs ring);

/// Symbolic homology label on the E_1 page of the horizontal filtration.
struct E1Label {
  enum Kind { Zero, IntegerZ, Syzygy } kind = Zero;
  int ell = 0;  // syzygy index when kind == Syzygy; 2g means free of rank 1

  bool is_free_rank_one(int g) const { return kind == Syzygy && ell == 2 * g; }
  std::string str(int g) const;
  bool operator==(const E1Label&) const = default;
};

struct E1Entry {
  std::int64_t column = 0;
  std::int64_t degree = 0;
  E1Label label;
};

struct E1Page {
  int g = 0;
  Region region;
  std::vector<E1Entry> entries;  // nontrivial labels only, column-ordered

  std::vector<E1Entry> column(std::int64_t i) const;
};

/// E_1 page of the spectral sequence of the horizontal filtration on the
/// truncation of the model to `region`, for columns in the given window.
/// Full columns contribute Z in degree 2i - g; truncated columns contribute
/// the syzygy label forced by exactness of the Koszul resolution.
E1Page e1_page(int g, const Region& region, std::int64_t column_min,
               std::int64_t column_max);

/// Horizontal maps delta_l : Z_l -> Z_{l+1} for l = 0..2g-1, expressed in the
/// syzygy generators (matrix l has shape binomial(2g, l+1) x binomial(2g, l)).
struct DeltaData {
  int g = 0;
  std::vector<LMat> deltas;

  void check_shapes() const;
};

/// The solution forced at genus one: delta_0 = 0 and delta_1 the inclusion
/// of the augmentation ideal, given by the row (t_1 - 1, t_2 - 1).
DeltaData delta_for_genus_one(Coeffs ring = Coeffs::Z);

enum class CheckStatus { ExactPass, GenericPass, Fail };

struct ZseqPosition {
  int index = 0;
  CheckStatus status = CheckStatus::Fail;
  std::string note;
};

struct ZseqReport {
  std::vector<ZseqPosition> positions;
  std::vector<std::string> structural_errors;

  bool all_pass() const;
  std::string str() const;
};

/// Validates delta against the constraints of the syzygy sequence
///   0 <- Z_2g <- ... <- Z_1 <- Z_0 <- 0
/// (homology Z at even positions, 0 at odd ones): composite-zero and
/// well-definedness checks, fraction-field exactness at 3 agreeing random
/// points, and exact upgrades where the module theory permits them.
ZseqReport validate_zseq(int g, const DeltaData& delta, std::uint64_t seed);

/// Presentation of the quotient Q_l = Z_l / delta(Z_{l-1}).
PresentedModule syzygy_quotient_presentation(int l, const DeltaData& delta,
                                             Coeffs ring);

/// Presentation of K_l = ker(delta_l : Z_l -> Z_{l+1}) in the cases where it
/// is immediate (delta_l zero or the target trivial, so K_l = Z_l); returns
/// nullopt otherwise, since presenting a kernel over the multivariate ring
/// is out of reach without Groebner machinery.
std::optional<PresentedModule> syzygy_kernel_presentation(int l,
                                                          const DeltaData& delta,
                                                          Coeffs ring);

}  // namespace hfc
