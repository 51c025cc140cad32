#include "hfcalc/cfk.hpp"

#include <algorithm>
#include <sstream>

namespace hfc {

namespace {

// Wedge degrees of column i surviving in the region (generator of wedge
// degree l sits at bigrading (i, l - g + i)); returns [lo, hi] or an empty
// interval encoded as lo > hi.
std::pair<int, int> kept_range(int g, const Region& region, std::int64_t i) {
  int lo = 2 * g + 1, hi = -1;
  for (int l = 0; l <= 2 * g; ++l) {
    if (region.contains(i, l - g + i)) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  }
  // the four region families always keep a contiguous wedge range
  for (int l = lo; l <= hi; ++l)
    if (!region.contains(i, l - g + i))
      throw DomainError("region keeps a non-contiguous column range");
  return {lo, hi};
}

}  // namespace

BigradedComplex cfk_model(int g, std::int64_t column_min,
                          std::int64_t column_max, Coeffs ring) {
  if (g <= 0) throw DomainError("cfk_model requires g >= 1");
  if (column_max < column_min) throw DomainError("empty column window");
  FreeComplex koszul = koszul_complex(g, ring);
  int nvars = 2 * g;
  int lo = static_cast<int>(-g + 2 * column_min);
  int hi = static_cast<int>(g + 2 * column_max);
  BigradedComplex out{FreeComplex(lo, hi, nvars, ring), {}};
  out.bigradings.resize(hi - lo + 1);

  // per position: list of (column, wedge degree) blocks, columns ascending
  auto blocks_at = [&](int p) {
    std::vector<std::pair<std::int64_t, int>> blocks;
    for (std::int64_t i = column_min; i <= column_max; ++i) {
      std::int64_t l = p - 2 * i + g;
      if (l >= 0 && l <= 2 * g) blocks.emplace_back(i, static_cast<int>(l));
    }
    return blocks;
  };

  for (int p = lo; p <= hi; ++p) {
    int rank = 0;
    std::vector<Rat> grades;
    for (auto [i, l] : blocks_at(p)) {
      int r = static_cast<int>(binomial(2 * g, l));
      rank += r;
      for (int idx = 0; idx < r; ++idx) {
        grades.emplace_back(p);
        out.bigradings[p - lo].emplace_back(i, l - g + i);
      }
    }
    out.complex.set_rank(p, rank);
    out.complex.set_gradings(p, std::move(grades));
  }

  for (int p = lo + 1; p <= hi; ++p) {
    auto rows = blocks_at(p - 1);
    auto cols = blocks_at(p);
    std::vector<int> row_offset(rows.size() + 1, 0);
    for (std::size_t b = 0; b < rows.size(); ++b)
      row_offset[b + 1] =
          row_offset[b] + static_cast<int>(binomial(2 * g, rows[b].second));
    std::vector<int> col_offset(cols.size() + 1, 0);
    for (std::size_t b = 0; b < cols.size(); ++b)
      col_offset[b + 1] =
          col_offset[b] + static_cast<int>(binomial(2 * g, cols[b].second));
    LMat d = lmat_zero(row_offset.back(), col_offset.back(), nvars, ring);
    for (std::size_t cb = 0; cb < cols.size(); ++cb) {
      auto [i, l] = cols[cb];
      if (l == 0) continue;
      // vertical differential stays in column i, dropping wedge degree by 1
      for (std::size_t rb = 0; rb < rows.size(); ++rb) {
        if (rows[rb].first != i || rows[rb].second != l - 1) continue;
        const LMat& kd = koszul.differential_at(l);
        for (std::size_t r = 0; r < kd.rows(); ++r)
          for (std::size_t c = 0; c < kd.cols(); ++c)
            d(row_offset[rb] + r, col_offset[cb] + c) = kd(r, c);
      }
    }
    out.complex.set_differential(p, std::move(d));
  }
  out.validate();
  return out;
}

std::string E1Label::str(int g) const {
  switch (kind) {
    case Zero:
      return "0";
    case IntegerZ:
      return "Z";
    case Syzygy:
      return ell == 2 * g ? "R" : "Z_" + std::to_string(ell);
  }
  return "?";
}

std::vector<E1Entry> E1Page::column(std::int64_t i) const {
  std::vector<E1Entry> out;
  for (const auto& e : entries)
    if (e.column == i) out.push_back(e);
  return out;
}

E1Page e1_page(int g, const Region& region, std::int64_t column_min,
               std::int64_t column_max) {
  if (g <= 0) throw DomainError("e1_page requires g >= 1");
  if (column_max < column_min) throw DomainError("empty column window");
  E1Page page{g, region, {}};
  for (std::int64_t i = column_min; i <= column_max; ++i) {
    auto [lo, hi] = kept_range(g, region, i);
    if (lo > hi) {
      page.entries.push_back({i, 0, {E1Label::Zero, 0}});
      continue;
    }
    if (lo == 0 && hi == 2 * g) {
      page.entries.push_back({i, 2 * i - g, {E1Label::IntegerZ, 0}});
      continue;
    }
    if (lo > 0) {
      // bottom-truncated: 0 -> Lambda^2g -> ... -> Lambda^lo -> 0 has
      // homology Z_lo at the surviving end
      page.entries.push_back({i, lo - g + 2 * i, {E1Label::Syzygy, lo}});
      continue;
    }
    // top-truncated: Z at the Lambda^0 end plus the kernel syzygy on top
    if (hi == 0) {
      page.entries.push_back({i, 2 * i - g, {E1Label::Syzygy, 2 * g}});
      continue;
    }
    page.entries.push_back({i, 2 * i - g, {E1Label::IntegerZ, 0}});
    page.entries.push_back({i, hi - g + 2 * i, {E1Label::Syzygy, hi + 1}});
  }
  return page;
}

void DeltaData::check_shapes() const {
  if (g <= 0) throw DomainError("DeltaData requires g >= 1");
  if (static_cast<int>(deltas.size()) != 2 * g)
    throw DomainError("DeltaData needs 2g matrices");
  for (int l = 0; l < 2 * g; ++l) {
    if (static_cast<int>(deltas[l].rows()) != binomial(2 * g, l + 1) ||
        static_cast<int>(deltas[l].cols()) != binomial(2 * g, l))
      throw DomainError("delta_" + std::to_string(l) + " has wrong shape");
    for (std::size_t i = 0; i < deltas[l].rows(); ++i)
      for (std::size_t j = 0; j < deltas[l].cols(); ++j)
        if (deltas[l](i, j).vars() != 2 * g)
          throw DomainError("delta entries must live in 2g variables");
  }
}

DeltaData delta_for_genus_one(Coeffs ring) {
  DeltaData d;
  d.g = 1;
  d.deltas.push_back(lmat_zero(2, 1, 2, ring));
  LMat d1 = lmat_zero(1, 2, 2, ring);
  d1(0, 0) = Laurent::variable_minus_one(2, 0, ring);
  d1(0, 1) = Laurent::variable_minus_one(2, 1, ring);
  d.deltas.push_back(std::move(d1));
  d.check_shapes();
  return d;
}

bool ZseqReport::all_pass() const {
  if (!structural_errors.empty()) return false;
  for (const auto& p : positions)
    if (p.status == CheckStatus::Fail) return false;
  return true;
}

std::string ZseqReport::str() const {
  std::ostringstream out;
  for (const auto& e : structural_errors) out << "structural: " << e << "\n";
  for (const auto& p : positions) {
    out << "position " << p.index << ": ";
    switch (p.status) {
      case CheckStatus::ExactPass:
        out << "pass (exact)";
        break;
      case CheckStatus::GenericPass:
        out << "pass (fraction-field level)";
        break;
      case CheckStatus::Fail:
        out << "FAIL";
        break;
    }
    if (!p.note.empty()) out << " - " << p.note;
    out << "\n";
  }
  return out.str();
}

namespace {

// Generic membership of every column of p in the column span of rel,
// decided at three agreeing evaluation points.
bool generic_column_membership(const LMat& rel, const LMat& p, int nvars,
                               std::uint64_t seed) {
  if (lmat_is_zero(p)) return true;
  if (rel.cols() == 0) return false;
  Rng rng(seed);
  auto pts = evaluation_points(nvars, 3, rng);
  for (const auto& pt : pts) {
    QMat r = lmat_evaluate(rel, pt);
    QMat both = qmat_hcat(r, lmat_evaluate(p, pt));
    if (qmat_rank(both) != qmat_rank(r)) return false;
  }
  return true;
}

}  // namespace

ZseqReport validate_zseq(int g, const DeltaData& delta, std::uint64_t seed) {
  ZseqReport report;
  try {
    delta.check_shapes();
  } catch (const DomainError& e) {
    report.structural_errors.push_back(e.what());
    return report;
  }
  if (delta.g != g) {
    report.structural_errors.push_back("DeltaData genus mismatch");
    return report;
  }
  int n = 2 * g;
  Coeffs ring = Coeffs::Z;
  if (!delta.deltas.empty() && delta.deltas[0].rows() > 0)
    ring = delta.deltas[0](0, 0).ring();

  // relation matrices of the syzygy presentations
  std::vector<LMat> rel(n + 1);
  for (int l = 0; l <= n; ++l) rel[l] = syzygy_presentation(l, g, ring).relations;

  // well-definedness: delta_l maps relations of Z_l into the relation span
  for (int l = 0; l < n; ++l) {
    if (rel[l].cols() == 0) continue;
    LMat image = lmat_mul(delta.deltas[l], rel[l]);
    bool ok;
    if (rel[l + 1].cols() == 0)
      ok = lmat_is_zero(image);
    else
      ok = generic_column_membership(rel[l + 1], image, n, seed + 1000 + l);
    if (!ok)
      report.structural_errors.push_back(
          "delta_" + std::to_string(l) + " does not respect the relations of Z_" +
          std::to_string(l));
  }

  // composite-zero: delta_{l+1} o delta_l lands in the relation span of Z_{l+2}
  for (int l = 0; l + 1 < n; ++l) {
    LMat comp = lmat_mul(delta.deltas[l + 1], delta.deltas[l]);
    bool ok;
    if (rel[l + 2].cols() == 0)
      ok = lmat_is_zero(comp);
    else
      ok = generic_column_membership(rel[l + 2], comp, n, seed + 2000 + l);
    if (!ok)
      report.structural_errors.push_back("delta_" + std::to_string(l + 1) +
                                         " o delta_" + std::to_string(l) +
                                         " is nonzero");
  }

  // fraction-field dimensions
  std::vector<std::size_t> rank_rel(n + 2, 0);
  for (int l = 0; l <= n; ++l)
    rank_rel[l] = rel[l].cols() == 0
                      ? 0
                      : fraction_field_rank(rel[l], n, seed + 3000 + l);
  std::vector<std::int64_t> dim_z(n + 1, 0);
  for (int l = 0; l <= n; ++l)
    dim_z[l] = binomial(n, l) - static_cast<std::int64_t>(rank_rel[l]);

  std::vector<std::int64_t> ind_rank(n + 1, 0);  // rank of induced delta_l
  for (int l = 0; l < n; ++l) {
    LMat aug = rel[l + 1].cols() == 0 ? delta.deltas[l]
                                      : lmat_hcat(delta.deltas[l], rel[l + 1]);
    std::size_t total = fraction_field_rank(aug, n, seed + 4000 + l);
    ind_rank[l] = static_cast<std::int64_t>(total) -
                  static_cast<std::int64_t>(rank_rel[l + 1]);
  }

  for (int l = 0; l <= n; ++l) {
    ZseqPosition pos;
    pos.index = l;
    std::int64_t image_in = l > 0 ? ind_rank[l - 1] : 0;
    std::int64_t kernel_dim = dim_z[l] - (l < n ? ind_rank[l] : 0);
    std::int64_t h = kernel_dim - image_in;
    bool want_integer = (l % 2 == 0);
    if (h != 0) {
      pos.status = CheckStatus::Fail;
      std::ostringstream note;
      note << "fraction-field homology has dimension " << h << ", expected 0"
           << (want_integer ? " (integral answer Z is torsion)" : "");
      pos.note = note.str();
      report.positions.push_back(pos);
      continue;
    }
    if (l == 0) {
      if (lmat_is_zero(delta.deltas[0])) {
        pos.status = CheckStatus::ExactPass;
        pos.note = "delta_0 = 0, homology is all of Z_0 = Z";
      } else if (generic_column_membership(rel[1], delta.deltas[0], n,
                                           seed + 5000)) {
        pos.status = CheckStatus::GenericPass;
        pos.note = "delta_0 vanishes at evaluation points only";
      } else {
        pos.status = CheckStatus::Fail;
        pos.note = "delta_0 is a nonzero map, homology at Z_0 is not Z";
      }
    } else if (l == n) {
      // Z_2g is free of rank one; the quotient is Z exactly when the image
      // ideal is the augmentation ideal.
      bool aug_zero = true;
      const LMat& row = delta.deltas[n - 1];
      std::vector<Laurent> entries;
      for (std::size_t j = 0; j < row.cols(); ++j) {
        entries.push_back(row(0, j));
        if (row(0, j).augmentation() != 0) aug_zero = false;
      }
      if (!aug_zero) {
        pos.status = CheckStatus::Fail;
        pos.note = "image of delta_" + std::to_string(n - 1) +
                   " is not contained in the augmentation ideal";
      } else {
        bool all_generators = true;
        for (int v = 0; v < n; ++v) {
          Laurent gen =
              Laurent::variable_minus_one(n, v, ring).normalized_up_to_unit();
          bool found = false;
          for (const auto& e : entries)
            if (!e.is_zero() && e.normalized_up_to_unit() == gen) found = true;
          if (!found) all_generators = false;
        }
        if (all_generators) {
          pos.status = CheckStatus::ExactPass;
          pos.note = "image is exactly the augmentation ideal";
        } else {
          pos.status = CheckStatus::GenericPass;
          pos.note = "image lies in the augmentation ideal with full generic "
                     "rank; exact equality not certified";
        }
      }
    } else if (l % 2 == 1) {
      if (kernel_dim == 0) {
        // Z_l (l >= 1) is torsion-free, so a fraction-field-trivial kernel
        // is trivial and the homology vanishes integrally.
        pos.status = CheckStatus::ExactPass;
        pos.note = "kernel of delta_" + std::to_string(l) +
                   " vanishes (torsion-free module, generic kernel zero)";
      } else {
        pos.status = CheckStatus::GenericPass;
        pos.note = "homology generically zero; torsion not excluded";
      }
    } else {
      pos.status = CheckStatus::GenericPass;
      pos.note = "homology is generically torsion; the integral answer Z is "
                 "not certified over the multivariate ring";
    }
    report.positions.push_back(pos);
  }
  return report;
}

PresentedModule syzygy_quotient_presentation(int l, const DeltaData& delta,
                                             Coeffs ring) {
  delta.check_shapes();
  int g = delta.g;
  if (l < 0 || l > 2 * g) throw DomainError("syzygy index out of range");
  PresentedModule z = syzygy_presentation(l, g, ring);
  if (l == 0) return z;
  PresentedModule q;
  q.generators = z.generators;
  q.generator_degrees = z.generator_degrees;
  q.relations = lmat_hcat(z.relations, delta.deltas[l - 1]);
  return q;
}

std::optional<PresentedModule> syzygy_kernel_presentation(int l,
                                                          const DeltaData& delta,
                                                          Coeffs ring) {
  delta.check_shapes();
  int g = delta.g;
  if (l < 0 || l > 2 * g) throw DomainError("syzygy index out of range");
  if (l == 2 * g) return syzygy_presentation(l, g, ring);
  if (lmat_is_zero(delta.deltas[l])) return syzygy_presentation(l, g, ring);
  return std::nullopt;
}

}  // namespace hfc
