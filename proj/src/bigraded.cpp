#include "hfcalc/bigraded.hpp"

#include <sstream>

namespace hfc {

bool Region::contains(std::int64_t i, std::int64_t j) const {
  switch (kind) {
    case RegionKind::BelowAnd:
      return i < 0 && j < k;
    case RegionKind::AboveOr:
      return i >= 0 || j >= k;
    case RegionKind::BelowOr:
      return i < 0 || j < k;
    case RegionKind::AboveAnd:
      return i >= 0 && j >= k;
  }
  return false;
}

Region Region::complement() const {
  switch (kind) {
    case RegionKind::BelowAnd:
      return {RegionKind::AboveOr, k};
    case RegionKind::AboveOr:
      return {RegionKind::BelowAnd, k};
    case RegionKind::BelowOr:
      return {RegionKind::AboveAnd, k};
    case RegionKind::AboveAnd:
      return {RegionKind::BelowOr, k};
  }
  return *this;
}

std::string Region::str() const {
  std::ostringstream out;
  switch (kind) {
    case RegionKind::BelowAnd:
      out << "{i<0 and j<" << k << "}";
      break;
    case RegionKind::AboveOr:
      out << "{i>=0 or j>=" << k << "}";
      break;
    case RegionKind::BelowOr:
      out << "{i<0 or j<" << k << "}";
      break;
    case RegionKind::AboveAnd:
      out << "{i>=0 and j>=" << k << "}";
      break;
  }
  return out.str();
}

void BigradedComplex::validate() const {
  complex.validate();
  if (static_cast<int>(bigradings.size()) != complex.hi() - complex.lo() + 1)
    throw DomainError("bigrading table has wrong length");
  for (int p = complex.lo(); p <= complex.hi(); ++p)
    if (static_cast<int>(bigradings[p - complex.lo()].size()) !=
        complex.rank_at(p))
      throw DomainError("bigrading row has wrong length at position " +
                        std::to_string(p));
}

BigradedComplex truncate_region(const BigradedComplex& c, const Region& r) {
  c.validate();
  const FreeComplex& in = c.complex;
  // indices of kept generators per position
  std::vector<std::vector<std::size_t>> kept(in.hi() - in.lo() + 1);
  for (int p = in.lo(); p <= in.hi(); ++p)
    for (std::size_t idx = 0; idx < c.bigradings[p - in.lo()].size(); ++idx) {
      auto [i, j] = c.bigradings[p - in.lo()][idx];
      if (r.contains(i, j)) kept[p - in.lo()].push_back(idx);
    }

  // Closure check: a subcomplex region must be closed under d (no component
  // from a kept generator to a dropped one); a quotient region requires its
  // complement to be closed, i.e. no component from dropped to kept.
  for (int p = in.lo() + 1; p <= in.hi(); ++p) {
    const LMat& d = in.differential_at(p);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      auto [ci, cj] = c.bigradings[p - in.lo()][col];
      bool col_in = r.contains(ci, cj);
      for (std::size_t row = 0; row < d.rows(); ++row) {
        if (d(row, col).is_zero()) continue;
        auto [ri, rj] = c.bigradings[p - 1 - in.lo()][row];
        bool row_in = r.contains(ri, rj);
        if (r.is_subcomplex() && col_in && !row_in)
          throw DomainError("region " + r.str() +
                            " is not closed under the differential");
        if (!r.is_subcomplex() && !col_in && row_in)
          throw DomainError("complement of region " + r.str() +
                            " is not closed under the differential");
      }
    }
  }

  BigradedComplex out{FreeComplex(in.lo(), in.hi(), in.nvars(), in.ring()), {}};
  out.bigradings.resize(in.hi() - in.lo() + 1);
  for (int p = in.lo(); p <= in.hi(); ++p) {
    const auto& rows = kept[p - in.lo()];
    out.complex.set_rank(p, static_cast<int>(rows.size()));
    std::vector<Rat> grades;
    for (std::size_t idx : rows) {
      grades.push_back(in.gradings_at(p)[idx]);
      out.bigradings[p - in.lo()].push_back(c.bigradings[p - in.lo()][idx]);
    }
    out.complex.set_gradings(p, std::move(grades));
  }
  for (int p = in.lo() + 1; p <= in.hi(); ++p) {
    const LMat& d = in.differential_at(p);
    const auto& rows = kept[p - 1 - in.lo()];
    const auto& cols = kept[p - in.lo()];
    LMat nd = lmat_zero(rows.size(), cols.size(), in.nvars(), in.ring());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        nd(a, b) = d(rows[a], cols[b]);
    out.complex.set_differential(p, std::move(nd));
  }
  out.complex.validate();
  return out;
}

}  // namespace hfc
