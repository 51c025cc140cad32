#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hfcalc/complex.hpp"

namespace hfc {

/// The four truncation regions of a bigraded knot complex. The "Below"
/// regions are subcomplexes (the differential does not increase i or j);
/// the "AboveOr"/"AboveAnd" regions are the complementary quotients.
enum class RegionKind {
  BelowAnd,  // i < 0 and j < k   (subcomplex)
  AboveOr,   // i >= 0 or j >= k  (quotient, complement of BelowAnd)
  BelowOr,   // i < 0 or j < k    (subcomplex)
  AboveAnd,  // i >= 0 and j >= k (quotient, complement of BelowOr)
};

struct Region {
  RegionKind kind;
  std::int64_t k = 0;

  bool contains(std::int64_t i, std::int64_t j) const;
  bool is_subcomplex() const {
    return kind == RegionKind::BelowAnd || kind == RegionKind::BelowOr;
  }
  Region complement() const;
  std::string str() const;
};

/// Free complex whose generators carry an (i, j) bigrading, with the
/// homological position playing the role of total degree.
struct BigradedComplex {
  FreeComplex complex;
  // bigradings[p - complex.lo()][idx] = (i, j) of that generator
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> bigradings;

  void validate() const;
};

/// Keeps exactly the generators inside the region. For subcomplex regions
/// the differential restricts (and the input is checked to be closed under
/// it); for quotient regions it projects. Throws DomainError when the
/// complex's differential violates the required closure.
BigradedComplex truncate_region(const BigradedComplex& c, const Region& r);

}  // namespace hfc
