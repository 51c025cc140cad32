#pragma once

#include <vector>

#include "hfcalc/matrix.hpp"

namespace hfc {

/// Smith normal form U * A * V = D over a principal ideal domain, with U, V
/// invertible over the ring and the diagonal entries each dividing the next.
template <typename T>
struct SmithResult {
  Mat<T> u, d, v;
  std::vector<T> diagonal() const {
    std::vector<T> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
      out.push_back(d(i, i));
    return out;
  }
};

SmithResult<Int> smith_normal_form(const ZMat& a);

// Over F2[t^{+-1}] (univariate Laurent polynomials mod 2); units are the
// monomials t^k and diagonal entries are reported with minimal exponent 0.
SmithResult<Laurent> smith_normal_form_f2_laurent(const LMat& a);

/// Dispatch on the entries of a Laurent matrix: constants over Z go to the
/// integer routine, univariate mod-2 entries to the F2[t^+-] routine.
/// Multivariate entries (or Z[t^+-], which is not a PID) are rejected.
SmithResult<Laurent> smith_normal_form(const LMat& a);

}  // namespace hfc
