#include "hfcalc/matrix.hpp"

namespace hfc {

LMat lmat_zero(std::size_t rows, std::size_t cols, int nvars, Coeffs ring) {
  return LMat(rows, cols, Laurent::zero(nvars, ring));
}

LMat lmat_mul(const LMat& a, const LMat& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  if (a.empty() || b.empty()) {
    if (a.rows() == 0 || b.cols() == 0) return LMat(a.rows(), b.cols());
    // inner dimension zero: the zero matrix, with entries shaped like a's
    Laurent z = a.rows() && a.cols() ? Laurent::zero(a(0, 0).vars(), a(0, 0).ring())
                                     : Laurent();
    return LMat(a.rows(), b.cols(), z);
  }
  LMat r(a.rows(), b.cols(), Laurent::zero(a(0, 0).vars(), a(0, 0).ring()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
    }
  return r;
}

bool lmat_is_zero(const LMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

QMat lmat_evaluate(const LMat& m, const std::vector<Rat>& point) {
  QMat r(m.rows(), m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = m(i, j).evaluate(point);
  return r;
}

LMat lmat_hcat(const LMat& a, const LMat& b) {
  if (a.rows() != b.rows() && !a.empty() && !b.empty())
    throw DomainError("hcat: row counts differ");
  std::size_t rows = std::max(a.rows(), b.rows());
  LMat r(rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  return r;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  QMat r(a.rows(), b.cols(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::size_t qmat_rank(QMat m) {
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(row, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rat qmat_det(QMat m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

QMat qmat_hcat(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() && !a.empty() && !b.empty())
    throw DomainError("hcat: row counts differ");
  std::size_t rows = std::max(a.rows(), b.rows());
  QMat r(rows, a.cols() + b.cols(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  return r;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  ZMat r(a.rows(), b.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Int zmat_det(const ZMat& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  QMat q(m.rows(), m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  Rat d = qmat_det(q);
  return boost::multiprecision::numerator(d);
}

}  // namespace hfc
