#pragma once

#include <cstddef>
#include <vector>

#include "hfcalc/laurent.hpp"

namespace hfc {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  static Mat identity(std::size_t n, const T& one, const T& zero) {
    Mat m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using LMat = Mat<Laurent>;
using QMat = Mat<Rat>;
using ZMat = Mat<Int>;

LMat lmat_zero(std::size_t rows, std::size_t cols, int nvars, Coeffs ring);
LMat lmat_mul(const LMat& a, const LMat& b);
bool lmat_is_zero(const LMat& m);
QMat lmat_evaluate(const LMat& m, const std::vector<Rat>& point);

LMat lmat_hcat(const LMat& a, const LMat& b);

QMat qmat_mul(const QMat& a, const QMat& b);
std::size_t qmat_rank(QMat m);
Rat qmat_det(QMat m);
// Horizontal concatenation [a | b]; row counts must agree.
QMat qmat_hcat(const QMat& a, const QMat& b);

ZMat zmat_mul(const ZMat& a, const ZMat& b);
Int zmat_det(const ZMat& m);

}  // namespace hfc
