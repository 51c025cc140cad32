#include "hfcalc/smith.hpp"

#include <algorithm>
#include <optional>

namespace hfc {

namespace {

// Euclidean-domain operations needed by the reduction. "size" is any
// function with size(r) < size(b) for the remainder r of a division by b.
struct IntOps {
  using Elem = Int;
  static bool is_zero(const Int& a) { return a == 0; }
  static Int zero() { return 0; }
  static Int one() { return 1; }
  static Int neg(const Int& a) { return -a; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int size(const Int& a) { return abs(a); }
  static Int quotient(const Int& a, const Int& b) {
    // round-toward-zero division; remainder has |r| < |b|
    return a / b;
  }
  static bool divides(const Int& a, const Int& b) { return b % a == 0; }
  static Int exact_div(const Int& a, const Int& b) { return a / b; }
  // canonical unit multiple: nonnegative
  static Int canonical(const Int& a, Int* unit) {
    *unit = a < 0 ? -1 : 1;
    return a < 0 ? -a : a;
  }
};

// F2[t^{+-1}]: represent elements as univariate mod-2 Laurent polynomials.
struct F2LaurentOps {
  using Elem = Laurent;
  static bool is_zero(const Laurent& a) { return a.is_zero(); }
  static Laurent zero() { return Laurent::zero(1, Coeffs::F2); }
  static Laurent one() { return Laurent::constant(1, 1, Coeffs::F2); }
  static Laurent neg(const Laurent& a) { return a; }
  static Laurent add(const Laurent& a, const Laurent& b) { return a + b; }
  static Laurent sub(const Laurent& a, const Laurent& b) { return a - b; }
  static Laurent mul(const Laurent& a, const Laurent& b) { return a * b; }
  // exponent span; units (monomials) have size 0
  static Int size(const Laurent& a) {
    return Int(a.terms().rbegin()->first[0] - a.terms().begin()->first[0]);
  }
  static Laurent quotient(const Laurent& a, const Laurent& b) {
    // long division by the top term of b; remainder span < span of b
    Laurent q = zero();
    Laurent r = a;
    std::int64_t b_top = b.terms().rbegin()->first[0];
    std::int64_t b_bot = b.terms().begin()->first[0];
    std::int64_t span_b = b_top - b_bot;
    while (!r.is_zero()) {
      std::int64_t r_top = r.terms().rbegin()->first[0];
      std::int64_t r_bot = r.terms().begin()->first[0];
      if (r_top - r_bot < span_b) break;
      Laurent m = Laurent::monomial(1, {r_top - b_top}, 1, Coeffs::F2);
      q += m;
      r -= m * b;
    }
    return q;
  }
  static bool divides(const Laurent& a, const Laurent& b) {
    Laurent q = quotient(b, a);
    return (b - q * a).is_zero();
  }
  static Laurent exact_div(const Laurent& a, const Laurent& b) {
    return quotient(a, b);
  }
  static Laurent canonical(const Laurent& a, Laurent* unit) {
    // shift the lowest exponent to zero; the unit is the monomial shift
    std::int64_t bot = a.terms().begin()->first[0];
    *unit = Laurent::monomial(1, {bot}, 1, Coeffs::F2);
    return Laurent::monomial(1, {-bot}, 1, Coeffs::F2) * a;
  }
};

template <typename Ops>
struct SmithWorker {
  using T = typename Ops::Elem;
  Mat<T> a, u, v;

  explicit SmithWorker(const Mat<T>& m) : a(m) {
    u = Mat<T>::identity(m.rows(), Ops::one(), Ops::zero());
    v = Mat<T>::identity(m.cols(), Ops::one(), Ops::zero());
  }

  void row_op(std::size_t i, std::size_t j, const T& f) {
    // row_i -= f * row_j, tracked in u
    for (std::size_t k = 0; k < a.cols(); ++k)
      a(i, k) = Ops::sub(a(i, k), Ops::mul(f, a(j, k)));
    for (std::size_t k = 0; k < u.cols(); ++k)
      u(i, k) = Ops::sub(u(i, k), Ops::mul(f, u(j, k)));
  }

  void col_op(std::size_t i, std::size_t j, const T& f) {
    // col_i -= f * col_j, tracked in v
    for (std::size_t k = 0; k < a.rows(); ++k)
      a(k, i) = Ops::sub(a(k, i), Ops::mul(f, a(k, j)));
    for (std::size_t k = 0; k < v.rows(); ++k)
      v(k, i) = Ops::sub(v(k, i), Ops::mul(f, v(k, j)));
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
  }

  void scale_row(std::size_t i, const T& unit_inv) {
    for (std::size_t k = 0; k < a.cols(); ++k)
      a(i, k) = Ops::mul(unit_inv, a(i, k));
    for (std::size_t k = 0; k < u.cols(); ++k)
      u(i, k) = Ops::mul(unit_inv, u(i, k));
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(
      std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_size = 0;
    for (std::size_t i = from; i < a.rows(); ++i)
      for (std::size_t j = from; j < a.cols(); ++j) {
        if (Ops::is_zero(a(i, j))) continue;
        Int s = Ops::size(a(i, j));
        if (!best || s < best_size) {
          best = {{i, j}};
          best_size = s;
        }
      }
    return best;
  }

  void run() {
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < n; ++k) {
      for (;;) {
        auto p = smallest_nonzero(k);
        if (!p) return finalize(k);
        swap_rows(k, p->first);
        swap_cols(k, p->second);
        bool clean = true;
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
          if (Ops::is_zero(a(i, k))) continue;
          T q = Ops::quotient(a(i, k), a(k, k));
          row_op(i, k, q);
          if (!Ops::is_zero(a(i, k))) clean = false;
        }
        if (!clean) continue;
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
          if (Ops::is_zero(a(k, j))) continue;
          T q = Ops::quotient(a(k, j), a(k, k));
          col_op(j, k, q);
          if (!Ops::is_zero(a(k, j))) clean = false;
        }
        if (!clean) continue;
        // ensure the pivot divides the rest of the submatrix
        bool fixed = false;
        for (std::size_t i = k + 1; i < a.rows() && !fixed; ++i)
          for (std::size_t j = k + 1; j < a.cols() && !fixed; ++j)
            if (!Ops::is_zero(a(i, j)) && !Ops::divides(a(k, k), a(i, j))) {
              // fold row i into row k and restart the pivot
              for (std::size_t c = 0; c < a.cols(); ++c)
                a(k, c) = Ops::add(a(k, c), a(i, c));
              for (std::size_t c = 0; c < u.cols(); ++c)
                u(k, c) = Ops::add(u(k, c), u(i, c));
              fixed = true;
            }
        if (!fixed) break;
      }
    }
    finalize(n);
  }

  void finalize(std::size_t upto) {
    for (std::size_t k = 0; k < upto; ++k) {
      if (Ops::is_zero(a(k, k))) continue;
      T unit;
      T canon = Ops::canonical(a(k, k), &unit);
      if (!(canon == a(k, k))) scale_row(k, unit_inverse(unit));
    }
  }

  static T unit_inverse(const T& unit);
};

template <>
Int SmithWorker<IntOps>::unit_inverse(const Int& unit) {
  return unit;  // +-1 is its own inverse
}

template <>
Laurent SmithWorker<F2LaurentOps>::unit_inverse(const Laurent& unit) {
  std::int64_t e = unit.terms().begin()->first[0];
  return Laurent::monomial(1, {-e}, 1, Coeffs::F2);
}

template <typename Ops>
SmithResult<typename Ops::Elem> run_smith(const Mat<typename Ops::Elem>& m) {
  SmithWorker<Ops> w(m);
  w.run();
  return {w.u, w.a, w.v};
}

}  // namespace

SmithResult<Int> smith_normal_form(const ZMat& a) { return run_smith<IntOps>(a); }

SmithResult<Laurent> smith_normal_form_f2_laurent(const LMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).vars() != 1)
        throw DomainError("Smith normal form: expected univariate entries");
      if (a(i, j).ring() != Coeffs::F2)
        throw DomainError("Smith normal form: expected mod-2 coefficients");
    }
  return run_smith<F2LaurentOps>(a);
}

SmithResult<Laurent> smith_normal_form(const LMat& a) {
  bool constant = true;
  for (std::size_t i = 0; i < a.rows() && constant; ++i)
    for (std::size_t j = 0; j < a.cols() && constant; ++j) {
      const Laurent& e = a(i, j);
      if (e.vars() > 1)
        throw DomainError(
            "Smith normal form: multivariate Laurent rings are not PIDs");
      for (const auto& [exp, c] : e.terms())
        if (exp[0] != 0) constant = false;
    }
  if (a.empty()) {
    Laurent one = Laurent::constant(1, 1, Coeffs::Z);
    Laurent zero = Laurent::zero(1, Coeffs::Z);
    return {LMat::identity(a.rows(), one, zero), a,
            LMat::identity(a.cols(), one, zero)};
  }
  Coeffs ring = a(0, 0).ring();
  if (ring == Coeffs::F2) return smith_normal_form_f2_laurent(a);
  if (!constant)
    throw DomainError(
        "Smith normal form: Z[t^+-1] is not a PID; reduce mod 2 or evaluate");
  ZMat z(a.rows(), a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      z(i, j) = a(i, j).coeff(Laurent::Exps{0});
  auto res = smith_normal_form(z);
  auto back = [&](const ZMat& m) {
    LMat out = lmat_zero(m.rows(), m.cols(), 1, Coeffs::Z);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out(i, j) = Laurent::constant(1, m(i, j), Coeffs::Z);
    return out;
  };
  return {back(res.u), back(res.d), back(res.v)};
}

}  // namespace hfc
