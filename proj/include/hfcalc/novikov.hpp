#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hfcalc/laurent.hpp"

namespace hfc {

enum class Direction { PositivePowers, NegativePowers };

/// Truncated element of the Novikov completion of Z[t^+-] (or F2[t^+-]) in
/// one distinguished variable: a formal series bounded on one side, stored
/// together with the exponent bound through which its terms are correct.
///
/// For PositivePowers the series is supported in exponents >= some finite
/// start and `truncation_order` is an inclusive upper bound on the correct
/// range; for NegativePowers everything is mirrored.
class NovikovSeries {
 public:
  NovikovSeries(Coeffs ring, Direction dir, std::int64_t truncation_order);

  static NovikovSeries from_polynomial(const Laurent& p, Direction dir);

  Coeffs ring() const { return ring_; }
  Direction direction() const { return dir_; }
  std::int64_t truncation_order() const { return order_; }
  bool is_exact() const { return exact_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, Int>& terms() const { return terms_; }
  Int coeff(std::int64_t e) const;

  NovikovSeries operator+(const NovikovSeries& o) const;
  NovikovSeries operator*(const NovikovSeries& o) const;
  NovikovSeries operator*(const Laurent& p) const;
  NovikovSeries scaled(const Int& c) const;

  // Truncate to the window reaching `order` in the completion direction.
  NovikovSeries truncated(std::int64_t order) const;

  NovikovSeries reduced_mod2() const;

  // The stored terms as a Laurent polynomial (only meaningful directly when
  // is_exact()).
  Laurent polynomial_part() const;

  // Agreement with a polynomial through the series' own valid window.
  bool matches_polynomial_through(const Laurent& p, std::int64_t order) const;

  std::string str() const;

  void insert(std::int64_t e, const Int& c);

 private:
  Coeffs ring_;
  Direction dir_;
  std::int64_t order_;
  bool exact_ = false;
  std::map<std::int64_t, Int> terms_;

  friend NovikovSeries novikov_quotient(const Laurent&, const Laurent&,
                                        Direction, std::int64_t);
};

/// Expands numerator/denominator as a Novikov series in the given direction,
/// correct through exponent `order` (PositivePowers) or `-order`
/// (NegativePowers). Requires univariate input and an invertible leading
/// coefficient in the completion direction.
NovikovSeries novikov_quotient(const Laurent& numerator,
                               const Laurent& denominator, Direction dir,
                               std::int64_t order);

}  // namespace hfc
