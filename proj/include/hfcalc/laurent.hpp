#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hfcalc/numeric.hpp"

namespace hfc {

enum class Coeffs { Z, F2 };

inline const char* coeffs_name(Coeffs c) { return c == Coeffs::Z ? "Z" : "F2"; }

/// Exact multivariate Laurent polynomial over Z or F2.
///
/// Terms map exponent tuples (one entry per variable) to nonzero
/// coefficients; the tuple order of std::map (lexicographic) is also the
/// serialization order, so printing is deterministic.
class Laurent {
 public:
  using Exps = std::vector<std::int64_t>;
  using TermMap = std::map<Exps, Int>;

  Laurent() : nvars_(1), ring_(Coeffs::Z) {}
  Laurent(int nvars, Coeffs ring);

  static Laurent zero(int nvars, Coeffs ring) { return Laurent(nvars, ring); }
  static Laurent constant(int nvars, const Int& c, Coeffs ring);
  static Laurent monomial(int nvars, const Exps& e, const Int& c, Coeffs ring);
  // t_idx as an element of the nvars-variable ring.
  static Laurent variable(int nvars, int idx, Coeffs ring);
  // t_idx - 1, the augmentation-ideal generator.
  static Laurent variable_minus_one(int nvars, int idx, Coeffs ring);

  int vars() const { return nvars_; }
  Coeffs ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Int coeff(const Exps& e) const;

  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Int& c) const;
  Laurent pow(unsigned n) const;

  Laurent reduced_mod2() const;
  // Sum of coefficients; a ring homomorphism onto the coefficient ring.
  Int augmentation() const;
  // Negates every exponent tuple; ring automorphism of order 2.
  Laurent involution() const;
  // Canonical representative of {+-monomial * p}: minimal exponent 0 in
  // every variable, and over Z a positive coefficient on the
  // lexicographically smallest exponent tuple.
  Laurent normalized_up_to_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rat evaluate(const std::vector<Rat>& point) const;

  // True iff the difference of min and max exponent per variable makes the
  // polynomial invariant under the involution (after no shift).
  bool is_symmetric() const { return *this == involution(); }

  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;
  static Laurent parse(const std::string& text, int nvars, Coeffs ring);
  static Laurent parse(const std::string& text, int nvars, Coeffs ring,
                       const std::vector<std::string>& names);

  static std::vector<std::string> default_names(int nvars);

 private:
  void insert(const Exps& e, const Int& c);
  void check_compatible(const Laurent& o, const char* op) const;

  int nvars_;
  Coeffs ring_;
  TermMap terms_;
};

// Substitutes z^2 = t - 2 + t^-1 into a polynomial in one variable z with
// only even nonnegative powers; the result is involution-symmetric.
Laurent expand_z_square(const Laurent& conway_in_z);

// Inverse substitution for a symmetric knot polynomial: rewrites p(t) with
// p = p(t^-1) as a polynomial in z, using t + t^-1 = z^2 + 2.
Laurent conway_from_alexander(const Laurent& alexander);

}  // namespace hfc
