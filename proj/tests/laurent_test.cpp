#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfcalc/laurent.hpp"
#include "hfcalc/novikov.hpp"
#include "test_util.hpp"

using namespace hfc;

namespace {

Laurent L(const std::string& s, int nvars = 1, Coeffs ring = Coeffs::Z) {
  return Laurent::parse(s, nvars, ring);
}

}  // namespace

TEST_CASE("parse and serialize round-trip the documented format") {
  CHECK(L("t^-1 - 1 + t").str() == "t^-1 - 1 + t");
  CHECK(L("  t ^ -1-1 +t ").str() == "t^-1 - 1 + t");
  CHECK(L("3*t1^2*t2^-1 - 1", 2).str() == "-1 + 3*t1^2*t2^-1");
  CHECK(L("0 + t - t").is_zero());
  CHECK(L("2 - 5 + 3").is_zero());
  CHECK(Laurent::zero(1, Coeffs::Z).str() == "0");
  CHECK(L("-t^2 + 2").str() == "2 - t^2");
  CHECK_THROWS_AS(L("t +"), ParseError);
  CHECK_THROWS_AS(L("3*"), ParseError);
  CHECK_THROWS_AS(L("3* + t"), ParseError);
  CHECK_THROWS_AS(L("q"), ParseError);
  CHECK_THROWS_AS(L(""), ParseError);
}

TEST_CASE("normalize_up_to_unit canonical forms") {
  CHECK(Laurent::zero(1, Coeffs::Z).normalized_up_to_unit().is_zero());
  CHECK(L("t^5 - t^3").normalized_up_to_unit() == L("1 - t^2"));
  CHECK(L("t^-1 - 1 + t").normalized_up_to_unit() == L("1 - t + t^2"));
}

TEST_CASE("normalize_up_to_unit picks the unique canonical unit multiple") {
  // oracle: enumerate all unit multiples in an exponent window and check
  // exactly one satisfies the stated normal-form conditions
  Laurent p = L("t^-1 - 1 + t");
  Laurent canonical = p.normalized_up_to_unit();
  int found = 0;
  for (int sign = -1; sign <= 1; sign += 2)
    for (int k = -5; k <= 5; ++k) {
      Laurent cand = p * Laurent::monomial(1, {k}, sign, Coeffs::Z);
      if (cand.terms().begin()->first[0] != 0) continue;  // min exponent 0
      if (cand.terms().begin()->second < 0) continue;     // positive lead
      ++found;
      CHECK(cand == canonical);
    }
  CHECK(found == 1);
}

TEST_CASE("involution fixes symmetric elements and negates exponents") {
  CHECK(L("1").involution() == L("1"));
  CHECK(L("t - 2 + t^-1").involution() == L("t - 2 + t^-1"));
  std::vector<std::string> tu{"t", "u"};
  Laurent p = Laurent::parse("t^2 + 3*t^-1*u", 2, Coeffs::Z, tu);
  Laurent q = Laurent::parse("t^-2 + 3*t*u^-1", 2, Coeffs::Z, tu);
  CHECK(p.involution() == q);
}

TEST_CASE("augmentation sums coefficients and kills t - 1") {
  CHECK(L("t - 1").augmentation() == 0);
  CHECK(L("t^-1 - 1 + t").augmentation() == 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Laurent q = testutil::random_laurent(rng, 1, Coeffs::Z);
    CHECK((L("t - 1") * q).augmentation() == 0);
  }
}

TEST_CASE("expand_z_square substitutes z^2 = t - 2 + 1/t") {
  auto Z = [](const std::string& s) {
    return Laurent::parse(s, 1, Coeffs::Z, {"z"});
  };
  CHECK(expand_z_square(Z("1")) == L("1"));
  CHECK(expand_z_square(Z("z^2 + 1")) == L("t^-1 - 1 + t"));
  CHECK(expand_z_square(Z("1 - z^2")) == L("-t^-1 + 3 - t"));
  CHECK_THROWS_AS(expand_z_square(Z("z")), DomainError);
  SUBCASE("mod 2 the square is t + 1/t") {
    Laurent z2 = Laurent::monomial(1, {2}, 1, Coeffs::F2);
    CHECK(expand_z_square(z2) == L("t^-1 + t", 1, Coeffs::F2));
  }
}

TEST_CASE("conway_from_alexander inverts the substitution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    // build a random even z-polynomial, push it to t, and invert
    Laurent conv(1, Coeffs::Z);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int d = 0; d <= 3; ++d)
      conv += Laurent::monomial(1, {2 * d}, c(rng), Coeffs::Z);
    CHECK(conway_from_alexander(expand_z_square(conv)) == conv);
  }
}

TEST_CASE("serialize/parse round-trips on random polynomials") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 500; ++i) {
    int nvars = 1 + (i % 3);
    Laurent p = testutil::random_laurent(rng, nvars, Coeffs::Z, 6);
    CHECK(Laurent::parse(p.str(), nvars, Coeffs::Z) == p);
    Laurent q = testutil::random_laurent(rng, nvars, Coeffs::F2, 6);
    CHECK(Laurent::parse(q.str(), nvars, Coeffs::F2) == q);
  }
}

TEST_CASE("ring properties on random inputs") {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    int nvars = 1 + (i % 2);
    Laurent p = testutil::random_laurent(rng, nvars, Coeffs::Z);
    Laurent q = testutil::random_laurent(rng, nvars, Coeffs::Z);
    Laurent m = testutil::random_monomial(rng, nvars, Coeffs::Z);

    CHECK((p * m).normalized_up_to_unit() == p.normalized_up_to_unit());
    CHECK(p.involution().involution() == p);
    CHECK((p * q).augmentation() == p.augmentation() * q.augmentation());
    CHECK((p * q).involution() == p.involution() * q.involution());

    Laurent r = testutil::random_laurent(rng, nvars, Coeffs::Z);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + (-p) == Laurent::zero(nvars, Coeffs::Z));
    Laurent self = p;
    self += self;
    CHECK(self == p.scaled(2));
    self -= self;
    CHECK(self.is_zero());

    // mod-2 reduction is a ring homomorphism commuting with everything
    CHECK((p * q).reduced_mod2() == p.reduced_mod2() * q.reduced_mod2());
    CHECK((p + q).reduced_mod2() == p.reduced_mod2() + q.reduced_mod2());
    CHECK(p.involution().reduced_mod2() == p.reduced_mod2().involution());
    CHECK(((p.augmentation() % 2) + 2) % 2 ==
          p.reduced_mod2().augmentation());
  }
}

TEST_CASE("coefficients are arbitrary precision") {
  Int big("1000000000000000000000000000000");
  Laurent p = Laurent::monomial(1, {1}, big, Coeffs::Z);
  Laurent sq = p * p;
  CHECK(sq.coeff({2}) == big * big);
  CHECK(sq.coeff({2}).str() ==
        "1000000000000000000000000000000000000000000000000000000000000");
  CHECK((p - p).is_zero());
}

TEST_CASE("novikov quotient of 1/(t-2+1/t) has coefficient n at t^n") {
  Laurent den = L("t - 2 + t^-1");
  NovikovSeries s =
      novikov_quotient(L("1"), den, Direction::PositivePowers, 25);
  for (int n = 1; n <= 20; ++n) CHECK(s.coeff(n) == n);
  CHECK(s.coeff(0) == 0);
  // multiply-back: den * s = 1 through order 20
  NovikovSeries back = s * den;
  CHECK(back.matches_polynomial_through(L("1"), 20));
}

TEST_CASE("novikov quotient in the negative direction") {
  NovikovSeries s =
      novikov_quotient(L("1"), L("t - 1"), Direction::NegativePowers, 25);
  for (int n = 1; n <= 20; ++n) CHECK(s.coeff(-n) == 1);
  CHECK(s.coeff(0) == 0);
  NovikovSeries back = s * L("t - 1");
  CHECK(back.matches_polynomial_through(L("1"), -20));
}

TEST_CASE("novikov quotient by 1 and exact polynomial quotients") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Laurent p = testutil::random_laurent(rng, 1, Coeffs::Z);
    NovikovSeries s =
        novikov_quotient(p, L("1"), Direction::PositivePowers, 10);
    CHECK(s.is_exact());
    CHECK(s.polynomial_part() == p);

    // exact quotient when the denominator divides: (d*p)/d = p with no
    // truncation loss
    Laurent d = L("t - 1");
    NovikovSeries q =
        novikov_quotient(d * p, d, Direction::PositivePowers, 10);
    CHECK(q.is_exact());
    CHECK(q.polynomial_part() == p);
  }
  CHECK_THROWS_AS(
      novikov_quotient(L("1"), Laurent::zero(1, Coeffs::Z),
                       Direction::PositivePowers, 10),
      DomainError);
}

TEST_CASE("novikov truncation window handling") {
  NovikovSeries s =
      novikov_quotient(L("1"), L("t - 2 + t^-1"), Direction::PositivePowers, 30);
  NovikovSeries cut = s.truncated(10);
  CHECK(cut.coeff(10) == 10);
  CHECK(cut.coeff(11) == 0);
  CHECK(!cut.is_exact());
  // a truncated series cannot be re-extended
  CHECK_THROWS_AS(cut.truncated(20), DomainError);
  // an exact series can
  NovikovSeries exact = NovikovSeries::from_polynomial(L("1 + t"),
                                                       Direction::PositivePowers);
  CHECK(exact.truncated(100).is_exact());
}

TEST_CASE("novikov arithmetic respects truncation") {
  Laurent den = L("t - 2 + t^-1");
  NovikovSeries a = novikov_quotient(L("1"), den, Direction::PositivePowers, 30);
  NovikovSeries b = novikov_quotient(L("t^-1 - 1 + t"), den,
                                     Direction::PositivePowers, 30);
  // (1/den) * trefoil == trefoil/den through the common window
  NovikovSeries lhs = a * L("t^-1 - 1 + t");
  for (std::int64_t e = -2; e <= 25; ++e) CHECK(lhs.coeff(e) == b.coeff(e));
}
