#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fdde/exp_poly.hpp"
#include "test_support.hpp"

using namespace fdde;
using test::random_complex;
using test::random_exp_poly;
using test::single_term;
using test::two_term;

namespace {
const Complex I{0.0, 1.0};
const double PI = std::numbers::pi;
}  // namespace

TEST_CASE("normalize folds exponent constants into coefficients") {
  // e^{iz + i pi} == -e^{iz}
  const ExpPoly f = ExpPoly::from_terms(
      {{Poly::constant(Complex{1.0}), Poly{{I * PI, I}}}});
  REQUIRE(f.term_count() == 1);
  CHECK(f.terms()[0].exponent.approx_equal_to(Poly::monomial(I, 1)));
  CHECK(approx_equal(f.terms()[0].coeff.constant_term(), Complex{-1.0}));
  CHECK(f.equals(Complex{-1.0} * single_term(Complex{1.0}, I)));
}

TEST_CASE("normalize merges equal exponents and cancels to empty") {
  const ExpPoly zero = ExpPoly::from_terms({{Poly::constant(Complex{1.0}), Poly::monomial(I, 1)},
                                            {Poly::constant(Complex{-1.0}), Poly::monomial(I, 1)}});
  CHECK(zero.is_zero());

  const ExpPoly merged =
      ExpPoly::from_terms({{Poly::constant(Complex{1.0}), Poly::monomial(2.0 * I, 1)},
                           {Poly::constant(Complex{1.0}), Poly::monomial(I, 1)},
                           {Poly::constant(Complex{1.0}), Poly::monomial(2.0 * I, 1)}});
  REQUIRE(merged.term_count() == 2);
  CHECK(merged.equals(two_term(Complex{2.0}, 2.0 * I, Complex{1.0}, I)));
}

TEST_CASE("multiplication adds exponents") {
  CHECK((single_term(Complex{1.0}, I) * single_term(Complex{1.0}, 4.0 * I))
            .equals(single_term(Complex{1.0}, 5.0 * I)));

  std::mt19937_64 rng(5);
  const ExpPoly f = random_exp_poly(rng);
  CHECK((f * ExpPoly{}).is_zero());

  // (e^{iz} + e^{-iz})^2 = e^{2iz} + 2 + e^{-2iz}
  const ExpPoly cos2 = two_term(Complex{1.0}, I, Complex{1.0}, -I);
  const ExpPoly expanded = cos2 * cos2;
  ExpPoly expected = two_term(Complex{1.0}, 2.0 * I, Complex{1.0}, -2.0 * I) +
                     ExpPoly::constant(Complex{2.0});
  CHECK(expanded.equals(expected));
}

TEST_CASE("pow matches repeated multiplication") {
  const ExpPoly e_iz = single_term(Complex{1.0}, I);
  CHECK(e_iz.pow(5).equals(single_term(Complex{1.0}, 5.0 * I)));

  const ExpPoly f = two_term(Complex{1.0, 0.5}, I, Complex{-0.5}, -2.0 * I);
  CHECK(f.pow(1).equals(f));
  CHECK(f.pow(0).equals(ExpPoly::constant(Complex{1.0})));

  // Independent route: repeated multiplication.
  const ExpPoly g = two_term(Complex{1.0}, I, Complex{1.0}, -I);
  const ExpPoly by_pow = g.pow(4);
  ExpPoly by_mul = g;
  for (int i = 1; i < 4; ++i) by_mul = by_mul * g;
  CHECK(by_pow.equals(by_mul));

  // Frozen binomial expansion: e^{4iz} + 4e^{2iz} + 6 + 4e^{-2iz} + e^{-4iz}.
  ExpPoly frozen = ExpPoly::constant(Complex{6.0});
  frozen = frozen + two_term(Complex{1.0}, 4.0 * I, Complex{1.0}, -4.0 * I);
  frozen = frozen + two_term(Complex{4.0}, 2.0 * I, Complex{4.0}, -2.0 * I);
  CHECK(by_pow.equals(frozen));
}

TEST_CASE("differentiation applies the product and chain rules") {
  const ExpPoly e_iz = single_term(Complex{1.0}, I);
  CHECK(e_iz.derivative().equals(I * e_iz));

  const ExpPoly cosish = two_term(Complex{1.0}, I, Complex{1.0}, -I);
  CHECK(cosish.derivative(2).equals(-cosish));

  // d/dz (z e^{z^2}) = (1 + 2 z^2) e^{z^2}
  const ExpPoly f =
      ExpPoly::from_terms({{Poly::variable(), Poly::monomial(Complex{1.0}, 2)}});
  const ExpPoly expected = ExpPoly::from_terms(
      {{Poly{{Complex{1.0}, Complex{0.0}, Complex{2.0}}}, Poly::monomial(Complex{1.0}, 2)}});
  CHECK(f.derivative().equals(expected));
}

TEST_CASE("shift respects periodicity and refolds constants") {
  const ExpPoly e_iz = single_term(Complex{1.0}, I);
  CHECK(e_iz.shifted(Complex{2.0 * PI}).equals(e_iz));

  std::mt19937_64 rng(17);
  const ExpPoly f = random_exp_poly(rng);
  CHECK(f.shifted(Complex{0.0}).equals(f));

  // shift(e^{z^2}, c): coefficient e^{c^2}, exponent z^2 + 2cz.
  const Complex c{0.3, -0.2};
  const ExpPoly g = ExpPoly::exponential(Poly::monomial(Complex{1.0}, 2));
  const ExpPoly shifted = g.shifted(c);
  REQUIRE(shifted.term_count() == 1);
  CHECK(shifted.terms()[0].exponent.approx_equal_to(
      Poly{{Complex{0.0}, 2.0 * c, Complex{1.0}}}));
  CHECK(approx_equal(shifted.terms()[0].coeff.constant_term(), std::exp(c * c)));
}

TEST_CASE("is_zero is the Borel identity test") {
  const ExpPoly e_iz = single_term(Complex{1.0}, I);
  CHECK((e_iz - e_iz).is_zero());
  CHECK_FALSE((e_iz + single_term(Complex{1.0}, 2.0 * I)).is_zero());

  // Hand expansion: (e^{iz} + e^{-iz})^2 - e^{2iz} - 2 - e^{-2iz} == 0.
  const ExpPoly sq = two_term(Complex{1.0}, I, Complex{1.0}, -I).pow(2);
  const ExpPoly rest = two_term(Complex{1.0}, 2.0 * I, Complex{1.0}, -2.0 * I) +
                       ExpPoly::constant(Complex{2.0});
  CHECK((sq - rest).is_zero());
}

TEST_CASE("equals compares canonical forms") {
  const ExpPoly e_iz = single_term(Complex{1.0}, I);
  CHECK(e_iz.equals(e_iz));
  CHECK_FALSE(e_iz.equals(Complex{2.0} * e_iz));

  // (e^{iz} + e^{-iz})/2 entered two ways.
  const ExpPoly half_sum = two_term(Complex{0.5}, I, Complex{0.5}, -I);
  const ExpPoly scaled = Complex{0.5} * two_term(Complex{1.0}, I, Complex{1.0}, -I);
  CHECK(half_sum.equals(scaled));
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const ExpPoly f = random_exp_poly(rng);
    std::vector<std::pair<Poly, Poly>> raw;
    for (const ExpTerm& t : f.terms()) raw.emplace_back(t.coeff, t.exponent);
    const ExpPoly again = ExpPoly::from_terms(std::move(raw));
    REQUIRE(again.term_count() == f.term_count());
    for (std::size_t i = 0; i < f.term_count(); ++i) {
      CHECK(again.terms()[i].coeff.approx_equal_to(f.terms()[i].coeff));
      CHECK(again.terms()[i].exponent.approx_equal_to(f.terms()[i].exponent));
    }
  }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const ExpPoly f = random_exp_poly(rng, 2, 1);
    const ExpPoly g = random_exp_poly(rng, 2, 1);
    CHECK((f + g).derivative().equals(f.derivative() + g.derivative()));
    CHECK((f * g).derivative().equals(f.derivative() * g + f * g.derivative()));
  }
}

TEST_CASE("shift is a ring homomorphism commuting with differentiation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const ExpPoly f = random_exp_poly(rng, 2, 1);
    const ExpPoly g = random_exp_poly(rng, 2, 1);
    const Complex c = random_complex(rng, 1.0);
    CHECK((f * g).shifted(c).equals(f.shifted(c) * g.shifted(c)));
    CHECK(f.shifted(c).shifted(-c).equals(f));
    CHECK(f.shifted(c).derivative().equals(f.derivative().shifted(c)));
  }
}

TEST_CASE("pow is additive in the exponent") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const ExpPoly f = random_exp_poly(rng, 2, 0);
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m + n <= 4; ++m) {
        CHECK((f.pow(n) * f.pow(m)).equals(f.pow(n + m)));
      }
    }
  }
}

TEST_CASE("random nonzero canonical forms are never reported zero") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    // Distinct exponents, solid coefficients: the sum cannot vanish.
    std::vector<std::pair<Poly, Poly>> raw;
    std::vector<Poly> used;
    std::uniform_int_distribution<int> count(1, 4);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      Poly q = test::random_exponent(rng);
      const bool seen = std::any_of(used.begin(), used.end(),
                                    [&](const Poly& u) { return u.approx_equal_to(q); });
      if (seen) continue;
      used.push_back(q);
      Complex c = random_complex(rng);
      if (std::abs(c) < 0.5) c += Complex{1.0, 1.0};
      raw.emplace_back(Poly::constant(c), q);
    }
    const ExpPoly f = ExpPoly::from_terms(std::move(raw));
    CHECK_FALSE(f.is_zero());
    CHECK(f.term_count() == used.size());
  }
}

TEST_CASE("degenerate exponents represent plain polynomials") {
  const ExpPoly one = ExpPoly::constant(Complex{1.0});
  REQUIRE(one.term_count() == 1);
  CHECK(one.terms()[0].exponent.is_zero());
  CHECK(one.is_polynomial());

  const ExpPoly p = ExpPoly::polynomial(Poly::variable());
  CHECK(p.is_polynomial());
  Complex v;
  CHECK_FALSE(p.constant_value(&v));
  CHECK(ExpPoly{}.is_polynomial());
}
