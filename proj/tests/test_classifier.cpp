#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdde/classifier.hpp"
#include "test_support.hpp"

using namespace fdde;
using test::single_term;
using test::two_term;

namespace {

const Complex I{0.0, 1.0};
const double TWO_PI = 2.0 * std::numbers::pi;

ExpPoly one() { return ExpPoly::constant(Complex{1.0}); }

FermatDDE example_1_1_first() {
  return FermatDDE(5, 4, 0, Complex{1.0}, Complex{TWO_PI}, one(), one(), 5.0 * I, 4.0 * I, 1);
}

// n = m, l = 1, c = 0, k = 1, a2 = -a1 equations solved by the k=1 classifier.
FermatDDE symmetric_eq(int n, Complex a, Complex b, Complex p1, Complex p2) {
  return FermatDDE(n, n, 1, a, Complex{0.0}, ExpPoly::constant(p1), ExpPoly::constant(p2), b,
                   -b, 1);
}

bool contains(const std::vector<Certificate>& certs, const ExpPoly& f) {
  return std::any_of(certs.begin(), certs.end(),
                     [&](const Certificate& c) { return c.candidate.equals(f); });
}

}  // namespace

TEST_CASE("general classifier: one of five root branches survives") {
  const FermatDDE eq = example_1_1_first();
  const SolutionReport report = classify_general(eq);

  CHECK(report.theorem_branch == TheoremBranch::Thm11_i);
  REQUIRE(report.solutions.size() == 1);
  CHECK(report.solutions[0].candidate.equals(single_term(Complex{1.0}, I)));
  CHECK(report.solutions[0].verified);

  // Independent brute force over all five fifth-root-of-unity branches.
  int verified_count = 0;
  for (const Complex& b1 : complex_nth_roots(Complex{1.0}, 5)) {
    if (verify(eq, single_term(b1, I)).verified) ++verified_count;
  }
  CHECK(verified_count == 1);
}

TEST_CASE("general classifier handles the swapped-power variant") {
  // f^4(z) + (f''(z+2pi))^5 = e^{4iz} - e^{5iz}
  const FermatDDE eq(4, 5, 2, Complex{1.0}, Complex{TWO_PI}, one(),
                     ExpPoly::constant(Complex{-1.0}), 4.0 * I, 5.0 * I, 1);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::Thm11_i);
  CHECK(contains(report.solutions, single_term(Complex{1.0}, I)));
}

TEST_CASE("general classifier works for quadratic exponents") {
  const FermatDDE eq(5, 4, 0, Complex{1.0}, Complex{0.0}, one(), one(), 5.0 * I, 4.0 * I, 2);
  const SolutionReport report = classify_general(eq);
  REQUIRE(report.solutions.size() == 1);
  const ExpPoly expected = ExpPoly::exponential(Poly::monomial(I, 2));
  CHECK(report.solutions[0].candidate.equals(expected));
}

TEST_CASE("polynomial perfect-power coefficients survive the shift") {
  // f = (z+1) e^{iz} solves f^5(z) + (f(z+2pi))^4 = (z+1)^5 e^{5iz} + (z+2pi+1)^4 e^{4iz}.
  const Poly z_plus_1{{Complex{1.0}, Complex{1.0}}};
  Poly p1_poly = Poly::constant(Complex{1.0});
  for (int i = 0; i < 5; ++i) p1_poly = p1_poly * z_plus_1;
  const Poly shifted = z_plus_1.shifted(Complex{TWO_PI});
  Poly p2_poly = Poly::constant(Complex{1.0});
  for (int i = 0; i < 4; ++i) p2_poly = p2_poly * shifted;

  const FermatDDE eq(5, 4, 0, Complex{1.0}, Complex{TWO_PI}, ExpPoly::polynomial(p1_poly),
                     ExpPoly::polynomial(p2_poly), 5.0 * I, 4.0 * I, 1);
  const SolutionReport report = classify_general(eq);

  CHECK(report.theorem_branch == TheoremBranch::Thm11_i);
  REQUIRE(report.solutions.size() == 1);
  const ExpPoly expected = ExpPoly::exponential(Poly::monomial(I, 1), z_plus_1);
  CHECK(report.solutions[0].candidate.equals(expected));
  CHECK(root_branch_candidates(eq, 1).size() == 5);
}

TEST_CASE("derivative-generated coefficients verify for quadratic exponents") {
  // f = e^{iz^2} solves f^5(z) + (f'(z))^4 = e^{5iz^2} + 16 z^4 e^{4iz^2}.
  const Poly p2 = Poly::monomial(Complex{16.0}, 4);
  const FermatDDE eq(5, 4, 1, Complex{1.0}, Complex{0.0}, ExpPoly::constant(Complex{1.0}),
                     ExpPoly::polynomial(p2), 5.0 * I, 4.0 * I, 2);
  const SolutionReport report = classify_general(eq);

  CHECK(report.theorem_branch == TheoremBranch::Thm11_i);
  REQUIRE(report.solutions.size() == 1);
  CHECK(report.solutions[0].candidate.equals(
      ExpPoly::exponential(Poly::monomial(I, 2))));
}

TEST_CASE("equal powers above four yield the nonexistence verdict") {
  const FermatDDE eq(5, 5, 0, Complex{1.0}, Complex{TWO_PI}, one(), one(), 5.0 * I, 2.0 * I, 1);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::CorC1Nonexistence);
  CHECK(report.solutions.empty());
}

TEST_CASE("outside the gate the general classifier abstains") {
  const FermatDDE eq(3, 2, 0, Complex{1.0}, Complex{1.0}, one(), one(), 3.0 * I, 2.0 * I, 1);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::OutOfTheoremScope);
  CHECK(report.solutions.empty());
}

TEST_CASE("frequency-condition failure is reported as unclassified") {
  const FermatDDE eq(5, 2, 0, Complex{1.0}, Complex{0.0}, one(), one(), 5.0 * I, 3.0 * I, 1);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::NoClassifiedSolution);
  CHECK(report.solutions.empty());
  REQUIRE_FALSE(report.notes.empty());
}

TEST_CASE("non-polynomial p1 cannot feed root extraction") {
  const ExpPoly p1 = ExpPoly::exponential(Poly::monomial(Complex{0.5}, 1));
  const FermatDDE eq(5, 2, 0, Complex{1.0}, Complex{0.0}, p1, one(), 5.0 * I, 2.0 * I, 2);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::NoClassifiedSolution);
  const bool noted = std::any_of(report.notes.begin(), report.notes.end(), [](const auto& n) {
    return n.find("root extraction") != std::string::npos;
  });
  CHECK(noted);
}

TEST_CASE("imperfect powers leave the branch empty") {
  const FermatDDE eq(5, 2, 0, Complex{1.0}, Complex{0.0}, ExpPoly::polynomial(Poly::variable()),
                     one(), 5.0 * I, 2.0 * I, 1);
  const SolutionReport report = classify_general(eq);
  CHECK(report.theorem_branch == TheoremBranch::NoClassifiedSolution);
  const bool noted = std::any_of(report.notes.begin(), report.notes.end(), [](const auto& n) {
    return n.find("perfect") != std::string::npos;
  });
  CHECK(noted);
}

TEST_CASE("hypothesis violations are rejected with diagnostics") {
  CHECK_THROWS_AS(
      classify_general(FermatDDE(5, 4, 0, Complex{1.0}, Complex{0.0}, one(), one(), 5.0 * I,
                                 5.0 * I, 1)),
      HypothesisError);
  CHECK_THROWS_AS(
      classify_general(FermatDDE(5, 4, 0, Complex{1.0}, Complex{0.0}, ExpPoly{}, one(), 5.0 * I,
                                 4.0 * I, 1)),
      HypothesisError);
  CHECK_THROWS_AS(
      classify_difference(FermatDDE(5, 4, 1, Complex{1.0}, Complex{0.0}, one(), one(), 5.0 * I,
                                    4.0 * I, 1)),
      HypothesisError);
}

TEST_CASE("branch candidate lists have exactly n entries for constant p") {
  const FermatDDE eq = example_1_1_first();
  CHECK(root_branch_candidates(eq, 1).size() == 5);
  CHECK(root_branch_candidates(eq, 2).size() == 5);
}

TEST_CASE("difference classifier covers both orderings of the example") {
  const FermatDDE first(5, 2, 0, Complex{1.0}, Complex{TWO_PI}, one(), one(), 5.0 * I, 2.0 * I,
                        1);
  const SolutionReport r1 = classify_difference(first);
  CHECK(r1.theorem_branch == TheoremBranch::Thm11_i);
  CHECK(contains(r1.solutions, single_term(Complex{1.0}, I)));

  const FermatDDE second(2, 5, 0, Complex{1.0}, Complex{TWO_PI}, one(), one(), 2.0 * I, 5.0 * I,
                         1);
  const SolutionReport r2 = classify_difference(second);
  CHECK(r2.theorem_branch == TheoremBranch::Thm11_i);
  CHECK(contains(r2.solutions, single_term(Complex{1.0}, I)));

  const FermatDDE outside(2, 2, 0, Complex{1.0}, Complex{TWO_PI}, one(), one(), 2.0 * I,
                          5.0 * I, 1);
  CHECK(classify_difference(outside).theorem_branch == TheoremBranch::OutOfTheoremScope);
}

TEST_CASE("k1 classifier reproduces the four trigonometric solutions") {
  const SolutionReport report =
      classify_k1_symmetric(symmetric_eq(2, Complex{-1.0}, 2.0 * I, Complex{0.5}, Complex{0.5}));
  CHECK(report.theorem_branch == TheoremBranch::ThmE_ii);
  REQUIRE(report.solutions.size() == 4);

  const ExpPoly cos_z = two_term(Complex{0.5}, I, Complex{0.5}, -I);
  const ExpPoly i_sin_z = two_term(Complex{0.5}, I, Complex{-0.5}, -I);
  CHECK(contains(report.solutions, cos_z));
  CHECK(contains(report.solutions, -cos_z));
  CHECK(contains(report.solutions, i_sin_z));
  CHECK(contains(report.solutions, -i_sin_z));
}

TEST_CASE("k1 classifier finds the eight quartic solutions") {
  const SolutionReport report =
      classify_k1_symmetric(symmetric_eq(4, Complex{-1.0}, 2.0 * I, Complex{0.5}, Complex{0.5}));
  CHECK(report.theorem_branch == TheoremBranch::Thm12_n4);
  REQUIRE(report.solutions.size() == 8);
  for (const Certificate& cert : report.solutions) CHECK(cert.verified);

  const ExpPoly cos_z = two_term(Complex{0.5}, I, Complex{0.5}, -I);
  CHECK(contains(report.solutions, cos_z));
  CHECK(contains(report.solutions, I * cos_z));
}

TEST_CASE("k1 classifier resolves the mixed-frequency case") {
  const SolutionReport report = classify_k1_symmetric(
      symmetric_eq(2, Complex{-1.0 / 9.0}, Complex{2.0}, Complex{8.0 / 9.0}, Complex{8.0 / 3.0}));
  CHECK(report.theorem_branch == TheoremBranch::Conj2BranchA);

  const ExpPoly gao = two_term(Complex{1.0}, Complex{1.0}, Complex{1.0}, Complex{-3.0});
  CHECK(contains(report.solutions, gao));
  CHECK(contains(report.solutions, -gao));

  // Mixed signs fail the coupling constraint (8/3) l1 l2 = p2.
  const ExpPoly mixed = two_term(Complex{1.0}, Complex{1.0}, Complex{-1.0}, Complex{-3.0});
  CHECK_FALSE(contains(report.solutions, mixed));

  for (const Certificate& cert : report.solutions) CHECK(cert.verified);
}

TEST_CASE("k1 classifier covers the constant-term family") {
  // ab^2 = -1 with b = i, a = 1.
  const SolutionReport report =
      classify_k1_symmetric(symmetric_eq(2, Complex{1.0}, I, Complex{2.0}, Complex{3.0}));
  CHECK(report.theorem_branch == TheoremBranch::ThmE_i);
  REQUIRE(report.solutions.size() == 4);
  for (const Certificate& cert : report.solutions) {
    CHECK(cert.verified);
    // Every solution carries a nonzero constant part r with r^4 = -p1 p2.
    const Complex r = cert.candidate.polynomial_part().constant_term();
    CHECK(approx_equal(r * r * r * r, Complex{-6.0}));
  }
}

TEST_CASE("k1 classifier handles asymmetric forcing coefficients") {
  // ab^2 = 4 with distinct p: l1^2 = p1/2 = 1, l2^2 = p2/2 = 4.
  const SolutionReport half = classify_k1_symmetric(
      symmetric_eq(2, Complex{4.0}, Complex{1.0}, Complex{2.0}, Complex{8.0}));
  CHECK(half.theorem_branch == TheoremBranch::ThmE_ii);
  REQUIRE(half.solutions.size() == 4);
  CHECK(contains(half.solutions, two_term(Complex{1.0}, Complex{0.5}, Complex{2.0},
                                          Complex{-0.5})));

  // a (b/2)^4 = -1 with p1 = 16, p2 = 64: contains e^z + 2 e^{-z}.
  const SolutionReport quartic = classify_k1_symmetric(
      symmetric_eq(4, Complex{-1.0}, Complex{2.0}, Complex{16.0}, Complex{64.0}));
  CHECK(quartic.theorem_branch == TheoremBranch::Thm12_n4);
  REQUIRE(quartic.solutions.size() == 8);
  CHECK(contains(quartic.solutions, two_term(Complex{1.0}, Complex{1.0}, Complex{2.0},
                                             Complex{-1.0})));
}

TEST_CASE("difference classifier rejects equal powers above four") {
  const FermatDDE eq(6, 6, 0, Complex{1.0}, Complex{1.0}, one(), one(), 2.0 * I, 3.0 * I, 1);
  const SolutionReport report = classify_difference(eq);
  CHECK(report.theorem_branch == TheoremBranch::CorC1Nonexistence);
  CHECK(report.solutions.empty());
}

TEST_CASE("k1 classifier reports nonexistence for n = 3") {
  const SolutionReport report =
      classify_k1_symmetric(symmetric_eq(3, Complex{1.0}, Complex{1.0}, Complex{1.0},
                                         Complex{1.0}));
  CHECK(report.theorem_branch == TheoremBranch::Thm12_n3Nonexistence);
  CHECK(report.solutions.empty());
}

TEST_CASE("k1 classifier reports unclassified outside the solvable constants") {
  // n = 2 with ab^2 = 1: no admissible family.
  const SolutionReport r2 =
      classify_k1_symmetric(symmetric_eq(2, Complex{1.0}, Complex{1.0}, Complex{1.0},
                                         Complex{1.0}));
  CHECK(r2.theorem_branch == TheoremBranch::NoClassifiedSolution);
  CHECK(r2.solutions.empty());

  // n = 4 with a (b/2)^4 = 1 != -1.
  const SolutionReport r4 =
      classify_k1_symmetric(symmetric_eq(4, Complex{1.0}, Complex{2.0}, Complex{1.0},
                                         Complex{1.0}));
  CHECK(r4.theorem_branch == TheoremBranch::NoClassifiedSolution);
  CHECK(r4.solutions.empty());
}

TEST_CASE("k1 classifier rejects out-of-range shapes") {
  CHECK_THROWS_AS(
      classify_k1_symmetric(symmetric_eq(5, Complex{-1.0}, 2.0 * I, Complex{0.5}, Complex{0.5})),
      HypothesisError);
  // l = 0 violates the first-derivative shape.
  CHECK_THROWS_AS(
      classify_k1_symmetric(FermatDDE(2, 2, 0, Complex{-1.0}, Complex{0.0},
                                      ExpPoly::constant(Complex{0.5}),
                                      ExpPoly::constant(Complex{0.5}), 2.0 * I, -2.0 * I, 1)),
      HypothesisError);
  // a2 != -a1.
  CHECK_THROWS_AS(
      classify_k1_symmetric(FermatDDE(2, 2, 1, Complex{-1.0}, Complex{0.0},
                                      ExpPoly::constant(Complex{0.5}),
                                      ExpPoly::constant(Complex{0.5}), 2.0 * I, 3.0 * I, 1)),
      HypothesisError);
}

TEST_CASE("the quadratic sub-branch gates are mutually exclusive") {
  // ab^2 = -1, ab^2 = 4 and 9ab^2 = -4 can never hold together.
  std::mt19937_64 rng(47);
  int hits_total = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Complex a = test::random_complex(rng, 3.0);
    const Complex b = test::random_complex(rng, 3.0);
    if (approx_zero(a) || approx_zero(b)) continue;
    const Complex ab2 = a * b * b;
    int hits = 0;
    if (approx_equal(ab2, Complex{-1.0})) ++hits;
    if (approx_equal(ab2, Complex{4.0})) ++hits;
    if (approx_equal(9.0 * ab2, Complex{-4.0})) ++hits;
    CHECK(hits <= 1);
    hits_total += hits;
  }
  // The targeted values themselves each trip exactly their own gate.
  for (Complex target : {Complex{-1.0}, Complex{4.0}, Complex{-4.0 / 9.0}}) {
    int hits = 0;
    if (approx_equal(target, Complex{-1.0})) ++hits;
    if (approx_equal(target, Complex{4.0})) ++hits;
    if (approx_equal(9.0 * target, Complex{-4.0})) ++hits;
    CHECK(hits == 1);
  }
  (void)hits_total;
}

TEST_CASE("verified solutions scale covariantly by roots of unity") {
  const FermatDDE eq = example_1_1_first();
  const ExpPoly f = single_term(Complex{1.0}, I);
  REQUIRE(verify(eq, f).verified);

  // lcm(5, 4) = 20: lambda^n adjusts p1, lambda^m adjusts p2.
  for (int j : {1, 3, 7}) {
    const Complex lambda = std::polar(1.0, TWO_PI * j / 20.0);
    FermatDDE scaled = eq;
    scaled.p1 = std::pow(lambda, eq.n) * eq.p1;
    scaled.p2 = std::pow(lambda, eq.m) * eq.p2;
    CHECK(verify(scaled, lambda * f).verified);
  }
}

TEST_CASE("branch tags map to their wire names") {
  CHECK(to_string(TheoremBranch::Thm11_i) == "Thm1.1-i");
  CHECK(to_string(TheoremBranch::Thm11_ii) == "Thm1.1-ii");
  CHECK(to_string(TheoremBranch::CorC1Nonexistence) == "Cor-c1-nonexistence");
  CHECK(to_string(TheoremBranch::Thm12_n4) == "Thm1.2-n4");
  CHECK(to_string(TheoremBranch::Thm12_n3Nonexistence) == "Thm1.2-n3-nonexistence");
  CHECK(to_string(TheoremBranch::ThmE_i) == "ThmE-i");
  CHECK(to_string(TheoremBranch::ThmE_ii) == "ThmE-ii");
  CHECK(to_string(TheoremBranch::Conj2BranchA) == "Conj2-branch-A");
  CHECK(to_string(TheoremBranch::Conj2BranchB) == "Conj2-branch-B");
  CHECK(to_string(TheoremBranch::NoClassifiedSolution) == "no-classified-solution");
  CHECK(to_string(TheoremBranch::OutOfTheoremScope) == "out-of-theorem-scope");
}
