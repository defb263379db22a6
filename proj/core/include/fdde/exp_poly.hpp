#pragma once

#include <utility>
#include <vector>

#include "fdde/poly.hpp"
#include "fdde/scalar.hpp"

namespace fdde {

/// One summand P(z) * exp(Q(z)). Invariants: P is canonical and nonzero, Q is
/// canonical with constant term exactly zero (the scalar e^{Q(0)} is always
/// folded into P).
struct ExpTerm {
  Poly coeff;
  Poly exponent;
};

/// Finite sum of ExpTerms with pairwise distinct exponents, kept in a unique
/// canonical order. Distinct exponents cannot cancel (Borel-type uniqueness),
/// so two values represent the same function iff their canonical forms match
/// termwise; the zero function is the empty term set.
class ExpPoly {
 public:
  ExpPoly() = default;

  /// Canonicalize a raw list of (coefficient, exponent) pairs: fold exponent
  /// constants into coefficients, merge equal exponents, drop coefficients
  /// that are negligible relative to the largest coefficient seen, sort.
  static ExpPoly from_terms(std::vector<std::pair<Poly, Poly>> raw);

  static ExpPoly constant(Complex value);
  static ExpPoly polynomial(Poly p);
  /// coeff * e^{exponent}
  static ExpPoly exponential(Poly exponent, Poly coeff = Poly::constant(Complex{1.0}));

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ExpTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest coefficient magnitude across all terms (0 for the zero function).
  double max_coeff_magnitude() const;

  /// True when every exponent is the zero polynomial (includes the zero
  /// function and constants).
  bool is_polynomial() const;
  /// True when the value is a single constant term; fills *value if nonnull.
  bool constant_value(Complex* value = nullptr) const;
  /// The coefficient polynomial attached to a zero exponent, if any.
  Poly polynomial_part() const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& f, const ExpPoly& g);
  friend ExpPoly operator-(const ExpPoly& f, const ExpPoly& g);
  friend ExpPoly operator*(const ExpPoly& f, const ExpPoly& g);
  friend ExpPoly operator*(Complex s, const ExpPoly& f);

  /// f^n by binary exponentiation; pow(0) is the constant 1.
  ExpPoly pow(int n) const;

  /// l-fold derivative, d/dz [P e^Q] = (P' + P Q') e^Q.
  ExpPoly derivative(int l = 1) const;

  /// f(z + c) in every coefficient and exponent; new exponent constants are
  /// re-folded into coefficients.
  ExpPoly shifted(Complex c) const;

  bool equals(const ExpPoly& other) const { return (*this - other).is_zero(); }

  /// Direct evaluation; may overflow for large |z| (growth code evaluates
  /// through eval_rescaled instead).
  Complex operator()(Complex z) const;

 private:
  std::vector<ExpTerm> terms_;
};

/// sum_j P_j(z) * exp(Q_j(z) - shift); with shift = max_j Re(Q_j(z)) every
/// exponential factor has modulus <= 1.
Complex eval_rescaled(const ExpPoly& f, Complex z, double shift);

/// max_j Re(Q_j(z)), the natural rescaling shift at z (0 for the zero
/// function).
double max_exponent_real(const ExpPoly& f, Complex z);

/// Deterministic total order (degree/coefficient lexicographic over terms);
/// used for sorting solution lists, not for equality.
int exp_poly_compare(const ExpPoly& a, const ExpPoly& b);

}  // namespace fdde
