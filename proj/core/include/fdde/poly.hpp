#pragma once

#include <optional>
#include <vector>

#include "fdde/scalar.hpp"

namespace fdde {

/// Univariate polynomial over Complex, canonical form: coefficient i is the
/// coefficient of z^i and the highest-index coefficient is never approx-zero.
/// The zero polynomial is the empty coefficient list; its degree is the
/// disengaged optional, never a number.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);

  static Poly constant(Complex value);
  static Poly variable();
  static Poly monomial(Complex coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  Complex coeff(int power) const;
  Complex leading() const;
  Complex constant_term() const { return coeff(0); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_coeff_magnitude() const;

  Complex operator()(Complex z) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Complex s, const Poly& p);

  Poly derivative() const;

  /// p(z + c), binomial expansion; degree preserved.
  Poly shifted(Complex c) const;

  /// Drop the constant term exactly (used when folding exponent constants).
  Poly without_constant_term() const;

  bool approx_equal_to(const Poly& other, const Tolerance& tol = Tolerance::global()) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Total order on canonical polynomials: by degree, then coefficientwise from
/// power 0 upward by (re, im). Exact comparison, used for deterministic
/// sorting only, never for equality decisions.
int poly_compare(const Poly& a, const Poly& b);

/// All polynomials R with R^n ~ p (empty when p is not a perfect n-th power;
/// otherwise exactly n entries, one formal root times the n-th roots of
/// unity). The formal root is built from the leading coefficient downward and
/// certified by re-expansion against p.
std::vector<Poly> poly_nth_root(const Poly& p, int n);

}  // namespace fdde
