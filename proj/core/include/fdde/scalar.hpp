#pragma once

#include <complex>
#include <vector>

namespace fdde {

using Complex = std::complex<double>;

/// Tolerance policy shared by all approximate comparisons.
///
/// Two scalars are considered equal iff
///   |a - b| <= abs_eps + rel_eps * max(|a|, |b|).
struct Tolerance {
  double abs_eps = 1e-12;
  double rel_eps = 1e-9;

  // Process-wide default, mutable (e.g. from the FERMAT_DDE_TOL override).
  static Tolerance& global();
};

bool approx_equal(Complex a, Complex b, const Tolerance& tol = Tolerance::global());
bool approx_zero(Complex a, const Tolerance& tol = Tolerance::global());

/// Equality with an explicit external scale, for quantities that must be
/// compared relative to the magnitude of a surrounding problem (e.g. the
/// frequency gates m*a1 == n*a2, scaled by max(|a1|,|a2|)).
bool approx_equal_scaled(Complex a, Complex b, double scale,
                         const Tolerance& tol = Tolerance::global());

bool is_finite(Complex a);

/// All n solutions of x^n = w: the principal root times the n-th roots of
/// unity, ordered by ascending principal argument in (-pi, pi], ties by
/// modulus. For w ~ 0 returns n copies of zero unless require_nonzero is
/// set, in which case it throws std::invalid_argument.
std::vector<Complex> complex_nth_roots(Complex w, int n, bool require_nonzero = false);

}  // namespace fdde
