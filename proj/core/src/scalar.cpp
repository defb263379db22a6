#include "fdde/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdde {

Tolerance& Tolerance::global() {
  static Tolerance tol;
  return tol;
}

bool approx_equal(Complex a, Complex b, const Tolerance& tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol.abs_eps + tol.rel_eps * scale;
}

bool approx_zero(Complex a, const Tolerance& tol) {
  return approx_equal(a, Complex{0.0, 0.0}, tol);
}

bool approx_equal_scaled(Complex a, Complex b, double scale, const Tolerance& tol) {
  return std::abs(a - b) <= tol.abs_eps + tol.rel_eps * std::max({std::abs(a), std::abs(b), scale});
}

bool is_finite(Complex a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

std::vector<Complex> complex_nth_roots(Complex w, int n, bool require_nonzero) {
  if (n < 1) throw std::invalid_argument("complex_nth_roots: n must be >= 1");
  if (approx_zero(w)) {
    if (require_nonzero) throw std::invalid_argument("complex_nth_roots: nonzero radicand required");
    return std::vector<Complex>(static_cast<std::size_t>(n), Complex{0.0, 0.0});
  }

  const double radius = std::pow(std::abs(w), 1.0 / n);
  const double base_arg = std::arg(w) / n;

  // Components that are negligible against the root modulus are rounding
  // artifacts of polar evaluation (e.g. sin(pi)); zero them.
  const Tolerance& tol = Tolerance::global();
  const double chop = tol.abs_eps + tol.rel_eps * radius;

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double phi = base_arg + 2.0 * std::numbers::pi * j / n;
    Complex root = std::polar(radius, phi);
    if (std::abs(root.real()) <= chop) root = Complex{0.0, root.imag()};
    if (std::abs(root.imag()) <= chop) root = Complex{root.real(), 0.0};
    roots.push_back(root);
  }
  // Deterministic order: ascending argument in (-pi, pi], then modulus.
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    const double ax = std::arg(x);
    const double ay = std::arg(y);
    if (ax != ay) return ax < ay;
    return std::abs(x) < std::abs(y);
  });
  return roots;
}

}  // namespace fdde
