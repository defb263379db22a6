#include "fdde/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdde {

namespace {

// Canonicalize in place: drop trailing coefficients that are approx-zero
// relative to the largest coefficient magnitude.
void canonicalize(std::vector<Complex>& coeffs) {
  for (const Complex& c : coeffs) {
    if (!is_finite(c)) throw std::invalid_argument("Poly: non-finite coefficient");
  }
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  const Tolerance& tol = Tolerance::global();
  const double drop = tol.abs_eps + tol.rel_eps * scale;
  while (!coeffs.empty() && std::abs(coeffs.back()) <= drop) coeffs.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize(coeffs_);
}

Poly Poly::constant(Complex value) { return Poly{{value}}; }

Poly Poly::variable() { return Poly{{Complex{0.0}, Complex{1.0}}}; }

Poly Poly::monomial(Complex coeff, int power) {
  if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
  std::vector<Complex> c(static_cast<std::size_t>(power) + 1, Complex{0.0});
  c.back() = coeff;
  return Poly{std::move(c)};
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Complex Poly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return Complex{0.0};
  return coeffs_[static_cast<std::size_t>(power)];
}

Complex Poly::leading() const {
  if (coeffs_.empty()) return Complex{0.0};
  return coeffs_.back();
}

double Poly::max_coeff_magnitude() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Poly::operator()(Complex z) const {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::operator-() const { return Complex{-1.0} * *this; }

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Complex> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex{0.0});
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return Poly{std::move(out)};
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly{};
  std::vector<Complex> out(p.coeffs_.size() + q.coeffs_.size() - 1, Complex{0.0});
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Poly{std::move(out)};
}

Poly operator*(Complex s, const Poly& p) {
  std::vector<Complex> out = p.coeffs_;
  for (Complex& c : out) c *= s;
  return Poly{std::move(out)};
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Poly{std::move(out)};
}

Poly Poly::shifted(Complex c) const {
  // Horner in (z + c): acc <- acc*(z+c) + coeff, highest power first.
  const Poly zc = Poly{{c, Complex{1.0}}};
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * zc + Poly::constant(*it);
  return acc;
}

Poly Poly::without_constant_term() const {
  if (coeffs_.empty()) return Poly{};
  std::vector<Complex> out = coeffs_;
  out[0] = Complex{0.0};
  return Poly{std::move(out)};
}

bool Poly::approx_equal_to(const Poly& other, const Tolerance& tol) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!approx_equal(coeff(static_cast<int>(i)), other.coeff(static_cast<int>(i)), tol))
      return false;
  }
  return true;
}

int poly_compare(const Poly& a, const Poly& b) {
  const int da = a.degree().value_or(-1);
  const int db = b.degree().value_or(-1);
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i <= da; ++i) {
    const Complex ca = a.coeff(i);
    const Complex cb = b.coeff(i);
    if (ca.real() != cb.real()) return ca.real() < cb.real() ? -1 : 1;
    if (ca.imag() != cb.imag()) return ca.imag() < cb.imag() ? -1 : 1;
  }
  return 0;
}

std::vector<Poly> poly_nth_root(const Poly& p, int n) {
  if (n < 1) throw std::invalid_argument("poly_nth_root: n must be >= 1");
  if (p.is_zero()) throw std::invalid_argument("poly_nth_root: zero polynomial");
  if (n == 1) return {p};

  const int deg = *p.degree();
  if (deg % n != 0) return {};
  const int root_deg = deg / n;

  // Formal power-series root from the leading coefficient downward: with the
  // top coefficient fixed to a principal n-th root, the coefficient of
  // z^(deg - t) in R^n is linear in r_{root_deg - t} with slope n*r_top^(n-1).
  const Complex r_top = complex_nth_roots(p.leading(), n, /*require_nonzero=*/true)[0];
  std::vector<Complex> r(static_cast<std::size_t>(root_deg) + 1, Complex{0.0});
  r.back() = r_top;
  const Complex slope = static_cast<double>(n) * std::pow(r_top, n - 1);

  for (int t = 1; t <= root_deg; ++t) {
    Poly candidate{std::vector<Complex>(r)};
    Poly expansion = Poly::constant(Complex{1.0});
    for (int i = 0; i < n; ++i) expansion = expansion * candidate;
    const Complex mismatch = p.coeff(deg - t) - expansion.coeff(deg - t);
    r[static_cast<std::size_t>(root_deg - t)] += mismatch / slope;
  }

  Poly root{std::move(r)};
  Poly check = Poly::constant(Complex{1.0});
  for (int i = 0; i < n; ++i) check = check * root;

  // Certify by re-expansion: max-coefficient distance within tolerance of p.
  const Tolerance& tol = Tolerance::global();
  const double allow = tol.abs_eps + tol.rel_eps * p.max_coeff_magnitude();
  const int top = std::max(check.degree().value_or(-1), deg);
  for (int i = 0; i <= top; ++i) {
    if (std::abs(check.coeff(i) - p.coeff(i)) > allow) return {};
  }

  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const Complex& zeta : complex_nth_roots(Complex{1.0}, n)) out.push_back(zeta * root);
  return out;
}

}  // namespace fdde
