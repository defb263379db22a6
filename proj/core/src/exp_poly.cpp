#include "fdde/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdde {

ExpPoly ExpPoly::from_terms(std::vector<std::pair<Poly, Poly>> raw) {
  // Fold e^{Q(0)} into the coefficient so exponents have zero constant term.
  std::vector<ExpTerm> folded;
  folded.reserve(raw.size());
  double scale = 0.0;
  for (auto& [coeff, exponent] : raw) {
    if (coeff.is_zero()) continue;
    const Complex q0 = exponent.constant_term();
    Poly c = (q0 == Complex{0.0}) ? std::move(coeff) : std::exp(q0) * coeff;
    scale = std::max(scale, c.max_coeff_magnitude());
    folded.push_back(ExpTerm{std::move(c), exponent.without_constant_term()});
  }

  // Merge terms whose exponents agree coefficientwise under the tolerance.
  std::vector<ExpTerm> merged;
  for (ExpTerm& term : folded) {
    bool absorbed = false;
    for (ExpTerm& existing : merged) {
      if (existing.exponent.approx_equal_to(term.exponent)) {
        existing.coeff = existing.coeff + term.coeff;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(term));
  }

  // The drop threshold is relative to the largest coefficient that entered
  // the sum, so residuals of exact identities cancel to the empty term set.
  const Tolerance& tol = Tolerance::global();
  const double drop = tol.abs_eps + tol.rel_eps * scale;
  ExpPoly out;
  for (ExpTerm& term : merged) {
    if (term.coeff.max_coeff_magnitude() > drop) out.terms_.push_back(std::move(term));
  }

  std::sort(out.terms_.begin(), out.terms_.end(), [](const ExpTerm& a, const ExpTerm& b) {
    return poly_compare(a.exponent, b.exponent) < 0;
  });
  return out;
}

ExpPoly ExpPoly::constant(Complex value) {
  return from_terms({{Poly::constant(value), Poly{}}});
}

ExpPoly ExpPoly::polynomial(Poly p) {
  return from_terms({{std::move(p), Poly{}}});
}

ExpPoly ExpPoly::exponential(Poly exponent, Poly coeff) {
  return from_terms({{std::move(coeff), std::move(exponent)}});
}

double ExpPoly::max_coeff_magnitude() const {
  double m = 0.0;
  for (const ExpTerm& t : terms_) m = std::max(m, t.coeff.max_coeff_magnitude());
  return m;
}

bool ExpPoly::is_polynomial() const {
  for (const ExpTerm& t : terms_) {
    if (!t.exponent.is_zero()) return false;
  }
  return true;
}

bool ExpPoly::constant_value(Complex* value) const {
  if (terms_.empty()) {
    if (value) *value = Complex{0.0};
    return true;
  }
  if (terms_.size() != 1 || !terms_[0].exponent.is_zero()) return false;
  if (terms_[0].coeff.degree().value_or(-1) != 0) return false;
  if (value) *value = terms_[0].coeff.constant_term();
  return true;
}

Poly ExpPoly::polynomial_part() const {
  for (const ExpTerm& t : terms_) {
    if (t.exponent.is_zero()) return t.coeff;
  }
  return Poly{};
}

ExpPoly ExpPoly::operator-() const { return Complex{-1.0} * *this; }

ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) {
  std::vector<std::pair<Poly, Poly>> raw;
  raw.reserve(f.terms_.size() + g.terms_.size());
  for (const ExpTerm& t : f.terms_) raw.emplace_back(t.coeff, t.exponent);
  for (const ExpTerm& t : g.terms_) raw.emplace_back(t.coeff, t.exponent);
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly operator-(const ExpPoly& f, const ExpPoly& g) { return f + (-g); }

ExpPoly operator*(const ExpPoly& f, const ExpPoly& g) {
  std::vector<std::pair<Poly, Poly>> raw;
  raw.reserve(f.terms_.size() * g.terms_.size());
  for (const ExpTerm& a : f.terms_)
    for (const ExpTerm& b : g.terms_)
      raw.emplace_back(a.coeff * b.coeff, a.exponent + b.exponent);
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly operator*(Complex s, const ExpPoly& f) {
  std::vector<std::pair<Poly, Poly>> raw;
  raw.reserve(f.terms_.size());
  for (const ExpTerm& t : f.terms_) raw.emplace_back(s * t.coeff, t.exponent);
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly ExpPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("ExpPoly::pow: negative exponent");
  ExpPoly result = ExpPoly::constant(Complex{1.0});
  ExpPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ExpPoly ExpPoly::derivative(int l) const {
  if (l < 0) throw std::invalid_argument("ExpPoly::derivative: negative order");
  ExpPoly cur = *this;
  for (int step = 0; step < l; ++step) {
    std::vector<std::pair<Poly, Poly>> raw;
    raw.reserve(cur.terms_.size());
    for (const ExpTerm& t : cur.terms_)
      raw.emplace_back(t.coeff.derivative() + t.coeff * t.exponent.derivative(), t.exponent);
    cur = from_terms(std::move(raw));
  }
  return cur;
}

ExpPoly ExpPoly::shifted(Complex c) const {
  std::vector<std::pair<Poly, Poly>> raw;
  raw.reserve(terms_.size());
  for (const ExpTerm& t : terms_) raw.emplace_back(t.coeff.shifted(c), t.exponent.shifted(c));
  return from_terms(std::move(raw));
}

Complex ExpPoly::operator()(Complex z) const {
  Complex acc{0.0};
  for (const ExpTerm& t : terms_) acc += t.coeff(z) * std::exp(t.exponent(z));
  return acc;
}

Complex eval_rescaled(const ExpPoly& f, Complex z, double shift) {
  Complex acc{0.0};
  for (const ExpTerm& t : f.terms()) {
    const Complex q = t.exponent(z);
    acc += t.coeff(z) * std::exp(q - Complex{shift, 0.0});
  }
  return acc;
}

double max_exponent_real(const ExpPoly& f, Complex z) {
  double m = 0.0;
  bool first = true;
  for (const ExpTerm& t : f.terms()) {
    const double re = t.exponent(z).real();
    if (first || re > m) m = re;
    first = false;
  }
  return first ? 0.0 : m;
}

int exp_poly_compare(const ExpPoly& a, const ExpPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = poly_compare(ta[i].exponent, tb[i].exponent); c != 0) return c;
    if (int c = poly_compare(ta[i].coeff, tb[i].coeff); c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

}  // namespace fdde
