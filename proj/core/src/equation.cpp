#include "fdde/equation.hpp"

#include <cmath>

namespace fdde {

FermatDDE::FermatDDE(int n_, int m_, int l_, Complex a_, Complex c_, ExpPoly p1_, ExpPoly p2_,
                     Complex a1_, Complex a2_, int k_)
    : n(n_), m(m_), l(l_), a(a_), c(c_), p1(std::move(p1_)), p2(std::move(p2_)), a1(a1_),
      a2(a2_), k(k_) {
  if (n < 1) throw std::invalid_argument("FermatDDE: n must be a positive integer");
  if (m < 1) throw std::invalid_argument("FermatDDE: m must be a positive integer");
  if (l < 0) throw std::invalid_argument("FermatDDE: l must be nonnegative");
  if (k < 1) throw std::invalid_argument("FermatDDE: k must be a positive integer");
  if (!is_finite(a) || !is_finite(c) || !is_finite(a1) || !is_finite(a2))
    throw std::invalid_argument("FermatDDE: non-finite scalar parameter");
}

ExpPoly FermatDDE::rhs() const {
  const ExpPoly e1 = ExpPoly::exponential(Poly::monomial(a1, k));
  const ExpPoly e2 = ExpPoly::exponential(Poly::monomial(a2, k));
  return p1 * e1 + p2 * e2;
}

ExpPoly FermatDDE::residual(const ExpPoly& f) const {
  const ExpPoly delay = f.shifted(c).derivative(l);
  return f.pow(n) + a * delay.pow(m) - rhs();
}

std::vector<std::string> FermatDDE::hypothesis_violations() const {
  std::vector<std::string> out;
  if (approx_zero(a)) out.push_back("a must be nonzero");
  if (approx_zero(a1)) out.push_back("a1 must be nonzero");
  if (approx_zero(a2)) out.push_back("a2 must be nonzero");
  if (p1.is_zero()) out.push_back("p1 must be nonzero");
  if (p2.is_zero()) out.push_back("p2 must be nonzero");

  // order(p_i) < k, with order the maximal exponent degree.
  for (const auto* p : {&p1, &p2}) {
    int ord = 0;
    for (const ExpTerm& t : p->terms()) ord = std::max(ord, t.exponent.degree().value_or(0));
    if (!p->is_zero() && ord >= k) {
      out.push_back(std::string(p == &p1 ? "p1" : "p2") + " must have order below k");
    }
  }
  return out;
}

Certificate verify(const FermatDDE& eq, const ExpPoly& f) {
  const ExpPoly res = eq.residual(f);
  double max_coeff = 0.0;
  for (const ExpTerm& t : res.terms())
    max_coeff = std::max(max_coeff, t.coeff.max_coeff_magnitude());

  const double tolerance = 1e-9 * eq.rhs().max_coeff_magnitude();
  return Certificate{f, max_coeff, max_coeff <= tolerance};
}

}  // namespace fdde
