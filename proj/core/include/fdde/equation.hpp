#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fdde/exp_poly.hpp"

namespace fdde {

/// A theorem hypothesis does not hold for the given equation data.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter bundle for f^n(z) + a * (f^(l)(z+c))^m = p1 e^{a1 z^k} + p2 e^{a2 z^k}.
///
/// Construction validates only the integer ranges (n, m >= 1, l >= 0, k >= 1)
/// and finiteness; the analytic hypotheses (nonzero a, a_i, p_i, order of p_i
/// below k) are checked at classifier entry via hypothesis_violations().
struct FermatDDE {
  int n = 1;
  int m = 1;
  int l = 0;
  Complex a{1.0};
  Complex c{0.0};
  ExpPoly p1;
  ExpPoly p2;
  Complex a1{0.0};
  Complex a2{0.0};
  int k = 1;

  FermatDDE(int n_, int m_, int l_, Complex a_, Complex c_, ExpPoly p1_, ExpPoly p2_,
            Complex a1_, Complex a2_, int k_);

  /// p1 e^{a1 z^k} + p2 e^{a2 z^k}, normalized (equal frequencies merge).
  ExpPoly rhs() const;

  /// f^n + a (f^(l)(z+c))^m - rhs, normalized.
  ExpPoly residual(const ExpPoly& f) const;

  /// Human-readable list of violated analytic hypotheses (empty if all hold).
  std::vector<std::string> hypothesis_violations() const;
};

/// Substitution certificate: the candidate verifies iff the residual's
/// largest coefficient magnitude is at most 1e-9 times the largest rhs
/// coefficient magnitude (an exactly-cancelling residual reports 0).
struct Certificate {
  ExpPoly candidate;
  double residual_max_coeff = 0.0;
  bool verified = false;
};

Certificate verify(const FermatDDE& eq, const ExpPoly& f);

}  // namespace fdde
