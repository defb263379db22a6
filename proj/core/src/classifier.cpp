#include "fdde/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fdde {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << "; ";
    out << parts[i];
  }
  return out.str();
}

void require_hypotheses(const FermatDDE& eq, bool need_distinct_frequencies) {
  std::vector<std::string> violations = eq.hypothesis_violations();
  if (need_distinct_frequencies) {
    const double scale = std::max(std::abs(eq.a1), std::abs(eq.a2));
    if (approx_equal_scaled(eq.a1, eq.a2, scale))
      violations.push_back("a1 must differ from a2");
  }
  if (!violations.empty()) throw HypothesisError(join(violations));
}

bool frequency_gate(int m, Complex am, int n, Complex an) {
  // m*am == n*an, with tolerance scaled by the frequency magnitudes.
  const double scale = std::max(std::abs(am), std::abs(an));
  return approx_equal_scaled(static_cast<double>(m) * am, static_cast<double>(n) * an, scale);
}

void append_verified(std::vector<Certificate>& out, const FermatDDE& eq,
                     const std::vector<ExpPoly>& candidates) {
  for (const ExpPoly& candidate : candidates) {
    Certificate cert = verify(eq, candidate);
    if (!cert.verified) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Certificate& c) {
      return c.candidate.equals(cert.candidate);
    });
    if (!duplicate) out.push_back(std::move(cert));
  }
}

// Shared two-branch enumeration for the general and difference classifiers.
SolutionReport classify_two_branch(const FermatDDE& eq, bool gate_holds,
                                   const char* gate_description) {
  SolutionReport report;
  if (!gate_holds) {
    report.theorem_branch = TheoremBranch::OutOfTheoremScope;
    report.notes.push_back(std::string("the (n, m) pair is outside the gate ") +
                           gate_description + "; the classifier abstains "
                           "(ansatz search may still explore this input)");
    return report;
  }
  if (eq.n == eq.m) {
    report.theorem_branch = TheoremBranch::CorC1Nonexistence;
    report.notes.push_back("equal powers n = m > 4 with a1 != a2: both admissible "
                           "frequency conditions would force a1 = a2, so no solution exists");
    return report;
  }

  bool any_gate = false;
  std::vector<Certificate> verified;
  for (int branch : {1, 2}) {
    const Complex freq = branch == 1 ? eq.a1 : eq.a2;
    const Complex other = branch == 1 ? eq.a2 : eq.a1;
    const char* tag = branch == 1 ? "branch (i)" : "branch (ii)";
    if (!frequency_gate(eq.m, freq, eq.n, other)) continue;
    any_gate = true;

    const ExpPoly& p = branch == 1 ? eq.p1 : eq.p2;
    const char* pname = branch == 1 ? "p1" : "p2";
    if (!p.is_polynomial()) {
      report.notes.push_back(std::string(tag) + ": " + pname +
                             " is not a polynomial; root extraction unsupported, so the "
                             "classifier cannot enumerate this branch");
      continue;
    }
    const std::vector<ExpPoly> candidates = root_branch_candidates(eq, branch);
    if (candidates.empty()) {
      report.notes.push_back(std::string(tag) + ": " + pname + " is not a perfect " +
                             std::to_string(eq.n) + "-th power, so no candidate of the "
                             "admissible shape exists");
      continue;
    }

    const std::size_t before = verified.size();
    append_verified(verified, eq, candidates);
    const std::size_t kept = verified.size() - before;
    report.notes.push_back(std::string(tag) + ": frequency condition holds; enumerated " +
                           std::to_string(candidates.size()) + " root candidates, " +
                           std::to_string(kept) + " verified by substitution");
    if (kept > 0) {
      report.theorem_branch =
          branch == 1 ? TheoremBranch::Thm11_i : TheoremBranch::Thm11_ii;
    }
  }

  if (!verified.empty()) {
    report.solutions = std::move(verified);
    return report;
  }

  report.theorem_branch = TheoremBranch::NoClassifiedSolution;
  if (!any_gate) {
    report.notes.push_back("neither frequency condition m*a1 = n*a2 nor m*a2 = n*a1 holds; "
                           "the classification rules out every solution of the admissible shape");
  }
  return report;
}

std::vector<Complex> square_roots(Complex w) { return complex_nth_roots(w, 2, true); }

ExpPoly two_exponentials(Complex c1, Complex f1, Complex c2, Complex f2) {
  return ExpPoly::from_terms({{Poly::constant(c1), Poly::monomial(f1, 1)},
                              {Poly::constant(c2), Poly::monomial(f2, 1)}});
}

}  // namespace

std::string_view to_string(TheoremBranch branch) {
  switch (branch) {
    case TheoremBranch::Thm11_i: return "Thm1.1-i";
    case TheoremBranch::Thm11_ii: return "Thm1.1-ii";
    case TheoremBranch::CorC1Nonexistence: return "Cor-c1-nonexistence";
    case TheoremBranch::Thm12_n4: return "Thm1.2-n4";
    case TheoremBranch::Thm12_n3Nonexistence: return "Thm1.2-n3-nonexistence";
    case TheoremBranch::ThmE_i: return "ThmE-i";
    case TheoremBranch::ThmE_ii: return "ThmE-ii";
    case TheoremBranch::Conj2BranchA: return "Conj2-branch-A";
    case TheoremBranch::Conj2BranchB: return "Conj2-branch-B";
    case TheoremBranch::NoClassifiedSolution: return "no-classified-solution";
    case TheoremBranch::OutOfTheoremScope: return "out-of-theorem-scope";
  }
  return "unknown";
}

std::vector<ExpPoly> root_branch_candidates(const FermatDDE& eq, int branch) {
  if (branch != 1 && branch != 2)
    throw std::invalid_argument("root_branch_candidates: branch must be 1 or 2");
  const ExpPoly& p = branch == 1 ? eq.p1 : eq.p2;
  const Complex freq = branch == 1 ? eq.a1 : eq.a2;
  if (!p.is_polynomial()) return {};
  const Poly base = p.polynomial_part();
  if (base.is_zero()) return {};

  std::vector<ExpPoly> candidates;
  for (const Poly& root : poly_nth_root(base, eq.n)) {
    const Poly exponent = Poly::monomial(freq / static_cast<double>(eq.n), eq.k);
    candidates.push_back(ExpPoly::exponential(exponent, root));
  }
  return candidates;
}

SolutionReport classify_general(const FermatDDE& eq) {
  require_hypotheses(eq, /*need_distinct_frequencies=*/true);
  const bool gate = (eq.n > 4 && eq.m >= 2) || (eq.n == 4 && eq.m > 4);
  return classify_two_branch(eq, gate, "(n > 4 and m >= 2) or (n = 4 and m > 4)");
}

SolutionReport classify_difference(const FermatDDE& eq) {
  if (eq.l != 0) throw HypothesisError("classify_difference requires l = 0");
  require_hypotheses(eq, /*need_distinct_frequencies=*/true);
  const bool gate = (eq.n > 4 && eq.m >= 2) || (eq.m > 4 && eq.n >= 2);
  return classify_two_branch(eq, gate, "(n > 4 and m >= 2) or (m > 4 and n >= 2)");
}

SolutionReport classify_k1_symmetric(const FermatDDE& eq) {
  std::vector<std::string> violations;
  if (eq.n != eq.m) violations.push_back("requires n = m");
  if (eq.n < 2 || eq.n > 4) violations.push_back("requires n in {2, 3, 4}");
  if (eq.l != 1) violations.push_back("requires l = 1");
  if (eq.k != 1) violations.push_back("requires k = 1");
  if (!approx_zero(eq.c)) violations.push_back("requires c = 0");
  if (approx_zero(eq.a)) violations.push_back("a must be nonzero");
  if (approx_zero(eq.a1)) violations.push_back("a1 = b must be nonzero");
  const double freq_scale = std::max(std::abs(eq.a1), std::abs(eq.a2));
  if (!approx_equal_scaled(eq.a2, -eq.a1, freq_scale))
    violations.push_back("requires a2 = -a1");
  Complex p1{}, p2{};
  if (!eq.p1.constant_value(&p1) || approx_zero(p1))
    violations.push_back("p1 must be a nonzero constant");
  if (!eq.p2.constant_value(&p2) || approx_zero(p2))
    violations.push_back("p2 must be a nonzero constant");
  if (!violations.empty()) throw HypothesisError(join(violations));

  const Complex b = eq.a1;
  SolutionReport report;

  if (eq.n == 3) {
    report.theorem_branch = TheoremBranch::Thm12_n3Nonexistence;
    report.notes.push_back("n = 3 admits no entire solution in this family");
    return report;
  }

  if (eq.n == 4) {
    const Complex c4 = eq.a * std::pow(b / 2.0, 4);
    if (!approx_equal(c4, Complex{-1.0})) {
      report.theorem_branch = TheoremBranch::NoClassifiedSolution;
      report.notes.push_back("n = 4 requires a (b/2)^4 = -1, which fails here; "
                             "no solution of the binomial shape exists");
      return report;
    }
    // 8 k1^3 k2 = p1 and 8 k2^3 k1 = p2: put s = k2/k1, so s^2 = p2/p1 and
    // k1^4 = p1 / (8 s).
    std::vector<ExpPoly> candidates;
    for (const Complex& s : square_roots(p2 / p1)) {
      for (const Complex& k1 : complex_nth_roots(p1 / (8.0 * s), 4, true)) {
        candidates.push_back(two_exponentials(k1, b / 2.0, s * k1, -b / 2.0));
      }
    }
    append_verified(report.solutions, eq, candidates);
    report.theorem_branch = report.solutions.empty() ? TheoremBranch::NoClassifiedSolution
                                                     : TheoremBranch::Thm12_n4;
    report.notes.push_back("a (b/2)^4 = -1 holds; enumerated " +
                           std::to_string(candidates.size()) + " coefficient branches, " +
                           std::to_string(report.solutions.size()) + " verified");
    return report;
  }

  // n = 2.
  const Complex ab2 = eq.a * b * b;
  if (approx_equal(ab2, Complex{-1.0})) {
    std::vector<ExpPoly> candidates;
    for (const Complex& r : complex_nth_roots(-p1 * p2, 4, true)) {
      const Complex t1 = p1 / (2.0 * r);
      const Complex t2 = p2 / (2.0 * r);
      ExpPoly candidate = two_exponentials(t1, b, t2, -b) + ExpPoly::constant(r);
      candidates.push_back(std::move(candidate));
    }
    append_verified(report.solutions, eq, candidates);
    report.theorem_branch = report.solutions.empty() ? TheoremBranch::NoClassifiedSolution
                                                     : TheoremBranch::ThmE_i;
    report.notes.push_back("ab^2 = -1: four-root family t1 e^{bz} + t2 e^{-bz} + r over "
                           "the quartic roots of -p1 p2; " +
                           std::to_string(report.solutions.size()) + " verified");
    return report;
  }

  if (approx_equal(ab2, Complex{4.0})) {
    std::vector<ExpPoly> candidates;
    for (const Complex& l1 : square_roots(p1 / 2.0))
      for (const Complex& l2 : square_roots(p2 / 2.0))
        candidates.push_back(two_exponentials(l1, b / 2.0, l2, -b / 2.0));
    append_verified(report.solutions, eq, candidates);
    report.theorem_branch = report.solutions.empty() ? TheoremBranch::NoClassifiedSolution
                                                     : TheoremBranch::ThmE_ii;
    report.notes.push_back("ab^2 = 4: half-frequency binomials with l1^2 = p1/2, "
                           "l2^2 = p2/2; " +
                           std::to_string(report.solutions.size()) + " verified");
    return report;
  }

  if (approx_equal(9.0 * ab2, Complex{-4.0})) {
    std::vector<Certificate> branch_a;
    for (const Complex& l2 : square_roots(9.0 / 8.0 * p1))
      for (const Complex& l1 : square_roots(p2 * p2 / (8.0 * p1)))
        append_verified(branch_a, eq, {two_exponentials(l1, -1.5 * b, l2, 0.5 * b)});

    std::vector<Certificate> branch_b;
    for (const Complex& l4 : square_roots(9.0 / 8.0 * p2))
      for (const Complex& l3 : square_roots(p1 * p1 / (8.0 * p2)))
        append_verified(branch_b, eq, {two_exponentials(l3, 1.5 * b, l4, -0.5 * b)});

    report.notes.push_back("9ab^2 = -4: sign pairs with l2^2 = (9/8) p1, l1^2 = p2^2/(8 p1) "
                           "(and mirrored for the opposite frequency pattern); substitution "
                           "keeps only pairings with (8/3) l1 l2 = p2; branch A verified " +
                           std::to_string(branch_a.size()) + ", branch B verified " +
                           std::to_string(branch_b.size()));
    if (!branch_a.empty()) {
      report.theorem_branch = TheoremBranch::Conj2BranchA;
      if (!branch_b.empty())
        report.notes.push_back("both mixed-frequency families verified; branch A solutions "
                               "are listed first, branch B after them");
    } else if (!branch_b.empty()) {
      report.theorem_branch = TheoremBranch::Conj2BranchB;
    } else {
      report.theorem_branch = TheoremBranch::NoClassifiedSolution;
    }
    report.solutions = std::move(branch_a);
    for (Certificate& cert : branch_b) {
      const bool duplicate = std::any_of(
          report.solutions.begin(), report.solutions.end(),
          [&](const Certificate& c) { return c.candidate.equals(cert.candidate); });
      if (!duplicate) report.solutions.push_back(std::move(cert));
    }
    return report;
  }

  report.theorem_branch = TheoremBranch::NoClassifiedSolution;
  report.notes.push_back("n = 2 has entire solutions only when ab^2 = -1, ab^2 = 4 or "
                         "9ab^2 = -4; none of the conditions holds, so no solution exists");
  return report;
}

}  // namespace fdde
