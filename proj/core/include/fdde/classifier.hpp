#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fdde/equation.hpp"

namespace fdde {

/// Which classification branch produced (or denied) the solution list.
enum class TheoremBranch {
  Thm11_i,
  Thm11_ii,
  CorC1Nonexistence,
  Thm12_n4,
  Thm12_n3Nonexistence,
  ThmE_i,
  ThmE_ii,
  Conj2BranchA,
  Conj2BranchB,
  NoClassifiedSolution,
  OutOfTheoremScope,
};

std::string_view to_string(TheoremBranch branch);

/// Result of a classification run. Every listed solution carries a passing
/// substitution certificate; nonexistence verdicts carry empty lists.
struct SolutionReport {
  TheoremBranch theorem_branch = TheoremBranch::NoClassifiedSolution;
  std::vector<Certificate> solutions;
  std::vector<std::string> notes;
};

/// General-exponent classification, gate n > 4 and m >= 2, or n = 4 and
/// m > 4. Equal powers n = m > 4 are a nonexistence verdict (the two
/// frequency conditions would force a1 = a2). Inside the gate the two
/// admissible shapes are enumerated: B1 e^{(a1/n) z^k} over the n-th roots of
/// p1 when m a1 = n a2, and B2 e^{(a2/n) z^k} over the n-th roots of p2 when
/// m a2 = n a1; every candidate is filtered by substitution.
SolutionReport classify_general(const FermatDDE& eq);

/// Pure difference case (l = 0) with the wider gate n > 4 and m >= 2, or
/// m > 4 and n >= 2; same candidate machinery as classify_general.
SolutionReport classify_difference(const FermatDDE& eq);

/// Symmetric first-order case n = m in {2,3,4}, l = 1, c = 0, k = 1,
/// a2 = -a1 =: -b with constant p1, p2. Branches:
///   n = 3: no entire solution.
///   n = 4: requires a (b/2)^4 = -1; solves 8 k1^3 k2 = p1, 8 k2^3 k1 = p2.
///   n = 2: ab^2 = -1 (four-root family with constant term),
///          ab^2 =  4 (half-frequency binomials), or
///          9ab^2 = -4 (the two mixed-frequency families); anything else has
///          no entire solution.
SolutionReport classify_k1_symmetric(const FermatDDE& eq);

/// Pre-verification candidate list for the general/difference root branches
/// (branch 1 draws from p1, branch 2 from p2); empty when the branch's
/// frequency condition fails or roots cannot be extracted. Exposed for
/// branch-exhaustiveness checks.
std::vector<ExpPoly> root_branch_candidates(const FermatDDE& eq, int branch);

}  // namespace fdde
