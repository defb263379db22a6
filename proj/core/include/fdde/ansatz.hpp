#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdde/equation.hpp"

namespace fdde {

/// Trial-function family for the finite-frequency search: f is a sum of
/// polynomial coefficients (degree <= max_poly_degree) times e^{omega_j z}
/// over the given pairwise-distinct frequencies.
struct AnsatzSpec {
  std::vector<Complex> frequencies;
  int max_poly_degree = 0;
  int starts = 64;
  std::uint64_t seed = 0;
};

struct StartTrace {
  std::vector<double> residual_norms;  // ||F|| per Newton iteration, initial included
  bool converged = false;              // reached ||F|| < 1e-10
  bool singular = false;               // Jacobian solve failed; start skipped
};

/// Search outcome. Entries of found passed the exact substitution test (the
/// numeric residual norm is never the acceptance criterion); an empty found
/// list is evidence of non-existence on this frequency support, not a proof.
struct SearchResult {
  std::vector<Certificate> found;
  std::vector<StartTrace> residual_norm_history;  // one trace per start
  bool exhausted = false;                         // every start ran to a terminal state
  std::vector<std::string> notes;
};

/// Candidate frequency support for degree-one exponents (k = 1 only):
/// a_i/n, a_i/m, their negatives and a_i + s combinations, deduplicated and
/// clipped to at most 12 entries, in a deterministic order.
std::vector<Complex> propose_frequencies(const FermatDDE& eq);

/// Damped-Newton multistart on the residual's coefficient-matching system:
/// stacks the real/imaginary parts of every residual coefficient over the
/// structural exponent basis, solves by least-squares Newton steps with
/// numerically differenced Jacobians, snaps converged coefficients to small
/// Gaussian rationals, and re-verifies exactly.
SearchResult search(const FermatDDE& eq, const AnsatzSpec& spec);

}  // namespace fdde
