#include "fdde/ansatz.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>

namespace fdde {

namespace {

constexpr double kConvergedNorm = 1e-10;
constexpr int kMaxIterations = 200;
constexpr int kMaxHalvings = 20;
constexpr double kZeroPrune = 1e-8;
constexpr double kSnapTolerance = 1e-6;

std::optional<double> snap_to_rational(double x) {
  // Smallest denominator <= 16 within the snap tolerance, magnitude <= 8.
  for (int q = 1; q <= 16; ++q) {
    const double p = std::round(x * q);
    const double value = p / q;
    if (std::abs(value) <= 8.0 && std::abs(x - value) <= kSnapTolerance) return value;
  }
  return std::nullopt;
}

struct TrialBasis {
  std::vector<Complex> frequencies;
  int coeff_degree = 0;                 // polynomial degree of trial coefficients
  std::vector<Poly> exponent_basis;     // structural exponents of the residual
  int residual_coeff_degree = 0;        // max polynomial degree among residual coefficients
};

// Precompiled coefficient-matching system for the common constant-coefficient
// k = 1 shape: each residual coefficient is a fixed polynomial in the unknown
// trial coefficients, so one multinomial expansion up front turns every
// Newton evaluation into plain complex arithmetic.
struct FastSystem {
  struct Term {
    Complex constant;        // multinomial weight times folded equation data
    std::vector<int> index;  // which unknowns multiply into this monomial
    int slot;                // residual exponent this monomial feeds
  };
  std::vector<Term> terms;
  std::vector<Complex> rhs_by_slot;
  int slots = 0;
};

void enumerate_multisets(int count, int choices, std::vector<int>& scratch,
                         const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
  if (count == 0) {
    emit(scratch);
    return;
  }
  for (int j = from; j < choices; ++j) {
    scratch.push_back(j);
    enumerate_multisets(count - 1, choices, scratch, emit, j);
    scratch.pop_back();
  }
}

double multinomial_weight(const std::vector<int>& index, int choices) {
  std::vector<int> counts(static_cast<std::size_t>(choices), 0);
  for (int j : index) ++counts[static_cast<std::size_t>(j)];
  double weight = 1.0;
  for (std::size_t i = 1; i <= index.size(); ++i) weight *= static_cast<double>(i);
  for (int c : counts)
    for (int i = 2; i <= c; ++i) weight /= static_cast<double>(i);
  return weight;
}

std::optional<FastSystem> make_fast_system(const FermatDDE& eq, const AnsatzSpec& spec) {
  Complex p1, p2;
  if (spec.max_poly_degree != 0 || eq.k != 1 || !eq.p1.constant_value(&p1) ||
      !eq.p2.constant_value(&p2)) {
    return std::nullopt;
  }

  FastSystem sys;
  std::vector<Complex> slot_freqs;
  auto slot_of = [&](Complex freq) {
    for (std::size_t i = 0; i < slot_freqs.size(); ++i)
      if (approx_equal(slot_freqs[i], freq)) return static_cast<int>(i);
    slot_freqs.push_back(freq);
    return static_cast<int>(slot_freqs.size() - 1);
  };

  // Per-frequency delay factors: f^{(l)}(z+c) maps c_j onto c_j w^l e^{wc}.
  const int freq_count = static_cast<int>(spec.frequencies.size());
  std::vector<Complex> delay_factor(spec.frequencies.size());
  for (std::size_t j = 0; j < spec.frequencies.size(); ++j) {
    const Complex w = spec.frequencies[j];
    delay_factor[j] = std::pow(w, eq.l) * std::exp(w * eq.c);
  }

  std::vector<int> scratch;
  enumerate_multisets(eq.n, freq_count, scratch, [&](const std::vector<int>& index) {
    Complex freq{0.0};
    for (int j : index) freq += spec.frequencies[static_cast<std::size_t>(j)];
    sys.terms.push_back(
        {Complex{multinomial_weight(index, freq_count)}, index, slot_of(freq)});
  });
  enumerate_multisets(eq.m, freq_count, scratch, [&](const std::vector<int>& index) {
    Complex constant = eq.a * multinomial_weight(index, freq_count);
    Complex freq{0.0};
    for (int j : index) {
      constant *= delay_factor[static_cast<std::size_t>(j)];
      freq += spec.frequencies[static_cast<std::size_t>(j)];
    }
    sys.terms.push_back({constant, index, slot_of(freq)});
  });

  const int rhs_slot_1 = slot_of(eq.a1);
  const int rhs_slot_2 = slot_of(eq.a2);
  sys.rhs_by_slot.assign(slot_freqs.size(), Complex{0.0});
  sys.rhs_by_slot[static_cast<std::size_t>(rhs_slot_1)] += p1;
  sys.rhs_by_slot[static_cast<std::size_t>(rhs_slot_2)] += p2;
  sys.slots = static_cast<int>(slot_freqs.size());
  return sys;
}

Eigen::VectorXd eval_fast(const FastSystem& sys, const Eigen::VectorXd& x) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = Complex{x(2 * static_cast<long>(i)), x(2 * static_cast<long>(i) + 1)};

  std::vector<Complex> acc(static_cast<std::size_t>(sys.slots), Complex{0.0});
  for (std::size_t s = 0; s < sys.rhs_by_slot.size(); ++s) acc[s] -= sys.rhs_by_slot[s];
  for (const FastSystem::Term& term : sys.terms) {
    Complex value = term.constant;
    for (int j : term.index) value *= coeffs[static_cast<std::size_t>(j)];
    acc[static_cast<std::size_t>(term.slot)] += value;
  }

  Eigen::VectorXd out(2 * sys.slots);
  for (int s = 0; s < sys.slots; ++s) {
    out(2 * s) = acc[static_cast<std::size_t>(s)].real();
    out(2 * s + 1) = acc[static_cast<std::size_t>(s)].imag();
  }
  return out;
}

ExpPoly build_trial(const TrialBasis& basis, const std::vector<Complex>& coeffs) {
  std::vector<std::pair<Poly, Poly>> raw;
  const int per_freq = basis.coeff_degree + 1;
  for (std::size_t j = 0; j < basis.frequencies.size(); ++j) {
    std::vector<Complex> c(coeffs.begin() + static_cast<long>(j) * per_freq,
                           coeffs.begin() + static_cast<long>(j + 1) * per_freq);
    raw.emplace_back(Poly{std::move(c)}, Poly::monomial(basis.frequencies[j], 1));
  }
  return ExpPoly::from_terms(std::move(raw));
}

// Structural exponent basis: the residual's exponents do not depend on the
// trial coefficients, so one pass with generic values fixes the equation
// layout for Newton.
TrialBasis make_basis(const FermatDDE& eq, const AnsatzSpec& spec) {
  TrialBasis basis;
  basis.frequencies = spec.frequencies;
  basis.coeff_degree = spec.max_poly_degree;

  const int per_freq = basis.coeff_degree + 1;
  std::vector<Complex> generic(basis.frequencies.size() * static_cast<std::size_t>(per_freq));
  for (std::size_t i = 0; i < generic.size(); ++i) {
    generic[i] = Complex{0.7312 + 0.1731 * static_cast<double>(i),
                         0.4179 - 0.0937 * static_cast<double>(i)};
  }
  const ExpPoly generic_residual = eq.residual(build_trial(basis, generic));

  auto add_exponent = [&](const Poly& q) {
    for (const Poly& seen : basis.exponent_basis)
      if (seen.approx_equal_to(q)) return;
    basis.exponent_basis.push_back(q);
  };
  int degree = 0;
  for (const ExpTerm& t : generic_residual.terms()) {
    add_exponent(t.exponent);
    degree = std::max(degree, t.coeff.degree().value_or(0));
  }
  const ExpPoly rhs = eq.rhs();
  for (const ExpTerm& t : rhs.terms()) {
    add_exponent(t.exponent);
    degree = std::max(degree, t.coeff.degree().value_or(0));
  }
  basis.residual_coeff_degree = degree;
  return basis;
}

// Residual coefficients stacked as a real vector over the fixed basis.
Eigen::VectorXd residual_system(const FermatDDE& eq, const TrialBasis& basis,
                                const Eigen::VectorXd& x) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = Complex{x(2 * static_cast<long>(i)), x(2 * static_cast<long>(i) + 1)};

  const ExpPoly residual = eq.residual(build_trial(basis, coeffs));

  const int powers = basis.residual_coeff_degree + 1;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(
      2 * static_cast<long>(basis.exponent_basis.size()) * powers);
  for (const ExpTerm& t : residual.terms()) {
    for (std::size_t i = 0; i < basis.exponent_basis.size(); ++i) {
      if (!basis.exponent_basis[i].approx_equal_to(t.exponent)) continue;
      for (int d = 0; d < powers; ++d) {
        const Complex value = t.coeff.coeff(d);
        const long row = 2 * (static_cast<long>(i) * powers + d);
        out(row) = value.real();
        out(row + 1) = value.imag();
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<Complex> propose_frequencies(const FermatDDE& eq) {
  if (eq.k != 1)
    throw std::invalid_argument("propose_frequencies: only degree-one exponents (k = 1) "
                                "are supported");

  std::vector<Complex> out;
  auto push = [&](Complex w) {
    if (out.size() >= 12) return;
    for (const Complex& seen : out)
      if (approx_equal(seen, w)) return;
    out.push_back(w);
  };

  const double n = eq.n;
  const double m = eq.m;
  // a_i/n and a_i/m from the two-branch shapes, a_i/2 from the symmetric
  // half-frequency families.
  const Complex base[] = {eq.a1 / n, eq.a2 / n, eq.a1 / m, eq.a2 / m,
                          eq.a1 / 2.0, eq.a2 / 2.0};
  for (Complex w : base) push(w);
  for (Complex w : base) push(-w);
  const std::vector<Complex> ladder = out;
  for (Complex anchor : {eq.a1, eq.a2})
    for (Complex s : ladder) push(anchor + s);
  return out;
}

SearchResult search(const FermatDDE& eq, const AnsatzSpec& spec) {
  if (spec.frequencies.empty())
    throw std::invalid_argument("search: at least one frequency is required");
  if (spec.max_poly_degree < 0)
    throw std::invalid_argument("search: max_poly_degree must be nonnegative");
  if (spec.starts < 1) throw std::invalid_argument("search: starts must be positive");
  for (std::size_t i = 0; i < spec.frequencies.size(); ++i)
    for (std::size_t j = i + 1; j < spec.frequencies.size(); ++j)
      if (approx_equal(spec.frequencies[i], spec.frequencies[j]))
        throw std::invalid_argument("search: frequencies must be pairwise distinct");

  const std::optional<FastSystem> fast = make_fast_system(eq, spec);
  TrialBasis basis;
  if (fast) {
    basis.frequencies = spec.frequencies;
    basis.coeff_degree = spec.max_poly_degree;
  } else {
    basis = make_basis(eq, spec);
  }
  const auto evaluate = [&](const Eigen::VectorXd& x) {
    return fast ? eval_fast(*fast, x) : residual_system(eq, basis, x);
  };
  const long unknowns =
      2 * static_cast<long>(spec.frequencies.size()) * (spec.max_poly_degree + 1);

  SearchResult result;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);

  for (int start = 0; start < spec.starts; ++start) {
    Eigen::VectorXd x(unknowns);
    for (long i = 0; i < unknowns; ++i) x(i) = dist(rng);

    StartTrace trace;
    Eigen::VectorXd f = evaluate(x);
    double norm = f.norm();
    trace.residual_norms.push_back(norm);

    for (int iter = 0; iter < kMaxIterations && norm >= kConvergedNorm; ++iter) {
      Eigen::MatrixXd jacobian(f.size(), unknowns);
      for (long j = 0; j < unknowns; ++j) {
        const double h = 1e-7 * std::max(1.0, std::abs(x(j)));
        Eigen::VectorXd xh = x;
        xh(j) += h;
        jacobian.col(j) = (evaluate(xh) - f) / h;
      }
      const Eigen::VectorXd step = jacobian.colPivHouseholderQr().solve(-f);
      if (!step.allFinite()) {
        trace.singular = true;
        break;
      }

      // Backtracking on the residual norm.
      double lambda = 1.0;
      bool improved = false;
      for (int halving = 0; halving < kMaxHalvings; ++halving, lambda *= 0.5) {
        const Eigen::VectorXd x_next = x + lambda * step;
        const Eigen::VectorXd f_next = evaluate(x_next);
        if (f_next.norm() < norm) {
          x = x_next;
          f = f_next;
          norm = f.norm();
          improved = true;
          break;
        }
      }
      trace.residual_norms.push_back(norm);
      if (!improved) break;
    }
    trace.converged = norm < kConvergedNorm;

    if (trace.converged) {
      std::vector<Complex> coeffs(static_cast<std::size_t>(unknowns / 2));
      bool fully_snapped = true;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Complex c{x(2 * static_cast<long>(i)), x(2 * static_cast<long>(i) + 1)};
        if (std::abs(c) < kZeroPrune) c = Complex{0.0};
        const auto re = snap_to_rational(c.real());
        const auto im = snap_to_rational(c.imag());
        if (re && im) {
          c = Complex{*re, *im};
        } else {
          fully_snapped = false;
        }
        coeffs[i] = c;
      }

      const ExpPoly candidate = build_trial(basis, coeffs);
      Certificate cert = verify(eq, candidate);
      if (cert.verified && !candidate.is_zero()) {
        const bool duplicate =
            std::any_of(result.found.begin(), result.found.end(), [&](const Certificate& c) {
              return c.candidate.equals(cert.candidate);
            });
        if (!duplicate) {
          result.found.push_back(std::move(cert));
          if (!fully_snapped)
            result.notes.push_back("a converged candidate did not snap to the rational grid "
                                   "but verified exactly as-is");
        }
      }
    }
    result.residual_norm_history.push_back(std::move(trace));
  }

  // Canonical, start-order-independent ordering of the finds.
  std::sort(result.found.begin(), result.found.end(), [](const Certificate& a, const Certificate& b) {
    return exp_poly_compare(a.candidate, b.candidate) < 0;
  });

  result.exhausted = static_cast<int>(result.residual_norm_history.size()) == spec.starts;
  if (result.found.empty()) {
    result.notes.push_back("no candidate on this frequency support verified after " +
                           std::to_string(spec.starts) +
                           " starts; this is non-exhaustive evidence, not a proof of "
                           "non-existence");
  }
  return result;
}

}  // namespace fdde
