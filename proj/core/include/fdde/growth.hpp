#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdde/exp_poly.hpp"

namespace fdde {

/// The winding integral failed to settle on an integer; usually a zero of f
/// lies on or near the integration circle. Callers may perturb the radius.
class ZeroNearCircleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Growth order of a nonzero exponential polynomial: the maximal exponent
/// degree (0 for pure polynomials). Lower order and order coincide and the
/// hyper-order is 0 throughout this class.
int order(const ExpPoly& f);

/// m(r, f) = (1/2pi) Int_0^{2pi} log+ |f(r e^{i theta})| d theta, by periodic
/// trapezoid quadrature starting at n_samples points (>= 64) and doubling
/// until the relative change drops below 1e-3. Evaluation rescales by the
/// dominant exponent so large |Q| never overflows.
double proximity(const ExpPoly& f, double r, int n_samples = 4096);

/// m(r, 1/f), same quadrature on log+ |1/f|; log|f| = -inf is clamped to -1e6.
double proximity_reciprocal(const ExpPoly& f, double r, int n_samples = 4096);

/// Exact zero count of f in |z| < r via the argument-principle winding
/// number, adaptive trapezoid rounded to the nearest integer. Residuals above
/// 0.1 from an integer raise ZeroNearCircleError.
int zeros_in_disk(const ExpPoly& f, double r);

struct GrowthSample {
  double radius = 0.0;
  double proximity = 0.0;
  std::optional<int> zero_count;  // disengaged when the circle resisted perturbation
};

struct GrowthReport {
  double order = 0.0;
  double lower_order = 0.0;
  double hyper_order = 0.0;
  std::vector<GrowthSample> samples;  // radii strictly increasing
};

/// Orders plus per-radius m(r) and zero-count samples. Radii are sorted and
/// deduplicated; radii whose circle passes too near a zero are retried with
/// small perturbations before giving up on the count.
GrowthReport growth_report(const ExpPoly& f, std::span<const double> radii,
                           int n_samples = 4096);

struct GrowthBoundsReport {
  bool ok = false;
  int order = 0;
  double d1 = 0.0;  // min of T(r)/r^q over the top decade of radii
  double d2 = 0.0;  // max of the same ratio
  double fitted_order = 0.0;  // log-log slope over the top decade
  std::vector<double> radii;
  std::vector<double> characteristic;  // T(r) = m(r, f) (entire, no poles)
  std::vector<double> ratios;          // T(r) / r^q
  bool reciprocal_checked = false;
  double reciprocal_ratio_first = 0.0;  // m(r, 1/f) / r^q at the smallest radius
  double reciprocal_ratio_last = 0.0;   // ... and at the largest
  std::string note;
};

/// Checks that T(r)/r^q stays inside a positive finite band [d1, d2] over the
/// sampled radii, that the log-log fitted order agrees with q within 0.1,
/// and, when f has a nonzero constant-exponent part, that m(r, 1/f)/r^q is
/// small and nonincreasing. Requires q >= 1.
GrowthBoundsReport check_growth_bounds(const ExpPoly& f, std::span<const double> radii,
                                       int n_samples = 4096);

}  // namespace fdde
