#include "fdde/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fdde {

namespace {

constexpr double kLogClamp = -1e6;
constexpr int kMaxSamples = 1 << 19;

double log_abs_at(const ExpPoly& f, Complex z) {
  const double shift = max_exponent_real(f, z);
  const Complex v = eval_rescaled(f, z, shift);
  const double mag = std::abs(v);
  if (mag == 0.0 || !std::isfinite(mag)) return kLogClamp;
  const double la = shift + std::log(mag);
  return std::isfinite(la) ? std::max(la, kLogClamp) : kLogClamp;
}

// Mean of g over [0, 2pi) on an N-point periodic trapezoid grid, doubling
// (and reusing previous samples via midpoints) until the change is below
// rel_tol relative to max(1, |mean|).
template <typename G, typename V>
V circle_mean(const G& g, int n0, double rel_tol, V zero) {
  int n = n0;
  V mean = zero;
  for (int j = 0; j < n; ++j) mean += g(2.0 * std::numbers::pi * j / n);
  mean = mean * (1.0 / n);

  while (n < kMaxSamples) {
    V mid = zero;
    for (int j = 0; j < n; ++j) mid += g(2.0 * std::numbers::pi * (j + 0.5) / n);
    mid = mid * (1.0 / n);
    const V refined = (mean + mid) * 0.5;
    const double change = std::abs(refined - mean);
    mean = refined;
    n *= 2;
    if (change <= rel_tol * std::max(1.0, std::abs(mean))) break;
  }
  return mean;
}

}  // namespace

int order(const ExpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("order: zero function");
  int q = 0;
  for (const ExpTerm& t : f.terms()) q = std::max(q, t.exponent.degree().value_or(0));
  return q;
}

double proximity(const ExpPoly& f, double r, int n_samples) {
  if (f.is_zero()) throw std::invalid_argument("proximity: zero function");
  if (r <= 0.0) throw std::invalid_argument("proximity: radius must be positive");
  if (n_samples < 64) throw std::invalid_argument("proximity: n_samples must be >= 64");

  const auto g = [&](double theta) {
    const Complex z = std::polar(r, theta);
    return std::max(0.0, log_abs_at(f, z));
  };
  return circle_mean(g, n_samples, 1e-3, 0.0);
}

double proximity_reciprocal(const ExpPoly& f, double r, int n_samples) {
  if (f.is_zero()) throw std::invalid_argument("proximity_reciprocal: zero function");
  if (r <= 0.0) throw std::invalid_argument("proximity_reciprocal: radius must be positive");
  if (n_samples < 64) throw std::invalid_argument("proximity_reciprocal: n_samples must be >= 64");

  const auto g = [&](double theta) {
    const Complex z = std::polar(r, theta);
    return std::max(0.0, -log_abs_at(f, z));
  };
  return circle_mean(g, n_samples, 1e-3, 0.0);
}

int zeros_in_disk(const ExpPoly& f, double r) {
  if (f.is_zero()) throw std::invalid_argument("zeros_in_disk: zero function");
  if (r <= 0.0) throw std::invalid_argument("zeros_in_disk: radius must be positive");

  const ExpPoly fp = f.derivative();
  // (1/2пi) contour integral of f'/f equals the circle mean of (f'/f)(z) * z.
  const auto g = [&](double theta) -> Complex {
    const Complex z = std::polar(r, theta);
    const double shift = max_exponent_real(f, z);
    const Complex den = eval_rescaled(f, z, shift);
    if (den == Complex{0.0} || !is_finite(den))
      throw ZeroNearCircleError("zeros_in_disk: f vanishes on the integration circle");
    const Complex num = eval_rescaled(fp, z, shift);
    return num / den * z;
  };
  const Complex winding = circle_mean(g, 256, 1e-4, Complex{0.0});

  const long rounded = std::lround(winding.real());
  if (std::abs(winding - Complex{static_cast<double>(rounded)}) > 0.1)
    throw ZeroNearCircleError("zeros_in_disk: winding integral is not near an integer; "
                              "a zero may lie close to the circle |z| = r");
  if (rounded < 0)
    throw std::runtime_error("zeros_in_disk: negative winding number for an entire function");
  return static_cast<int>(rounded);
}

GrowthReport growth_report(const ExpPoly& f, std::span<const double> radii, int n_samples) {
  GrowthReport report;
  const int q = order(f);
  report.order = q;
  report.lower_order = q;   // exponential polynomials have regular growth
  report.hyper_order = 0.0;

  std::vector<double> rs(radii.begin(), radii.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  for (double r : rs) {
    if (r <= 0.0) throw std::invalid_argument("growth_report: radii must be positive");
    GrowthSample sample;
    sample.radius = r;
    sample.proximity = proximity(f, r, n_samples);
    for (double factor : {1.0, 1.0 + 1e-6, 1.0 - 1e-6, 1.0 + 1e-5}) {
      try {
        sample.zero_count = zeros_in_disk(f, r * factor);
        break;
      } catch (const ZeroNearCircleError&) {
      }
    }
    report.samples.push_back(sample);
  }
  return report;
}

GrowthBoundsReport check_growth_bounds(const ExpPoly& f, std::span<const double> radii,
                                       int n_samples) {
  const int q = order(f);
  if (q < 1)
    throw std::invalid_argument("check_growth_bounds: order must be >= 1 (got a polynomial)");
  if (radii.size() < 2)
    throw std::invalid_argument("check_growth_bounds: need at least two radii");

  GrowthBoundsReport report;
  report.order = q;
  report.radii.assign(radii.begin(), radii.end());
  std::sort(report.radii.begin(), report.radii.end());
  report.radii.erase(std::unique(report.radii.begin(), report.radii.end()), report.radii.end());
  if (report.radii.size() < 2)
    throw std::invalid_argument("check_growth_bounds: need at least two distinct radii");

  for (double r : report.radii) {
    if (r <= 0.0) throw std::invalid_argument("check_growth_bounds: radii must be positive");
    const double t = proximity(f, r, n_samples);  // T(r, f) = m(r, f) for entire f
    report.characteristic.push_back(t);
    report.ratios.push_back(t / std::pow(r, q));
  }

  // Band and order fit over the top decade of radii.
  const double r_max = report.radii.back();
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < report.radii.size(); ++i)
    if (report.radii[i] >= r_max / 10.0) top.push_back(i);
  if (top.size() < 2)
    top.assign({report.radii.size() - 2, report.radii.size() - 1});

  report.d1 = report.ratios[top.front()];
  report.d2 = report.ratios[top.front()];
  for (std::size_t i : top) {
    report.d1 = std::min(report.d1, report.ratios[i]);
    report.d2 = std::max(report.d2, report.ratios[i]);
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  bool fit_valid = true;
  for (std::size_t i : top) {
    if (report.characteristic[i] <= 0.0) { fit_valid = false; break; }
    const double x = std::log(report.radii[i]);
    const double y = std::log(report.characteristic[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = top.size() * sxx - sx * sx;
  report.fitted_order = (fit_valid && denom != 0.0)
                            ? (top.size() * sxy - sx * sy) / denom
                            : std::numeric_limits<double>::quiet_NaN();

  bool ok = report.d1 > 0.0 && std::isfinite(report.d2);
  if (!(std::isfinite(report.fitted_order) && std::abs(report.fitted_order - q) <= 0.1)) {
    ok = false;
    report.note += "fitted order disagrees with the exponent degree; ";
  }

  // When a constant-exponent part is present, m(r, 1/f) must be o(r^q).
  if (!f.polynomial_part().is_zero()) {
    report.reciprocal_checked = true;
    const double r_first = report.radii.front();
    report.reciprocal_ratio_first =
        proximity_reciprocal(f, r_first, n_samples) / std::pow(r_first, q);
    report.reciprocal_ratio_last =
        proximity_reciprocal(f, r_max, n_samples) / std::pow(r_max, q);
    // The sampled ratios oscillate with the circle's distance to the nearest
    // zero, so only smallness against the characteristic band is asserted.
    const bool small =
        std::max(report.reciprocal_ratio_first, report.reciprocal_ratio_last) <=
        0.25 * report.d1;
    if (!small) {
      ok = false;
      report.note += "m(r, 1/f)/r^q did not stay small; ";
    }
  }

  report.ok = ok;
  return report;
}

}  // namespace fdde
