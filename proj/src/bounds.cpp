#include "expbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "expbound/error.hpp"
#include "expbound/sequences.hpp"

namespace expbound {

namespace {

using std::numbers::e;
using std::numbers::pi;

double stirling_domain_max() { return 1.0 / (2.0 * e * e); }

ClaimCheck run_check(const ExpSum& g, double a, unsigned n, double envelope) {
  const SupNormResult sup = sup_norm(g, Interval::symmetric(a), 0, precision_policy_digits(g));
  ClaimCheck check;
  check.a = a;
  check.n = n;
  check.achieved_max = sup.max;
  check.argmax = sup.argmax;
  check.certification_slack = sup.certification_slack;
  check.envelope = envelope;
  check.passes = sup.max <= envelope;
  return check;
}

}  // namespace

double taylor_envelope(unsigned n, double t) {
  if (n % 2 != 0) throw_invalid("taylor_envelope requires even n");
  if (!std::isfinite(t)) throw_invalid("taylor_envelope: t must be finite");
  if (t == 0.0) return 0.0;
  const double m = n + 1.0;
  const double log_value = std::log(2.0 * n + 1.0) + m * (1.0 + std::log(std::abs(t)) - std::log(m));
  return std::exp(log_value);
}

double taylor_envelope_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw_invalid("taylor_envelope_b: b must be positive");
  return std::exp(std::log(6.0 / b) + (3.0 / b) * (1.0 - std::log(3.0)));
}

double stirling_envelope(double a) {
  if (!(a > 0.0 && a <= stirling_domain_max())) {
    throw_invalid("stirling_envelope: a must lie in (0, 1/(2e^2)]");
  }
  const double log_value = -1.0 / (e * e * a) + std::log(2.0 / e + e * a) +
                           0.5 * std::log((e * e + 1.0 / a) / (2.0 * pi));
  return std::exp(log_value);
}

unsigned stirling_order(double a) {
  if (!(a > 0.0 && a <= stirling_domain_max())) {
    throw_invalid("stirling_order: a must lie in (0, 1/(2e^2)]");
  }
  const double x = 1.0 / (e * e * a);
  if (!(x < 1e6)) throw_invalid("a is too small: construction order exceeds 1e6");
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * x && static_cast<long long>(nearest) % 2 == 0) {
    return static_cast<unsigned>(nearest);
  }
  auto n = static_cast<long long>(std::floor(x)) + 1;  // smallest integer strictly above x
  if (n % 2 != 0) ++n;
  return static_cast<unsigned>(n);
}

ClaimCheck check_taylor_envelope(double a) {
  if (!(a > 0.0 && a <= 1.0 / 3.0)) throw_invalid("a must lie in (0, 1/3]");
  const double b = std::min(9.0 * a, 3.0);
  const unsigned n = gap_scaled_order(b);
  return run_check(gap_scaled_sum(b), a, n, taylor_envelope_b(b));
}

ClaimCheck check_stirling_envelope(double a) {
  const unsigned n = stirling_order(a);
  return run_check(unit_gap_sum(n), a, n, stirling_envelope(a));
}

ScanResult scaling_fit(std::span<const ScanPoint> points) {
  if (points.size() < 3) throw_invalid("scaling_fit needs at least 3 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].a > 0.0) || !std::isfinite(points[i].a)) {
      throw_invalid("scaling_fit: a must be positive");
    }
    if (!(points[i].value > 0.0) || !std::isfinite(points[i].value)) {
      throw_invalid("scaling_fit: values must be positive, got " + std::to_string(points[i].value));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[j].a == points[i].a) throw_invalid("scaling_fit: a values must be distinct");
    }
  }
  const double count = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const ScanPoint& p : points) {
    mean_x += 1.0 / p.a;
    mean_y += -std::log(p.value);
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const ScanPoint& p : points) {
    const double dx = 1.0 / p.a - mean_x;
    const double dy = -std::log(p.value) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  ScanResult result;
  result.points.assign(points.begin(), points.end());
  result.fit_slope = sxy / sxx;
  result.fit_intercept = mean_y - result.fit_slope * mean_x;
  double ss_res = 0.0;
  for (const ScanPoint& p : points) {
    const double residual = -std::log(p.value) - (result.fit_slope / p.a + result.fit_intercept);
    ss_res += residual * residual;
  }
  result.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return result;
}

LowerBoundProbe lower_bound_probe(const ExpSum& g, const Interval& interval,
                                  const ClassParams& params) {
  const ClassMembership membership = class_membership(g, params);
  if (!membership) {
    throw_invalid(std::string("lower_bound_probe: sum violates ") +
                  to_string(membership.violation->condition) + " at index " +
                  std::to_string(membership.violation->index));
  }
  const double a_delta = interval.a * params.delta;
  if (!(a_delta > 0.0 && a_delta <= pi)) throw_invalid("lower_bound_probe: a*delta must lie in (0, pi]");

  const unsigned digits = precision_policy_digits(g);
  const SupNormResult sup = sup_norm(g, interval, 0, digits);
  if (!(sup.max > 0.0)) throw Error(ErrorCode::Numeric, "lower_bound_probe: |g| vanishes on the grid");
  const QuadratureResult l1 = l1_norm(g, interval, 1e-8 * interval.a * sup.max, digits);
  if (!(l1.value > 0.0)) throw Error(ErrorCode::Numeric, "lower_bound_probe: L1 norm is not positive");
  return {l1.value, l1.error_estimate, -a_delta * std::log(l1.value)};
}

}  // namespace expbound
