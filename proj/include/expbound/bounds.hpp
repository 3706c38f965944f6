#ifndef EXPBOUND_BOUNDS_HPP
#define EXPBOUND_BOUNDS_HPP

#include <span>
#include <vector>

#include "expbound/expsum.hpp"

namespace expbound {

/// (2n+1) (e|t|/(n+1))^{n+1}: the Taylor-remainder bound on |g_n(t)|.
double taylor_envelope(unsigned n, double t);

/// (6/b) (e/3)^{3/b}: the same bound in terms of b = 3/(n+1), valid for |t| <= 1/b.
double taylor_envelope_b(double b);

/// exp(-1/(e^2 a)) (2/e + e a) sqrt((e^2 + 1/a) / (2 pi)) for a in (0, 1/(2e^2)].
/// Increasing in a.
double stirling_envelope(double a);

/// The even n whose unit-gap sum is checked against stirling_envelope(a):
/// n with a = e^-2/n when a has that form, else the smallest even n with a > e^-2/n.
unsigned stirling_order(double a);

struct ClaimCheck {
  double a = 0.0;
  unsigned n = 0;
  double achieved_max = 0.0;
  double argmax = 0.0;
  double certification_slack = 0.0;
  double envelope = 0.0;
  bool passes = false;
};

/// For a in (0, 1/3]: sup of |gap_scaled_sum(9a)| over [-a, a] against
/// taylor_envelope_b(9a).
ClaimCheck check_taylor_envelope(double a);

/// For a in (0, 1/(2e^2)]: sup of |unit_gap_sum(stirling_order(a))| over
/// [-a, a] against stirling_envelope(a).
ClaimCheck check_stirling_envelope(double a);

struct ScanPoint {
  double a = 0.0;
  double value = 0.0;
};

/// Least-squares fit of -ln(value) = c (1/a) - ln(C).
struct ScanResult {
  std::vector<ScanPoint> points;
  double fit_slope = 0.0;      // c
  double fit_intercept = 0.0;  // -ln(C)
  double r_squared = 0.0;
};

/// Needs >= 3 points, distinct positive a, positive values.
ScanResult scaling_fit(std::span<const ScanPoint> points);

struct LowerBoundProbe {
  double l1 = 0.0;
  double l1_error = 0.0;
  /// -a delta ln(l1)
  double implied_c = 0.0;
};

/// Integral of |g| over the interval and the constant c it would imply in
/// l1 >= exp(-c/(a delta)). g must belong to the class given by `params`
/// and a * delta must lie in (0, pi]. The integral is computed at the
/// extended precision policy with tolerance 1e-8 relative to a * sup|g|.
LowerBoundProbe lower_bound_probe(const ExpSum& g, const Interval& interval,
                                  const ClassParams& params);

}  // namespace expbound

#endif
