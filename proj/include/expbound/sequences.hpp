#ifndef EXPBOUND_SEQUENCES_HPP
#define EXPBOUND_SEQUENCES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "expbound/expsum.hpp"
#include "expbound/pulse_sequence.hpp"

namespace expbound {

/// Relative Uhrig timings d_k = sin^2(k pi / (2n+2)), k = 1..n, for even n >= 2.
struct UhrigFractions {
  unsigned n = 0;
  std::vector<double> d;

  /// 1-based.
  double at(unsigned k) const { return d.at(k - 1); }
};

UhrigFractions uhrig_fractions(unsigned n);

/// |sum_{k=1}^{n} (-1)^k d_k^m - 1/2| for m = 1..n, evaluated in MPFR at
/// max(digits, 30 + 2n) decimal digits from exactly generated d_k.
std::vector<double> power_sum_residuals(unsigned n, unsigned digits = 0);

/// g_n(t) = 1 - e^{it} + 2 sum_k (-1)^k e^{i d_k t}: exponents (0, d_1..d_n, 1),
/// coefficients (1, -2, 2, ..., 2, -1). Requires even n >= 2.
ExpSum uhrig_sum(unsigned n);

/// The even n used by gap_scaled_sum(b): n = 3/b - 1 when that is an even
/// integer, otherwise the largest even n with b < 3/(n+1). Requires b in (0, 3].
unsigned gap_scaled_order(double b);

/// G(t) = g_n(9t/beta^2) with beta = 3/(n+1) and n = gap_scaled_order(b), i.e.
/// exponents (n+1)^2 (0, d_1, ..., d_n, 1). For b = 3/(n+1) this is G_b itself;
/// otherwise it is the G_beta the fallback prescribes. Consecutive exponent
/// gaps are >= 1.
ExpSum gap_scaled_sum(double b);

/// d_k / d_1 for k = 1..n (so the first entry is 1). Requires even n >= 2.
std::vector<double> rescaled_timings(unsigned n);

/// Same coefficients as uhrig_sum(n), exponents (0, d_1/d_1, ..., d_n/d_1, 1/d_1).
ExpSum unit_gap_sum(unsigned n);

/// t_0 = 0, t_j = T sin^2(j pi / (2n+2)), t_{n+1} = T. Requires n >= 1, T > 0.
PulseSequence uhrig_pulse_times(unsigned n, double total_time);

struct GapReport {
  double min_gap = 0.0;
  /// j such that exponents[j+1] - exponents[j] is the minimum gap.
  std::size_t min_gap_index = 0;
  bool consecutive_ok = false;    // every gap >= delta
  bool linear_growth_ok = false;  // exponents[j] >= j * delta
  bool satisfied = false;         // both of the above
  double delta = 0.0;
};

/// Checks an ascending exponent list against the separation delta, with
/// 1e-12 absolute slack on both conditions.
GapReport gap_check(std::span<const double> exponents, double delta);

}  // namespace expbound

#endif
