#include "expbound/sequences.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "expbound/error.hpp"

namespace expbound {

namespace {

constexpr double kGapSlack = 1e-12;
constexpr unsigned kMaxOrder = 1'000'000;

void require_even_construction_order(unsigned n) {
  if (n < 2 || n % 2 != 0) {
    throw_invalid("construction requires an even n >= 2, got " + std::to_string(n));
  }
}

std::vector<Complex> alternating_coefficients(unsigned n) {
  std::vector<Complex> coefficients(n + 2);
  coefficients[0] = 1.0;
  for (unsigned k = 1; k <= n; ++k) coefficients[k] = (k % 2 == 0) ? 2.0 : -2.0;
  coefficients[n + 1] = -1.0;
  return coefficients;
}

std::vector<MpComplex> mp_alternating_coefficients(unsigned n) {
  std::vector<MpComplex> coefficients;
  coefficients.reserve(n + 2);
  for (const Complex& a : alternating_coefficients(n)) coefficients.emplace_back(a);
  return coefficients;
}

// Exponents (0, s d_1, ..., s d_n, s) where s = scale(d_1) is produced by
// `scale` at whatever precision is active.
template <typename Scale>
ExpSum alternating_sum(unsigned n, Scale scale) {
  std::vector<Complex> exponents(n + 2);
  {
    PrecisionScope scope(40);
    const MpReal d1 = mp_sin_squared(1, 2 * n + 2);
    const MpReal s = scale(d1);
    exponents[0] = 0.0;
    for (unsigned k = 1; k <= n; ++k) {
      exponents[k] = static_cast<double>(s * mp_sin_squared(k, 2 * n + 2));
    }
    exponents[n + 1] = static_cast<double>(s);
  }
  ExpSum sum(alternating_coefficients(n), std::move(exponents));
  return sum.with_exact_form([n, scale]() {
    MpTerms terms;
    terms.coefficients = mp_alternating_coefficients(n);
    const MpReal d1 = mp_sin_squared(1, 2 * n + 2);
    const MpReal s = scale(d1);
    terms.exponents.emplace_back(MpReal(0), MpReal(0));
    for (unsigned k = 1; k <= n; ++k) {
      terms.exponents.emplace_back(s * mp_sin_squared(k, 2 * n + 2), MpReal(0));
    }
    terms.exponents.emplace_back(s, MpReal(0));
    return terms;
  });
}

}  // namespace

UhrigFractions uhrig_fractions(unsigned n) {
  require_even_construction_order(n);
  UhrigFractions fractions;
  fractions.n = n;
  fractions.d.resize(n);
  for (unsigned k = 1; k <= n; ++k) fractions.d[k - 1] = rounded_sin_squared(k, 2 * n + 2);
  return fractions;
}

std::vector<double> power_sum_residuals(unsigned n, unsigned digits) {
  require_even_construction_order(n);
  PrecisionScope scope(std::max(digits, 30 + 2 * n));
  std::vector<MpReal> d;
  d.reserve(n);
  for (unsigned k = 1; k <= n; ++k) d.push_back(mp_sin_squared(k, 2 * n + 2));
  std::vector<MpReal> power(d);
  std::vector<double> residuals;
  residuals.reserve(n);
  const MpReal half = MpReal(1) / 2;
  for (unsigned m = 1; m <= n; ++m) {
    MpReal sum(0);
    for (unsigned k = 1; k <= n; ++k) {
      if (k % 2 == 0) {
        sum += power[k - 1];
      } else {
        sum -= power[k - 1];
      }
      power[k - 1] *= d[k - 1];
    }
    residuals.push_back(static_cast<double>(boost::multiprecision::abs(sum - half)));
  }
  return residuals;
}

ExpSum uhrig_sum(unsigned n) {
  require_even_construction_order(n);
  return alternating_sum(n, [](const MpReal&) { return MpReal(1); });
}

unsigned gap_scaled_order(double b) {
  if (!(b > 0.0 && b <= 3.0)) throw_invalid("b must lie in (0, 3]");
  const double x = 3.0 / b - 1.0;
  if (!(x < kMaxOrder)) throw_invalid("b is too small: construction order exceeds 1e6");
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x) &&
      static_cast<long long>(nearest) % 2 == 0) {
    return static_cast<unsigned>(nearest);
  }
  auto n = static_cast<long long>(std::ceil(x)) - 1;  // largest integer strictly below x
  if (n % 2 != 0) --n;
  return static_cast<unsigned>(std::max<long long>(n, 0));
}

ExpSum gap_scaled_sum(double b) {
  const unsigned n = gap_scaled_order(b);
  const double scale = static_cast<double>(n + 1) * static_cast<double>(n + 1);
  return alternating_sum(n, [scale](const MpReal&) { return MpReal(scale); });
}

std::vector<double> rescaled_timings(unsigned n) {
  require_even_construction_order(n);
  std::vector<double> timings(n);
  PrecisionScope scope(40);
  const MpReal d1 = mp_sin_squared(1, 2 * n + 2);
  timings[0] = 1.0;
  for (unsigned k = 2; k <= n; ++k) {
    timings[k - 1] = static_cast<double>(mp_sin_squared(k, 2 * n + 2) / d1);
  }
  return timings;
}

ExpSum unit_gap_sum(unsigned n) {
  require_even_construction_order(n);
  return alternating_sum(n, [](const MpReal& d1) { return MpReal(1) / d1; });
}

PulseSequence uhrig_pulse_times(unsigned n, double total_time) {
  return PulseSequence::uhrig(n, total_time);
}

GapReport gap_check(std::span<const double> exponents, double delta) {
  if (exponents.empty()) throw_invalid("gap_check: exponent list is empty");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw_invalid("gap_check: delta must be positive");
  GapReport report;
  report.delta = delta;
  report.min_gap = std::numeric_limits<double>::infinity();
  report.linear_growth_ok = true;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (!std::isfinite(exponents[j])) throw_invalid("gap_check: exponents must be finite");
    if (j > 0) {
      const double gap = exponents[j] - exponents[j - 1];
      if (gap < 0.0) {
        throw_invalid("gap_check: exponents are not sorted ascending at index " +
                      std::to_string(j));
      }
      if (gap < report.min_gap) {
        report.min_gap = gap;
        report.min_gap_index = j - 1;
      }
    }
    if (exponents[j] < static_cast<double>(j) * delta - kGapSlack) report.linear_growth_ok = false;
  }
  report.consecutive_ok = report.min_gap >= delta - kGapSlack;
  report.satisfied = report.consecutive_ok && report.linear_growth_ok;
  return report;
}

}  // namespace expbound
