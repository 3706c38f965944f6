#ifndef EXPBOUND_DEPHASING_HPP
#define EXPBOUND_DEPHASING_HPP

#include <utility>
#include <vector>

#include "expbound/expsum.hpp"
#include "expbound/pulse_sequence.hpp"
#include "expbound/quadrature.hpp"

namespace expbound {

/// f(omega) = sum_{j=0}^{n} (-1)^j (e^{i t_j omega} - e^{i t_{j+1} omega}), summed
/// pairwise as written. digits > 0 evaluates in MPFR with exactly generated times.
Complex filter_function(const PulseSequence& sequence, double omega, unsigned digits = 0);

/// The same function collected by exponent: coefficients 1, 2(-1)^j (j = 1..n),
/// -(-1)^n on exponents t_0..t_{n+1}.
ExpSum filter_expsum(const PulseSequence& sequence);

/// Power of the first nonvanishing Taylor coefficient of f at omega = 0.
VanishingOrder vanishing_order_filter(const PulseSequence& sequence, double rel_tol,
                                      unsigned digits = 0);

double min_separation(const PulseSequence& sequence);

enum class DensityKind { HardCutoffFlat, OhmicExponential, Tabulated };

const char* to_string(DensityKind kind) noexcept;

/// Environment spectral density Lambda(omega) on omega >= 0.
///
/// hard-cutoff-flat:   A on [0, omega_c], 0 beyond.
/// ohmic-exponential:  A omega exp(-omega / omega_c).
/// tabulated:          A times the piecewise-linear interpolant of the table,
///                     0 outside the tabulated range.
class SpectralDensity {
 public:
  static SpectralDensity flat(double amplitude, double cutoff);
  static SpectralDensity ohmic(double amplitude, double cutoff);
  static SpectralDensity tabulated(std::vector<std::pair<double, double>> table,
                                   double amplitude = 1.0);

  double operator()(double omega) const;

  DensityKind kind() const noexcept { return kind_; }
  double amplitude() const noexcept { return amplitude_; }
  double cutoff() const noexcept { return cutoff_; }
  const std::vector<std::pair<double, double>>& table() const noexcept { return table_; }

  /// Integral of Lambda over [from, infinity).
  double tail_integral(double from) const;

 private:
  SpectralDensity(DensityKind kind, double amplitude, double cutoff)
      : kind_(kind), amplitude_(amplitude), cutoff_(cutoff) {}

  DensityKind kind_;
  double amplitude_;
  double cutoff_;
  std::vector<std::pair<double, double>> table_;
};

/// chi = integral over [0, inf) of Lambda(omega) |f(omega)|^2.
///
/// Non-compact densities are truncated at the first W (doubling from
/// omega_c) where 4(n+1)^2 * tail_integral(W) <= abs_tol / 10; the tail bound
/// is added to the reported error estimate.
QuadratureResult decay_factor(const PulseSequence& sequence, const SpectralDensity& density,
                              double abs_tol = 1e-10);

}  // namespace expbound

#endif
