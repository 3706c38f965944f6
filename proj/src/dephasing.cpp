#include "expbound/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "expbound/error.hpp"

namespace expbound {

namespace {

Complex unit_phase(double t, double omega) { return {std::cos(t * omega), std::sin(t * omega)}; }

}  // namespace

Complex filter_function(const PulseSequence& sequence, double omega, unsigned digits) {
  if (!std::isfinite(omega)) throw_invalid("filter_function: omega must be finite");
  const std::vector<double>& t = sequence.times();
  const std::size_t n = sequence.pulse_count();
  if (digits == 0) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      const Complex difference = unit_phase(t[j], omega) - unit_phase(t[j + 1], omega);
      sum += (j % 2 == 0) ? difference : -difference;
    }
    return sum;
  }
  PrecisionScope scope(digits);
  const std::vector<MpReal> exact = sequence.exact_times();
  const MpReal w(omega);
  const MpComplex unit_rate(MpReal(1), MpReal(0));
  MpComplex sum;
  for (std::size_t j = 0; j <= n; ++j) {
    const MpComplex left = mp_expi(unit_rate, exact[j] * w);
    const MpComplex right = mp_expi(unit_rate, exact[j + 1] * w);
    if (j % 2 == 0) {
      sum += MpComplex(left.re - right.re, left.im - right.im);
    } else {
      sum += MpComplex(right.re - left.re, right.im - left.im);
    }
  }
  return sum.to_double();
}

ExpSum filter_expsum(const PulseSequence& sequence) {
  const std::size_t n = sequence.pulse_count();
  std::vector<Complex> coefficients(n + 2);
  coefficients[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) coefficients[j] = (j % 2 == 0) ? 2.0 : -2.0;
  coefficients[n + 1] = (n % 2 == 0) ? -1.0 : 1.0;
  std::vector<Complex> exponents(sequence.times().begin(), sequence.times().end());
  ExpSum sum(coefficients, std::move(exponents));
  return sum.with_exact_form([sequence, coefficients]() {
    MpTerms terms;
    for (const Complex& a : coefficients) terms.coefficients.emplace_back(a);
    for (MpReal& t : sequence.exact_times()) terms.exponents.emplace_back(std::move(t), MpReal(0));
    return terms;
  });
}

VanishingOrder vanishing_order_filter(const PulseSequence& sequence, double rel_tol,
                                      unsigned digits) {
  return vanishing_order(filter_expsum(sequence), 0.0, rel_tol, digits);
}

double min_separation(const PulseSequence& sequence) { return sequence.min_separation(); }

const char* to_string(DensityKind kind) noexcept {
  switch (kind) {
    case DensityKind::HardCutoffFlat: return "hard-cutoff-flat";
    case DensityKind::OhmicExponential: return "ohmic-exponential";
    case DensityKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

namespace {

void check_amplitude_cutoff(double amplitude, double cutoff) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) throw_invalid("amplitude must be >= 0");
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw_invalid("cutoff frequency must be > 0");
}

}  // namespace

SpectralDensity SpectralDensity::flat(double amplitude, double cutoff) {
  check_amplitude_cutoff(amplitude, cutoff);
  return SpectralDensity(DensityKind::HardCutoffFlat, amplitude, cutoff);
}

SpectralDensity SpectralDensity::ohmic(double amplitude, double cutoff) {
  check_amplitude_cutoff(amplitude, cutoff);
  return SpectralDensity(DensityKind::OhmicExponential, amplitude, cutoff);
}

SpectralDensity SpectralDensity::tabulated(std::vector<std::pair<double, double>> table,
                                           double amplitude) {
  if (table.size() < 2) throw_invalid("tabulated density needs at least two points");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [omega, value] = table[i];
    if (!std::isfinite(omega) || omega < 0.0) throw_invalid("tabulated omega must be >= 0");
    if (!std::isfinite(value) || value < 0.0) throw_invalid("tabulated density must be >= 0");
    if (i > 0 && !(omega > table[i - 1].first)) {
      throw_invalid("tabulated omega grid must be strictly increasing");
    }
  }
  const double end = table.back().first;
  check_amplitude_cutoff(amplitude, end);
  SpectralDensity density(DensityKind::Tabulated, amplitude, end);
  density.table_ = std::move(table);
  return density;
}

double SpectralDensity::operator()(double omega) const {
  if (omega < 0.0) return 0.0;
  switch (kind_) {
    case DensityKind::HardCutoffFlat:
      return omega <= cutoff_ ? amplitude_ : 0.0;
    case DensityKind::OhmicExponential:
      return amplitude_ * omega * std::exp(-omega / cutoff_);
    case DensityKind::Tabulated: {
      if (omega < table_.front().first || omega > table_.back().first) return 0.0;
      auto upper = std::upper_bound(table_.begin(), table_.end(), omega,
                                    [](double w, const auto& entry) { return w < entry.first; });
      if (upper == table_.end()) return amplitude_ * table_.back().second;
      const auto& [w1, v1] = *upper;
      const auto& [w0, v0] = *(upper - 1);
      return amplitude_ * (v0 + (v1 - v0) * (omega - w0) / (w1 - w0));
    }
  }
  return 0.0;
}

double SpectralDensity::tail_integral(double from) const {
  from = std::max(from, 0.0);
  switch (kind_) {
    case DensityKind::OhmicExponential:
      return amplitude_ * cutoff_ * (from + cutoff_) * std::exp(-from / cutoff_);
    case DensityKind::HardCutoffFlat:
      return from >= cutoff_ ? 0.0 : amplitude_ * (cutoff_ - from);
    case DensityKind::Tabulated: {
      double total = 0.0;
      for (std::size_t i = 1; i < table_.size(); ++i) {
        const double lo = std::max(table_[i - 1].first, from);
        const double hi = table_[i].first;
        if (hi <= lo) continue;
        total += 0.5 * ((*this)(lo) + (*this)(hi)) * (hi - lo);
      }
      return total;
    }
  }
  return 0.0;
}

QuadratureResult decay_factor(const PulseSequence& sequence, const SpectralDensity& density,
                              double abs_tol) {
  if (!(abs_tol > 0.0)) throw_invalid("decay_factor: abs_tol must be positive");
  if (density.amplitude() == 0.0) return {0.0, 0.0, 0};

  auto integrand = [&](double omega) { return density(omega) * std::norm(filter_function(sequence, omega)); };

  // Breakpoints where Lambda has kinks; the integral is split there.
  std::vector<double> breaks{0.0};
  double tail_error = 0.0;
  switch (density.kind()) {
    case DensityKind::HardCutoffFlat:
      breaks.push_back(density.cutoff());
      break;
    case DensityKind::Tabulated:
      breaks.clear();
      for (const auto& entry : density.table()) breaks.push_back(entry.first);
      break;
    case DensityKind::OhmicExponential: {
      const double n = static_cast<double>(sequence.pulse_count());
      const double filter_bound = 4.0 * (n + 1.0) * (n + 1.0);
      double end = density.cutoff();
      while (filter_bound * density.tail_integral(end) > abs_tol / 10.0) {
        end *= 2.0;
        if (!std::isfinite(end)) throw Error(ErrorCode::Numeric, "tail truncation diverged");
      }
      tail_error = filter_bound * density.tail_integral(end);
      breaks.push_back(end);
      break;
    }
  }

  const double total = breaks.back() - breaks.front();
  QuadratureResult result;
  result.error_estimate = tail_error;
  const double budget = abs_tol - tail_error;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    AdaptiveOptions options;
    options.abs_tol = budget * (breaks[i] - breaks[i - 1]) / total;
    QuadratureResult piece;
    try {
      piece = integrate_adaptive(integrand, breaks[i - 1], breaks[i], options);
    } catch (const ConvergenceError& error) {
      throw ConvergenceError(error.what(), result.value + error.partial_value(),
                             result.error_estimate + error.achieved_error());
    }
    result.value += piece.value;
    result.error_estimate += piece.error_estimate;
    result.subintervals += piece.subintervals;
  }
  return result;
}

}  // namespace expbound
