#ifndef EXPBOUND_JSON_IO_HPP
#define EXPBOUND_JSON_IO_HPP

#include <string>
#include <string_view>

#include "expbound/bounds.hpp"
#include "expbound/dephasing.hpp"
#include "expbound/expsum.hpp"
#include "expbound/pulse_sequence.hpp"

namespace expbound {

/// 17 significant digits ("%.17g"); round-trips every finite double.
std::string format_real(double value);

/// {"exponents": [...], "coefficients_re": [...], "coefficients_im": [...]}
/// plus "exponents_im" when any exponent is complex.
std::string expsum_to_json(const ExpSum& g);
ExpSum expsum_from_json(std::string_view text);

/// {"times": [0, t_1, ..., T], "T": T}
std::string pulse_sequence_to_json(const PulseSequence& sequence);
/// Accepts "times" either with both endpoints or as the interior pulses only.
PulseSequence pulse_sequence_from_json(std::string_view text);

/// {"kind": "...", "amplitude": A, "cutoff": wc, "table": [[w, L], ...]}
std::string spectral_density_to_json(const SpectralDensity& density);
SpectralDensity spectral_density_from_json(std::string_view text);

/// {"c_est": ..., "intercept": ..., "r2": ..., "n_points": ...}
std::string fit_summary_json(const ScanResult& fit);

}  // namespace expbound

#endif
