#ifndef EXPBOUND_PULSE_SEQUENCE_HPP
#define EXPBOUND_PULSE_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "expbound/precision.hpp"

namespace expbound {

/// Pulse times 0 = t_0 < t_1 < ... < t_n < t_{n+1} = T.
///
/// T and the minimum separation tau are derived once at construction.
class PulseSequence {
 public:
  /// `times` must include both endpoints: times.front() == 0, times.back() == T.
  explicit PulseSequence(std::vector<double> times);

  /// t_j = T sin^2(j pi / (2n+2)); keeps (n, T) so the times can be
  /// regenerated at any working precision.
  static PulseSequence uhrig(unsigned n, double total_time);

  /// Equally spaced pulses t_j = (j - 1/2) T / n.
  static PulseSequence cpmg(unsigned n, double total_time);

  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t pulse_count() const noexcept { return times_.size() - 2; }
  double total_time() const noexcept { return times_.back(); }
  double min_separation() const noexcept { return min_separation_; }
  bool is_uhrig() const noexcept { return uhrig_n_.has_value(); }

  /// All n+2 times at the current MPFR precision.
  std::vector<MpReal> exact_times() const;

 private:
  std::vector<double> times_;
  double min_separation_ = 0.0;
  std::optional<unsigned> uhrig_n_;
};

}  // namespace expbound

#endif
