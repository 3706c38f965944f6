#include "expbound/pulse_sequence.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "expbound/error.hpp"

namespace expbound {

PulseSequence::PulseSequence(std::vector<double> times) : times_(std::move(times)) {
  if (times_.size() < 2) throw_invalid("pulse sequence needs at least t_0 = 0 and t_{n+1} = T");
  if (times_.front() != 0.0) throw_invalid("pulse sequence must start at t_0 = 0");
  min_separation_ = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < times_.size(); ++j) {
    if (!std::isfinite(times_[j]) || !(times_[j] > times_[j - 1])) {
      throw_invalid("pulse times must be finite and strictly increasing (index " +
                    std::to_string(j) + ")");
    }
    min_separation_ = std::min(min_separation_, times_[j] - times_[j - 1]);
  }
}

PulseSequence PulseSequence::uhrig(unsigned n, double total_time) {
  if (n < 1) throw_invalid("Uhrig sequence needs n >= 1 pulses");
  if (!(total_time > 0.0) || !std::isfinite(total_time)) throw_invalid("T must be positive");
  std::vector<double> times(n + 2);
  times[0] = 0.0;
  {
    PrecisionScope scope(40);
    for (unsigned j = 1; j <= n; ++j) {
      times[j] = static_cast<double>(MpReal(total_time) * mp_sin_squared(j, 2 * n + 2));
    }
  }
  times[n + 1] = total_time;
  PulseSequence sequence(std::move(times));
  sequence.uhrig_n_ = n;
  return sequence;
}

PulseSequence PulseSequence::cpmg(unsigned n, double total_time) {
  if (n < 1) throw_invalid("CPMG sequence needs n >= 1 pulses");
  if (!(total_time > 0.0) || !std::isfinite(total_time)) throw_invalid("T must be positive");
  std::vector<double> times(n + 2);
  times[0] = 0.0;
  for (unsigned j = 1; j <= n; ++j) times[j] = total_time * (j - 0.5) / n;
  times[n + 1] = total_time;
  return PulseSequence(std::move(times));
}

std::vector<MpReal> PulseSequence::exact_times() const {
  std::vector<MpReal> result;
  result.reserve(times_.size());
  if (!uhrig_n_) {
    for (double t : times_) result.emplace_back(t);
    return result;
  }
  const unsigned n = *uhrig_n_;
  const MpReal total(total_time());
  result.emplace_back(0);
  for (unsigned j = 1; j <= n; ++j) result.push_back(total * mp_sin_squared(j, 2 * n + 2));
  result.push_back(total);
  return result;
}

}  // namespace expbound
