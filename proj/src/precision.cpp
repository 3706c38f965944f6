#include "expbound/precision.hpp"

#include <mpfr.h>

namespace expbound {

namespace {
constexpr unsigned kRoundingDigits = 40;
}

PrecisionScope::PrecisionScope(unsigned digits)
    : digits_(digits < kMinExtendedDigits ? kMinExtendedDigits : digits),
      saved_(MpReal::default_precision()) {
  MpReal::default_precision(digits_);
}

PrecisionScope::~PrecisionScope() { MpReal::default_precision(saved_); }

MpReal mp_pi() {
  MpReal result;
  mpfr_const_pi(result.backend().data(), MPFR_RNDN);
  return result;
}

MpComplex mp_expi(const MpComplex& lambda, const MpReal& t) {
  MpReal phase = lambda.re * t;
  MpReal s;
  MpReal c;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), phase.backend().data(), MPFR_RNDN);
  if (lambda.im == 0) {
    return {std::move(c), std::move(s)};
  }
  MpReal damping = boost::multiprecision::exp(-lambda.im * t);
  return {c * damping, s * damping};
}

MpComplex mp_pow(MpComplex z, unsigned m) {
  MpComplex result(MpReal(1), MpReal(0));
  while (m > 0) {
    if (m & 1u) result = result * z;
    m >>= 1;
    if (m > 0) z = z * z;
  }
  return result;
}

MpReal mp_sin_squared(unsigned k, unsigned denominator) {
  MpReal s = boost::multiprecision::sin(mp_pi() * k / denominator);
  return s * s;
}

double rounded_sin_squared(unsigned k, unsigned denominator) {
  PrecisionScope scope(kRoundingDigits);
  return static_cast<double>(mp_sin_squared(k, denominator));
}

double rounded_cos(unsigned k, unsigned denominator) {
  PrecisionScope scope(kRoundingDigits);
  return static_cast<double>(boost::multiprecision::cos(mp_pi() * k / denominator));
}

}  // namespace expbound
