#ifndef EXPBOUND_PRECISION_HPP
#define EXPBOUND_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <complex>

namespace expbound {

using MpReal = boost::multiprecision::mpfr_float;

/// Smallest working precision (decimal digits) accepted by the extended paths.
inline constexpr unsigned kMinExtendedDigits = 20;

/// Sets the thread's MPFR default precision for the lifetime of the scope.
/// Every MpReal created inside the scope carries that precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned digits() const noexcept { return digits_; }

 private:
  unsigned digits_;
  unsigned saved_;
};

struct MpComplex {
  MpReal re;
  MpReal im;

  MpComplex() : re(0), im(0) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit MpComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend MpComplex operator*(const MpComplex& x, const MpComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend MpComplex operator*(const MpComplex& x, const MpReal& s) { return {x.re * s, x.im * s}; }

  MpReal abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// pi at the current default precision.
MpReal mp_pi();

/// exp(i * lambda * t) for complex lambda and real t.
MpComplex mp_expi(const MpComplex& lambda, const MpReal& t);

/// z^m by repeated squaring.
MpComplex mp_pow(MpComplex z, unsigned m);

/// sin^2(k*pi/denominator), evaluated at the current precision.
MpReal mp_sin_squared(unsigned k, unsigned denominator);

/// sin^2(k*pi/denominator) rounded once to double.
double rounded_sin_squared(unsigned k, unsigned denominator);

/// cos(k*pi/denominator) rounded once to double.
double rounded_cos(unsigned k, unsigned denominator);

}  // namespace expbound

#endif
