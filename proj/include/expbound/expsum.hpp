#ifndef EXPBOUND_EXPSUM_HPP
#define EXPBOUND_EXPSUM_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "expbound/precision.hpp"
#include "expbound/quadrature.hpp"

namespace expbound {

using Complex = std::complex<double>;

/// Coefficients and exponents of a sum at extended precision.
struct MpTerms {
  std::vector<MpComplex> coefficients;
  std::vector<MpComplex> exponents;
};

/// Regenerates the terms of a sum at the caller's current PrecisionScope.
/// Constructions whose exponents are irrational attach one so the extended
/// paths see the true exponents instead of their double roundings.
using ExactForm = std::function<MpTerms()>;

/// g(t) = sum_j a_j exp(i lambda_j t), with Re(lambda_j) strictly increasing.
class ExpSum {
 public:
  ExpSum(std::vector<Complex> coefficients, std::vector<Complex> exponents);

  /// Real coefficients and real exponents.
  static ExpSum from_real(std::span<const double> coefficients, std::span<const double> exponents);

  ExpSum with_exact_form(ExactForm form) const;

  std::size_t size() const noexcept { return coefficients_.size(); }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  const std::vector<Complex>& exponents() const noexcept { return exponents_; }

  bool has_real_exponents() const noexcept;
  bool has_exact_form() const noexcept { return static_cast<bool>(exact_); }

  /// Terms at the current MPFR default precision: the attached exact form if
  /// any, otherwise the stored doubles lifted exactly.
  MpTerms exact_terms() const;

  double max_abs_exponent() const noexcept;

 private:
  std::vector<Complex> coefficients_;
  std::vector<Complex> exponents_;
  ExactForm exact_;
};

struct Interval {
  double y = 0.0;
  double a = 1.0;

  Interval() = default;
  Interval(double left, double length);
  static Interval symmetric(double half_width) { return Interval(-half_width, 2.0 * half_width); }

  double lo() const noexcept { return y; }
  double hi() const noexcept { return y + a; }
};

struct ClassParams {
  double M = 1.0;
  unsigned mu = 0;
  double delta = 1.0;

  void validate() const;
};

/// digits == 0 selects double arithmetic with compensated summation; anything
/// else evaluates in MPFR at max(digits, kMinExtendedDigits) decimal digits.
Complex evaluate(const ExpSum& g, double t, unsigned digits = 0);

/// |g(t)| at the chosen precision, returned as double.
double evaluate_abs(const ExpSum& g, double t, unsigned digits = 0);

/// Term-wise m-th derivative: coefficients a_j (i lambda_j)^m, same exponents.
ExpSum derivative(const ExpSum& g, unsigned m);

/// sum_j |a_j| |lambda_j|^m, a uniform bound on |g^(m)| over the real line.
/// Throws Unsupported for exponents with nonzero imaginary part.
double derivative_sup_bound(const ExpSum& g, unsigned m);

/// Working precision (decimal digits) used for cancellation-sensitive work on
/// a sum with n+2 terms: 30 + 2n.
unsigned precision_policy_digits(const ExpSum& g);

struct VanishingOrder {
  unsigned order = 0;
  bool exceeds_cap = false;
  unsigned digits_used = 0;
  /// |g^(m)(t0)| / derivative_sup_bound(g, m) for every order examined.
  std::vector<double> ratios;
};

/// Smallest m with |g^(m)(t0)| > rel_tol * derivative_sup_bound(g, m).
///
/// Computed in MPFR at max(digits, precision_policy_digits(g)). If every order
/// up to max_order vanishes, `exceeds_cap` is set and `order` is max_order + 1.
VanishingOrder vanishing_order(const ExpSum& g, double t0, double rel_tol, unsigned digits = 0,
                               unsigned max_order = 64);

struct SupNormResult {
  double max = 0.0;
  double argmax = 0.0;
  double grid_spacing = 0.0;
  /// The true supremum exceeds `max` by at most this (h * sum |a_j||lambda_j|).
  double certification_slack = 0.0;
  std::size_t grid_points = 0;
};

std::size_t default_grid_points(const ExpSum& g, const Interval& interval);

/// Max of |g| on a uniform grid refined by golden-section search around the
/// three best grid maxima. The result is an attained value, hence a lower
/// bound on the supremum. grid_points == 0 selects default_grid_points.
SupNormResult sup_norm(const ExpSum& g, const Interval& interval, std::size_t grid_points = 0,
                       unsigned digits = 0);

/// Integral of |g| over the interval by adaptive Gauss-Legendre (orders 15/31).
QuadratureResult l1_norm(const ExpSum& g, const Interval& interval, double abs_tol = 1e-10,
                         unsigned digits = 0);

enum class ClassCondition {
  LeadingCoefficientModulus,  // |a_0| = 1
  LeadingExponent,            // Re(lambda_0) = 0
  CoefficientGrowth,          // |a_j| <= M j^mu
  ExponentGrowth,             // Re(lambda_j) >= j delta
};

const char* to_string(ClassCondition condition) noexcept;

struct ClassViolation {
  std::size_t index = 0;
  ClassCondition condition = ClassCondition::LeadingCoefficientModulus;
};

struct ClassMembership {
  bool member = true;
  std::optional<ClassViolation> violation;

  explicit operator bool() const noexcept { return member; }
};

ClassMembership class_membership(const ExpSum& g, const ClassParams& params);

}  // namespace expbound

#endif
