#include "expbound/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "expbound/error.hpp"

namespace expbound {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_real_exponents(const ExpSum& g, const char* operation) {
  if (!g.has_real_exponents()) {
    throw Error(ErrorCode::Unsupported,
                std::string(operation) + " requires real exponents (nonzero imaginary part found)");
  }
}

struct Neumaier {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

Complex term_phase(Complex lambda, double t) {
  const double phase = lambda.real() * t;
  const double damping = lambda.imag() == 0.0 ? 1.0 : std::exp(-lambda.imag() * t);
  return {damping * std::cos(phase), damping * std::sin(phase)};
}

Complex evaluate_double(const ExpSum& g, double t) {
  Neumaier re;
  Neumaier im;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Complex term = g.coefficients()[j] * term_phase(g.exponents()[j], t);
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

MpComplex evaluate_terms(const MpTerms& terms, const MpReal& t) {
  MpComplex sum;
  for (std::size_t j = 0; j < terms.coefficients.size(); ++j) {
    sum += terms.coefficients[j] * mp_expi(terms.exponents[j], t);
  }
  return sum;
}

/// |g(t)| at a fixed precision; holds the MPFR scope and cached terms while alive.
class AbsEvaluator {
 public:
  AbsEvaluator(const ExpSum& g, unsigned digits) : g_(g) {
    if (digits > 0) {
      scope_.emplace(digits);
      terms_ = g.exact_terms();
    }
  }

  double operator()(double t) const {
    if (!scope_) return std::abs(evaluate_double(g_, t));
    return static_cast<double>(evaluate_terms(terms_, MpReal(t)).abs());
  }

 private:
  const ExpSum& g_;
  std::optional<PrecisionScope> scope_;
  MpTerms terms_;
};

}  // namespace

ExpSum::ExpSum(std::vector<Complex> coefficients, std::vector<Complex> exponents)
    : coefficients_(std::move(coefficients)), exponents_(std::move(exponents)) {
  if (coefficients_.empty()) throw_invalid("exponential sum needs at least one term");
  if (coefficients_.size() != exponents_.size()) {
    throw_invalid("coefficient and exponent counts differ (" +
                  std::to_string(coefficients_.size()) + " vs " +
                  std::to_string(exponents_.size()) + ")");
  }
  for (std::size_t j = 0; j < size(); ++j) {
    const Complex a = coefficients_[j];
    const Complex lambda = exponents_[j];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(lambda.real()) ||
        !std::isfinite(lambda.imag())) {
      throw_invalid("term " + std::to_string(j) + " is not finite");
    }
    if (j > 0 && !(lambda.real() > exponents_[j - 1].real())) {
      throw_invalid("real parts of exponents must be strictly increasing (index " +
                    std::to_string(j) + ")");
    }
  }
}

ExpSum ExpSum::from_real(std::span<const double> coefficients, std::span<const double> exponents) {
  return ExpSum(std::vector<Complex>(coefficients.begin(), coefficients.end()),
                std::vector<Complex>(exponents.begin(), exponents.end()));
}

ExpSum ExpSum::with_exact_form(ExactForm form) const {
  ExpSum copy = *this;
  copy.exact_ = std::move(form);
  return copy;
}

bool ExpSum::has_real_exponents() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Complex z) { return z.imag() == 0.0; });
}

MpTerms ExpSum::exact_terms() const {
  if (exact_) return exact_();
  MpTerms terms;
  terms.coefficients.reserve(size());
  terms.exponents.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) {
    terms.coefficients.emplace_back(coefficients_[j]);
    terms.exponents.emplace_back(exponents_[j]);
  }
  return terms;
}

double ExpSum::max_abs_exponent() const noexcept {
  double result = 0.0;
  for (Complex z : exponents_) result = std::max(result, std::abs(z));
  return result;
}

Interval::Interval(double left, double length) : y(left), a(length) {
  if (!std::isfinite(left) || !std::isfinite(length) || !(length > 0.0)) {
    throw_invalid("interval needs a finite left endpoint and a positive length");
  }
}

void ClassParams::validate() const {
  if (!(M >= 1.0) || !std::isfinite(M)) throw_invalid("class parameter M must be >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw_invalid("class parameter delta must be > 0");
}

Complex evaluate(const ExpSum& g, double t, unsigned digits) {
  if (!std::isfinite(t)) throw_invalid("evaluation point must be finite");
  if (digits == 0) return evaluate_double(g, t);
  PrecisionScope scope(digits);
  return evaluate_terms(g.exact_terms(), MpReal(t)).to_double();
}

double evaluate_abs(const ExpSum& g, double t, unsigned digits) {
  if (!std::isfinite(t)) throw_invalid("evaluation point must be finite");
  return AbsEvaluator(g, digits)(t);
}

ExpSum derivative(const ExpSum& g, unsigned m) {
  if (m == 0) return g;
  std::vector<Complex> coefficients(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Complex factor = Complex(0.0, 1.0) * g.exponents()[j];
    Complex power(1.0, 0.0);
    for (unsigned k = 0; k < m; ++k) power *= factor;
    coefficients[j] = g.coefficients()[j] * power;
  }
  ExpSum result(std::move(coefficients), g.exponents());
  if (!g.has_exact_form()) return result;
  return result.with_exact_form([g, m]() {
    MpTerms terms = g.exact_terms();
    for (std::size_t j = 0; j < terms.coefficients.size(); ++j) {
      const MpComplex& lambda = terms.exponents[j];
      const MpComplex factor(-lambda.im, lambda.re);
      terms.coefficients[j] = terms.coefficients[j] * mp_pow(factor, m);
    }
    return terms;
  });
}

double derivative_sup_bound(const ExpSum& g, unsigned m) {
  require_real_exponents(g, "derivative_sup_bound");
  Neumaier sum;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double lambda = std::abs(g.exponents()[j].real());
    const double power = m == 0 ? 1.0 : std::pow(lambda, static_cast<double>(m));
    sum.add(std::abs(g.coefficients()[j]) * power);
  }
  return sum.value();
}

unsigned precision_policy_digits(const ExpSum& g) {
  const std::size_t n = g.size() >= 2 ? g.size() - 2 : 0;
  return static_cast<unsigned>(30 + 2 * n);
}

VanishingOrder vanishing_order(const ExpSum& g, double t0, double rel_tol, unsigned digits,
                               unsigned max_order) {
  if (!std::isfinite(t0)) throw_invalid("vanishing_order: t0 must be finite");
  if (!(rel_tol > 0.0 && rel_tol < 1e-3)) throw_invalid("vanishing_order: rel_tol must lie in (0, 1e-3)");
  require_real_exponents(g, "vanishing_order");

  VanishingOrder report;
  report.digits_used = std::max({digits, precision_policy_digits(g), kMinExtendedDigits});
  PrecisionScope scope(report.digits_used);
  const MpTerms terms = g.exact_terms();
  const MpReal t(t0);
  const std::size_t count = terms.coefficients.size();

  // phased[j] = a_j exp(i lambda_j t0) (i lambda_j)^m, advanced one order per step.
  std::vector<MpComplex> phased(count);
  std::vector<MpComplex> step(count);
  std::vector<MpReal> magnitude(count);
  std::vector<MpReal> modulus(count);
  for (std::size_t j = 0; j < count; ++j) {
    phased[j] = terms.coefficients[j] * mp_expi(terms.exponents[j], t);
    step[j] = MpComplex(-terms.exponents[j].im, terms.exponents[j].re);
    magnitude[j] = terms.coefficients[j].abs();
    modulus[j] = terms.exponents[j].abs();
  }

  const MpReal tolerance(rel_tol);
  for (unsigned m = 0; m <= max_order; ++m) {
    MpComplex value;
    MpReal bound(0);
    for (std::size_t j = 0; j < count; ++j) {
      value += phased[j];
      bound += magnitude[j];
    }
    const MpReal abs_value = value.abs();
    MpReal ratio(0);
    if (bound == 0) {
      if (abs_value != 0) {
        throw Error(ErrorCode::PrecisionInsufficient,
                    "derivative of order " + std::to_string(m) +
                        " is nonzero although its sup bound vanishes");
      }
    } else {
      ratio = abs_value / bound;
    }
    report.ratios.push_back(static_cast<double>(ratio));
    if (ratio > tolerance) {
      report.order = m;
      return report;
    }
    for (std::size_t j = 0; j < count; ++j) {
      phased[j] = phased[j] * step[j];
      magnitude[j] *= modulus[j];
    }
  }
  report.exceeds_cap = true;
  report.order = max_order + 1;
  return report;
}

std::size_t default_grid_points(const ExpSum& g, const Interval& interval) {
  double max_re = 0.0;
  for (Complex z : g.exponents()) max_re = std::max(max_re, std::abs(z.real()));
  const double scaled = std::ceil(32.0 * (1.0 + max_re * interval.a));
  if (!(scaled < 1e8)) throw_invalid("sup_norm: default grid would exceed 1e8 points");
  return std::max<std::size_t>(1024, static_cast<std::size_t>(scaled));
}

SupNormResult sup_norm(const ExpSum& g, const Interval& interval, std::size_t grid_points,
                       unsigned digits) {
  require_real_exponents(g, "sup_norm");
  if (grid_points == 0) grid_points = default_grid_points(g, interval);
  if (grid_points < 16) throw_invalid("sup_norm: grid_points must be >= 16");

  const AbsEvaluator abs_g(g, digits);
  const double lo = interval.lo();
  const double hi = interval.hi();
  const double h = interval.a / static_cast<double>(grid_points - 1);
  auto node = [&](std::size_t i) { return i + 1 == grid_points ? hi : lo + h * i; };

  std::vector<double> values(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) values[i] = abs_g(node(i));

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == grid_points || values[i] >= values[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  if (peaks.size() > 3) peaks.resize(3);

  SupNormResult result;
  result.grid_points = grid_points;
  result.grid_spacing = h;
  result.max = values[peaks.front()];
  result.argmax = node(peaks.front());

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t peak : peaks) {
    double left = node(peak == 0 ? 0 : peak - 1);
    double right = node(std::min(peak + 1, grid_points - 1));
    double c = right - inv_phi * (right - left);
    double d = left + inv_phi * (right - left);
    double fc = abs_g(c);
    double fd = abs_g(d);
    for (int iter = 0; iter < 80 && right - left > 1e-15 * (1.0 + std::abs(left)); ++iter) {
      if (fc > result.max) {
        result.max = fc;
        result.argmax = c;
      }
      if (fd > result.max) {
        result.max = fd;
        result.argmax = d;
      }
      if (fc >= fd) {
        right = d;
        d = c;
        fd = fc;
        c = right - inv_phi * (right - left);
        fc = abs_g(c);
      } else {
        left = c;
        c = d;
        fc = fd;
        d = left + inv_phi * (right - left);
        fd = abs_g(d);
      }
    }
    if (fc > result.max) {
      result.max = fc;
      result.argmax = c;
    }
    if (fd > result.max) {
      result.max = fd;
      result.argmax = d;
    }
  }
  result.certification_slack = h * derivative_sup_bound(g, 1);
  return result;
}

QuadratureResult l1_norm(const ExpSum& g, const Interval& interval, double abs_tol,
                         unsigned digits) {
  require_real_exponents(g, "l1_norm");
  if (!(abs_tol > 0.0)) throw_invalid("l1_norm: abs_tol must be positive");
  const AbsEvaluator abs_g(g, digits);
  AdaptiveOptions options;
  options.abs_tol = abs_tol;
  return integrate_adaptive([&](double t) { return abs_g(t); }, interval.lo(), interval.hi(),
                            options);
}

const char* to_string(ClassCondition condition) noexcept {
  switch (condition) {
    case ClassCondition::LeadingCoefficientModulus: return "|a_0| = 1";
    case ClassCondition::LeadingExponent: return "Re(lambda_0) = 0";
    case ClassCondition::CoefficientGrowth: return "|a_j| <= M j^mu";
    case ClassCondition::ExponentGrowth: return "Re(lambda_j) >= j delta";
  }
  return "unknown";
}

ClassMembership class_membership(const ExpSum& g, const ClassParams& params) {
  params.validate();
  auto fail = [](std::size_t index, ClassCondition condition) {
    return ClassMembership{false, ClassViolation{index, condition}};
  };
  if (std::abs(std::abs(g.coefficients()[0]) - 1.0) > kUnitTolerance) {
    return fail(0, ClassCondition::LeadingCoefficientModulus);
  }
  if (std::abs(g.exponents()[0].real()) > kUnitTolerance) {
    return fail(0, ClassCondition::LeadingExponent);
  }
  for (std::size_t j = 1; j < g.size(); ++j) {
    const double jd = static_cast<double>(j);
    const double cap = params.M * std::pow(jd, static_cast<double>(params.mu));
    if (std::abs(g.coefficients()[j]) > cap * (1.0 + kUnitTolerance)) {
      return fail(j, ClassCondition::CoefficientGrowth);
    }
    if (g.exponents()[j].real() < jd * params.delta - kUnitTolerance) {
      return fail(j, ClassCondition::ExponentGrowth);
    }
  }
  return {};
}

}  // namespace expbound
