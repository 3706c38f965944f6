#include "expbound/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "expbound/error.hpp"

namespace expbound {

namespace {

GaussLegendreRule compute_rule(unsigned order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (unsigned i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * derivative * derivative);
  }
  return rule;
}

double apply_rule(const GaussLegendreRule& rule, const std::function<double(double)>& f, double lo,
                  double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

// Neumaier summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

const GaussLegendreRule& gauss_legendre(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, GaussLegendreRule> cache;
  if (order == 0) throw_invalid("Gauss-Legendre order must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const AdaptiveOptions& options) {
  if (!(options.abs_tol > 0.0)) throw_invalid("abs_tol must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw_invalid("integration bounds must be finite with hi > lo");
  }
  const GaussLegendreRule& low = gauss_legendre(options.low_order);
  const GaussLegendreRule& high = gauss_legendre(options.high_order);
  const double total_width = hi - lo;

  struct Pending {
    double lo;
    double hi;
  };
  // Right halves are pushed first so the left subinterval is always processed next.
  std::vector<Pending> stack{{lo, hi}};
  CompensatedSum value;
  CompensatedSum error;
  std::size_t accepted = 0;

  while (!stack.empty()) {
    const Pending piece = stack.back();
    stack.pop_back();
    const double q_low = apply_rule(low, f, piece.lo, piece.hi);
    const double q_high = apply_rule(high, f, piece.lo, piece.hi);
    if (!std::isfinite(q_high)) throw Error(ErrorCode::Numeric, "integrand is not finite");
    const double estimate = std::abs(q_high - q_low);
    const double width = piece.hi - piece.lo;
    const double local_tol = options.abs_tol * width / total_width;
    const double mid = 0.5 * (piece.lo + piece.hi);
    const bool unsplittable = !(mid > piece.lo && mid < piece.hi);
    if (estimate <= local_tol || unsplittable) {
      value.add(q_high);
      error.add(estimate);
      ++accepted;
      continue;
    }
    if (accepted + stack.size() + 2 > options.max_subintervals) {
      value.add(q_high);
      error.add(estimate);
      for (const Pending& rest : stack) {
        const double q = apply_rule(high, f, rest.lo, rest.hi);
        value.add(q);
        error.add(std::abs(q - apply_rule(low, f, rest.lo, rest.hi)));
      }
      throw ConvergenceError("adaptive quadrature exceeded " +
                                 std::to_string(options.max_subintervals) + " subintervals",
                             value.value(), error.value());
    }
    stack.push_back({mid, piece.hi});
    stack.push_back({piece.lo, mid});
  }
  return {value.value(), error.value(), accepted};
}

}  // namespace expbound
