#include "expbound/chebyshev.hpp"

#include <cmath>
#include <string>

#include "expbound/error.hpp"
#include "expbound/precision.hpp"

namespace expbound {

double cheb_u(unsigned degree, double x) {
  if (!std::isfinite(x)) throw_invalid("cheb_u: x must be finite");
  if (degree == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * x;
  for (unsigned m = 1; m < degree; ++m) {
    const double next = 2.0 * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

ChebNodeSet cheb_nodes(unsigned n) {
  if (n % 2 != 0) throw_invalid("cheb_nodes: n must be even, got " + std::to_string(n));
  ChebNodeSet set;
  set.n = n;
  set.nodes.resize(2 * n + 1);
  const unsigned denominator = 2 * n + 2;
  for (unsigned k = 1; k <= n; ++k) set.nodes[k - 1] = rounded_cos(k, denominator);
  set.nodes[n] = 0.0;
  for (unsigned k = n + 2; k <= 2 * n + 1; ++k) set.nodes[k - 1] = -set.nodes[2 * n + 2 - k - 1];
  return set;
}

namespace {

void check_even_polynomial(std::span<const double> coefficients, unsigned n) {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!std::isfinite(coefficients[i])) throw_invalid("polynomial coefficients must be finite");
    if (coefficients[i] == 0.0) continue;
    if (i % 2 != 0) {
      throw_invalid("polynomial has an odd-degree term x^" + std::to_string(i));
    }
    if (i > 2 * static_cast<std::size_t>(n)) {
      throw_invalid("polynomial degree " + std::to_string(i) + " exceeds 2n = " +
                    std::to_string(2 * n));
    }
  }
}

}  // namespace

double evaluate_even_polynomial(std::span<const double> coefficients, double x) {
  if (coefficients.empty()) return 0.0;
  const double x2 = x * x;
  double acc = 0.0;
  const std::size_t top = (coefficients.size() - 1) & ~std::size_t{1};
  for (std::size_t i = top + 2; i >= 2; i -= 2) {
    acc = acc * x2 + coefficients[i - 2];
  }
  return acc;
}

double endpoint_identity_residual(std::span<const double> coefficients, unsigned n) {
  if (n % 2 != 0) throw_invalid("endpoint identity requires even n");
  check_even_polynomial(coefficients, n);
  const ChebNodeSet set = cheb_nodes(n);
  double alternating = 0.0;
  for (unsigned k = 1; k <= n; ++k) {
    const double term = evaluate_even_polynomial(coefficients, set.alpha(k));
    alternating += (k % 2 == 1) ? term : -term;
  }
  const double at_one = evaluate_even_polynomial(coefficients, 1.0);
  const double at_zero = coefficients.empty() ? 0.0 : coefficients[0];
  return std::abs(at_one - at_zero - 2.0 * alternating);
}

}  // namespace expbound
