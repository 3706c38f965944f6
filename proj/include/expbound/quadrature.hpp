#ifndef EXPBOUND_QUADRATURE_HPP
#define EXPBOUND_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace expbound {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subintervals = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once by Newton iteration on P_order and cached.
const GaussLegendreRule& gauss_legendre(unsigned order);

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  std::size_t max_subintervals = std::size_t{1} << 20;
  unsigned low_order = 15;
  unsigned high_order = 31;
};

/// Adaptive composite Gauss-Legendre on [lo, hi].
///
/// Each subinterval is integrated at both orders; |Q_high - Q_low| is the local
/// error estimate, accepted once it is below abs_tol * width / (hi - lo).
/// Otherwise the subinterval is bisected. Subintervals are visited left to
/// right and accepted contributions are summed in that order, so the result
/// does not depend on anything but the inputs. Throws ConvergenceError when
/// more than max_subintervals would be needed.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const AdaptiveOptions& options = {});

}  // namespace expbound

#endif
