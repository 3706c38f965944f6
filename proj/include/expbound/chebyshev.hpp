#ifndef EXPBOUND_CHEBYSHEV_HPP
#define EXPBOUND_CHEBYSHEV_HPP

#include <span>
#include <vector>

namespace expbound {

/// Zeros alpha_k = cos(k*pi/(2n+2)), k = 1..2n+1, of U_{2n+1}, in decreasing order.
///
/// The upper half is built by mirroring (alpha_{2n+2-k} = -alpha_k) and the
/// middle node is exactly zero, so the antisymmetry holds bitwise.
struct ChebNodeSet {
  unsigned n = 0;
  std::vector<double> nodes;

  /// 1-based access matching the usual alpha_k indexing.
  double alpha(unsigned k) const { return nodes.at(k - 1); }
  unsigned degree() const noexcept { return 2 * n + 1; }
};

/// U_degree(x) by the three-term recurrence.
double cheb_u(unsigned degree, double x);

/// Requires n even.
ChebNodeSet cheb_nodes(unsigned n);

/// |q(1) - q(0) - 2 sum_{k=1}^{n} (-1)^{k+1} q(alpha_k)| for an even polynomial q.
///
/// `coefficients[i]` multiplies x^i. Odd powers must be zero and the degree
/// must not exceed 2n; the alternating sum reproduces q(1) exactly for such q.
double endpoint_identity_residual(std::span<const double> coefficients, unsigned n);

/// Evaluates an even polynomial (coefficients in powers of x) by Horner in x^2.
double evaluate_even_polynomial(std::span<const double> coefficients, double x);

}  // namespace expbound

#endif
