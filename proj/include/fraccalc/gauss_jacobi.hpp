#ifndef FRACCALC_GAUSS_JACOBI_HPP_
#define FRACCALC_GAUSS_JACOBI_HPP_

#include <cstddef>
#include <vector>

namespace fraccalc::quadrature {

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - s)^a s^b, a, b > -1:
///   \int_0^1 (1 - s)^a s^b g(s) ds ~ sum_i weights[i] g(nodes[i]).
/// `complements[i]` holds 1 - nodes[i] computed without cancellation, for
/// integrands that need the distance to the right endpoint.
struct JacobiRule {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Builds the n-point rule from the eigen-decomposition of the symmetric
/// tridiagonal Jacobi matrix (Golub-Welsch). Nodes come out ascending.
/// Throws DomainError for n == 0 or exponents <= -1.
JacobiRule gauss_jacobi(std::size_t n, double a, double b);

/// Gauss-Legendre on [0, 1]; shorthand for gauss_jacobi(n, 0, 0).
inline JacobiRule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace fraccalc::quadrature

#endif  // FRACCALC_GAUSS_JACOBI_HPP_
