#include "fraccalc/gauss_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fraccalc/errors.hpp"
#include "fraccalc/specfun.hpp"

namespace fraccalc::quadrature {

namespace {

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix
// (diag d, off-diagonal e[0..n-2]). Only the first row of the eigenvector
// matrix is accumulated, which is all Golub-Welsch needs: O(n^2) work.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const std::size_t n = d.size();
  if (n == 1) return;
  e.resize(n, 0.0);
  e[n - 1] = 0.0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (++iterations > 60) throw ConvergenceError("gauss_jacobi: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

JacobiRule gauss_jacobi(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  }
  // Monic Jacobi recurrence on [-1, 1] for (1 - x)^a (1 + x)^b.
  const double ab = a + b;
  std::vector<double> diag(n);
  std::vector<double> off(n > 1 ? n - 1 : 0);
  diag[0] = (b - a) / (ab + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[k - 1] = std::sqrt(beta);
  }
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiagonal_ql(diag, off, z);

  // Total mass of the weight on [0, 1] is B(a + 1, b + 1).
  const double mass = specfun::beta(a + 1.0, b + 1.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

  JacobiRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.complements.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::clamp(diag[order[i]], -1.0, 1.0);
    rule.nodes[i] = 0.5 * (1.0 + x);
    rule.complements[i] = 0.5 * (1.0 - x);
    rule.weights[i] = mass * z[order[i]] * z[order[i]];
  }
  return rule;
}

}  // namespace fraccalc::quadrature
