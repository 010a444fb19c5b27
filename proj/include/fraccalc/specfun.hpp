#ifndef FRACCALC_SPECFUN_HPP_
#define FRACCALC_SPECFUN_HPP_

// Real-argument special functions used by the fractional closed forms.
// Everything here is a pure function; no state is shared between calls.

namespace fraccalc::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// A real argument that is known to be finite.
class RealArg {
 public:
  explicit RealArg(double value);
  double value() const { return value_; }
  operator double() const { return value_; }  // NOLINT

 private:
  double value_;
};

/// Parameters of the two-parameter Mittag-Leffler function E_{mu,nu}.
struct MLParams {
  double mu;
  double nu;

  /// Throws DomainError unless mu > 0 and both are finite.
  static MLParams make(double mu, double nu);
};

/// Limits of the direct Mittag-Leffler series.
struct MLConfig {
  double z_max = 50.0;
  int max_terms = 400;
  /// A term counts as negligible when |term| <= rel_tol * |partial sum|.
  double rel_tol = 1e-16;
  /// Number of consecutive negligible terms that ends the summation.
  int quiet_terms = 3;
  /// Relative accuracy promised for the result. A series whose largest term
  /// exceeds |result| * accuracy / eps raises ConvergenceError.
  double accuracy = 1e-10;
};

/// True iff x is one of 0, -1, -2, ...
bool is_nonpositive_integer(double x);
bool is_integer(double x);

/// sin(pi x) and cos(pi x) with exact zeros at the integer/half-integer lattice.
double sin_pi(double x);
double cos_pi(double x);

/// Gamma function on the real line. Lanczos sum for z > 0, reflection below.
/// Throws PoleError at 0, -1, -2, ... and OverflowError once the result
/// no longer fits in a double.
double gamma(double z);

/// ln Gamma(z) for z > 0; throws DomainError otherwise.
double log_gamma(double z);

/// 1/Gamma(z); exactly 0 at the poles of Gamma.
double rgamma(double z);

/// Gamma(p)/Gamma(q). Exactly 0 when q is a pole and p is not; the limit
/// (-1)^(n-k) k!/n! when p = -n and q = -k are both poles. Throws PoleError
/// when only p is a pole. Falls back to log space when the individual
/// gammas overflow.
double gamma_ratio(double p, double q);

/// Digamma psi(z) = Gamma'(z)/Gamma(z); PoleError at 0, -1, -2, ...
double digamma(double z);

/// Rising factorial x (x+1) ... (x+n-1), computed as the product.
double pochhammer(double x, unsigned n);

/// Beta function B(a, b) for a, b > 0.
double beta(double a, double b);

/// Lower incomplete gamma function gamma(alpha, z) for alpha > 0, z >= 0.
double lower_incomplete_gamma(double alpha, double z);

/// Two-parameter Mittag-Leffler function sum_k z^k / Gamma(mu k + nu).
/// Throws DomainError when |z| > cfg.z_max and ConvergenceError when
/// cfg.max_terms is exhausted. mu = 1 with z < 0 goes through Kummer's
/// transformation; for other mu a negative z whose alternating series cancels
/// below cfg.accuracy raises ConvergenceError.
double mittag_leffler(double mu, double nu, double z, const MLConfig& cfg = {});

}  // namespace fraccalc::specfun

#endif  // FRACCALC_SPECFUN_HPP_
