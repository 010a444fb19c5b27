#ifndef FRACCALC_CLOSED_FORMS_HPP_
#define FRACCALC_CLOSED_FORMS_HPP_

#include <string>
#include <string_view>
#include <variant>

namespace fraccalc {

// ---------------------------------------------------------------------------
// Function families and operators
// ---------------------------------------------------------------------------

/// f(tau) = tau^gamma_exp, gamma_exp > -1.
struct Power {
  double gamma_exp;
};
/// f(tau) = exp(lambda tau).
struct Exp {
  double lambda;
};
/// f(tau) = tau^(nu - 1) log(tau), nu > 0.
struct PowerLog {
  double nu;
};
/// f(tau) = |tau|^(-delta), 0 < delta < 1.
struct AbsPower {
  double delta;
};

using FunctionFamily = std::variant<Power, Exp, PowerLog, AbsPower>;

/// Checks the family invariants; throws DomainError on violation.
FunctionFamily make_family(const FunctionFamily& family);

/// Evaluates f at tau. Power and PowerLog need tau > 0, AbsPower tau != 0.
double family_value(const FunctionFamily& family, double tau);
/// The single real parameter (gamma_exp, lambda, nu or delta).
double family_parameter(const FunctionFamily& family);
/// "power", "exp", "powerlog" or "abspower".
std::string_view family_name(const FunctionFamily& family);
/// CLI syntax, e.g. "power:gamma=0.5".
std::string family_to_string(const FunctionFamily& family);
/// Whether f has an algebraic or logarithmic singularity at tau = 0.
bool singular_at_zero(const FunctionFamily& family);

enum class OperatorKind { kRLIntegral, kRLDerivative, kWeylIntegral, kWeylDerivative };

std::string_view operator_kind_name(OperatorKind kind);
bool is_derivative(OperatorKind kind);

/// Operator kind plus order alpha > 0.
class OperatorSpec {
 public:
  OperatorSpec(OperatorKind kind, double alpha);

  OperatorKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  /// Smallest integer strictly greater than alpha.
  int m() const;
  bool integer_order() const;

 private:
  OperatorKind kind_;
  double alpha_;
};

enum class Method { kClosedForm, kOracle, kLiterature };

std::string_view method_name(Method method);

struct EvalResult {
  double value = 0.0;
  Method method = Method::kClosedForm;
  double abs_err_estimate = 0.0;
};

namespace closed_forms {

// ---------------------------------------------------------------------------
// Riemann-Liouville operators with lower limit 0
// ---------------------------------------------------------------------------

/// I^alpha t^gamma = Gamma(1+gamma)/Gamma(1+gamma+alpha) t^(gamma+alpha).
double rl_integral_power(double alpha, double gamma_exp, double t);

/// D^alpha t^gamma = Gamma(1+gamma)/Gamma(1+gamma-alpha) t^(gamma-alpha);
/// exactly 0 when 1+gamma-alpha is a pole of Gamma.
double rl_derivative_power(double alpha, double gamma_exp, double t);

/// I^alpha e^(lambda t) = t^alpha E_{1,1+alpha}(lambda t).
double rl_integral_exp(double alpha, double lambda, double t);

/// D^alpha e^(lambda t) = t^(-alpha) E_{1,1-alpha}(lambda t), alpha not an
/// integer.
double rl_derivative_exp(double alpha, double lambda, double t);

/// I^alpha [t^(nu-1) log t]
///   = t^(alpha+nu-1) Gamma(nu)/Gamma(alpha+nu) [log t + psi(nu) - psi(alpha+nu)].
double rl_integral_powerlog(double alpha, double nu, double t);

/// D^alpha [t^(nu-1) log t]
///   = t^(nu-alpha-1) Gamma(nu)/Gamma(nu-alpha) [log t + psi(nu) - psi(nu-alpha)].
/// Throws SingularParamError when nu - alpha is 0, -1, -2, ...
double rl_derivative_powerlog(double alpha, double nu, double t);

// ---------------------------------------------------------------------------
// Weyl operators (lower limit -infinity) on |t|^(-delta)
// ---------------------------------------------------------------------------

/// For 0 < alpha < delta < 1:
///   Gamma(delta-alpha)/Gamma(delta) cos(pi delta/2 - pi alpha)/cos(pi delta/2) t^(alpha-delta).
double weyl_integral_abspower(double alpha, double delta, double t);

/// For 0 < delta < 1 and non-integer alpha > 0:
///   Gamma(delta+alpha)/Gamma(delta) cos(pi delta/2 + pi alpha)/cos(pi delta/2) t^(-alpha-delta).
/// Exactly 0 on the cancellation locus delta/2 + alpha = k + 1/2.
double weyl_derivative_abspower(double alpha, double delta, double t);

/// The widely tabulated Gamma(delta+alpha)/Gamma(delta) |t|^(-alpha-delta).
/// It is wrong (it lacks the cosine ratio); kept so that verification can
/// measure by how much.
double weyl_power_literature(double alpha, double delta, double t);

// ---------------------------------------------------------------------------
// Auxiliary integrals and derivative formulas
// ---------------------------------------------------------------------------

/// \int_{-inf}^0 (t - tau)^a |tau|^beta dtau
///   = t^(a+beta+1) Gamma(-1-a-beta) Gamma(beta+1) / Gamma(-a),
/// valid for a < -beta - 1 < 0.
double lemma1_integral(double a_exp, double beta_exp, double t);

/// \int_0^1 t^(a-1) (1-t)^(b-1) log t dt = B(a,b) [psi(a) - psi(a+b)].
double lemma3_log_beta_integral(double a, double b);

/// d^n/dt^n t^a, as the falling factorial a (a-1) ... (a-n+1) times t^(a-n).
double nth_derivative_power(unsigned n, double a_exp, double t);

/// d^n/dt^n [t^beta log t]
///   = Gamma(beta+1)/Gamma(beta-n+1) t^(beta-n) [log t + psi(beta+1) - psi(beta-n+1)].
/// Throws SingularParamError when beta - n + 1 is 0, -1, -2, ...
double nth_derivative_powerlog(unsigned n, double beta_exp, double t);

/// Both sides of
///   sum_{k=1}^n (-1)^(k-1) / (k (n-k)! Gamma(beta-n+k+1))
///     = [psi(beta+1) - psi(beta-n+1)] / (n! Gamma(beta-n+1)).
struct SumIdentitySides {
  double lhs;
  double rhs;
};
SumIdentitySides digamma_sum_identity_sides(unsigned n, double beta_exp);

/// lhs - rhs of the identity above.
double digamma_sum_identity_residual(unsigned n, double beta_exp);

// ---------------------------------------------------------------------------
// Integral expressions at a signed order. With order = -alpha these give the
// "substitute alpha by -alpha" values that the derivative forms must match.
// No precondition beyond t > 0 and off-pole arguments is enforced.
// ---------------------------------------------------------------------------

double power_integral_expression(double order, double gamma_exp, double t);
double exp_integral_expression(double order, double lambda, double t);
double powerlog_integral_expression(double order, double nu, double t);
double abspower_weyl_integral_expression(double order, double delta, double t);

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Closed-form value of op applied to family at t. Integer-order
/// derivatives use the classical m-th derivative. Weyl kinds are only
/// defined for AbsPower; anything else raises DomainError.
EvalResult evaluate(const OperatorSpec& op, const FunctionFamily& family, double t);

}  // namespace closed_forms
}  // namespace fraccalc

#endif  // FRACCALC_CLOSED_FORMS_HPP_
