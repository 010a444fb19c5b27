#ifndef FRACCALC_ORACLE_HPP_
#define FRACCALC_ORACLE_HPP_

// Formula-free evaluation of the fractional operators straight from their
// integral definitions. None of the routines here call into closed_forms;
// the verification suites rely on that independence.

#include <functional>

#include "fraccalc/closed_forms.hpp"

namespace fraccalc::oracle {

struct QuadConfig {
  /// Two successive rungs of the node ladder must agree to this.
  double target_rel_tol = 1e-10;
  /// Last rung of the ladder 16, 32, ..., max_nodes.
  int max_nodes = 2048;
  /// Initial finite-difference step, relative to t.
  double fd_step_factor = 0.1;
  /// Number of step halvings in the Richardson table.
  int richardson_levels = 3;

  /// Throws DomainError if any field is out of range.
  void validate() const;
};

/// The function f under the operator. `singular_at_zero` selects the graded
/// treatment of the tau -> 0 endpoint.
struct Integrand {
  std::function<double(double)> evaluator;
  bool singular_at_zero = false;

  static Integrand from_family(const FunctionFamily& family);
};

/// I^alpha f(t) with lower limit 0, as t^alpha/Gamma(alpha) times
/// \int_0^1 (1-s)^(alpha-1) f(ts) ds, by Gauss-Jacobi quadrature with node
/// doubling until two rungs agree.
EvalResult rl_integral_quad(const Integrand& f, double alpha, double t, const QuadConfig& cfg = {});

/// D^alpha f(t) = d^m/dt^m I^(m-alpha) f(t), non-integer alpha. The integral
/// is evaluated with one fixed rule on a central-difference stencil and the
/// m-th difference is Richardson-extrapolated.
EvalResult rl_derivative_quad(const Integrand& f, double alpha, double t, const QuadConfig& cfg = {});

/// Weyl integral of |tau|^(-delta) for 0 < alpha < delta < 1, split at 0.
EvalResult weyl_integral_quad(double delta, double alpha, double t, const QuadConfig& cfg = {});

/// Weyl derivative of |tau|^(-delta), 0 < delta < 1, non-integer alpha.
EvalResult weyl_derivative_quad(double delta, double alpha, double t, const QuadConfig& cfg = {});

/// \int_0^inf (t + u)^a u^beta du for a < -beta - 1 < 0.
EvalResult lemma1_quad(double a_exp, double beta_exp, double t, const QuadConfig& cfg = {});

/// m-th derivative of g at t: central differences of width h = fd_step_factor t
/// and its halvings, combined in a Richardson table. Throws StencilError if
/// t - m h <= 0.
EvalResult richardson_derivative(const std::function<double(double)>& g, unsigned m, double t,
                                 const QuadConfig& cfg = {});

/// Oracle value of op applied to family at t. Integer-order RL derivatives
/// differentiate f directly; integer-order Weyl derivatives are rejected.
EvalResult evaluate(const OperatorSpec& op, const FunctionFamily& family, double t,
                    const QuadConfig& cfg = {});

}  // namespace fraccalc::oracle

#endif  // FRACCALC_ORACLE_HPP_
