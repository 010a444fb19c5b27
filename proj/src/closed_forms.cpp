#include "fraccalc/closed_forms.hpp"

#include <cmath>
#include <string>

#include "fraccalc/errors.hpp"
#include "fraccalc/format.hpp"
#include "fraccalc/specfun.hpp"

namespace fraccalc {

namespace sf = specfun;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument is not finite");
}

void require_positive_t(double t, const char* what) {
  require_finite(t, what);
  if (!(t > 0.0)) throw DomainError(std::string(what) + ": requires t > 0");
}

}  // namespace

FunctionFamily make_family(const FunctionFamily& family) {
  std::visit(Overloaded{
                 [](const Power& p) {
                   require_finite(p.gamma_exp, "power family");
                   require(p.gamma_exp > -1.0, "power family: requires gamma > -1");
                 },
                 [](const Exp& e) { require_finite(e.lambda, "exp family"); },
                 [](const PowerLog& p) {
                   require_finite(p.nu, "powerlog family");
                   require(p.nu > 0.0, "powerlog family: requires nu > 0");
                 },
                 [](const AbsPower& a) {
                   require_finite(a.delta, "abspower family");
                   require(a.delta > 0.0 && a.delta < 1.0,
                           "abspower family: requires 0 < delta < 1");
                 },
             },
             family);
  return family;
}

double family_value(const FunctionFamily& family, double tau) {
  return std::visit(Overloaded{
                        [tau](const Power& p) { return std::pow(tau, p.gamma_exp); },
                        [tau](const Exp& e) { return std::exp(e.lambda * tau); },
                        [tau](const PowerLog& p) { return std::pow(tau, p.nu - 1.0) * std::log(tau); },
                        [tau](const AbsPower& a) { return std::pow(std::fabs(tau), -a.delta); },
                    },
                    family);
}

double family_parameter(const FunctionFamily& family) {
  return std::visit(Overloaded{
                        [](const Power& p) { return p.gamma_exp; },
                        [](const Exp& e) { return e.lambda; },
                        [](const PowerLog& p) { return p.nu; },
                        [](const AbsPower& a) { return a.delta; },
                    },
                    family);
}

std::string_view family_name(const FunctionFamily& family) {
  return std::visit(Overloaded{
                        [](const Power&) { return std::string_view("power"); },
                        [](const Exp&) { return std::string_view("exp"); },
                        [](const PowerLog&) { return std::string_view("powerlog"); },
                        [](const AbsPower&) { return std::string_view("abspower"); },
                    },
                    family);
}

std::string family_to_string(const FunctionFamily& family) {
  static constexpr const char* kKeys[] = {"gamma", "lambda", "nu", "delta"};
  return std::string(family_name(family)) + ":" + kKeys[family.index()] + "=" +
         format_short(family_parameter(family));
}

bool singular_at_zero(const FunctionFamily& family) {
  return std::visit(Overloaded{
                        [](const Power& p) { return !(p.gamma_exp >= 0.0 && sf::is_integer(p.gamma_exp)); },
                        [](const Exp&) { return false; },
                        [](const PowerLog&) { return true; },
                        [](const AbsPower&) { return true; },
                    },
                    family);
}

std::string_view operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kRLIntegral: return "rl-int";
    case OperatorKind::kRLDerivative: return "rl-der";
    case OperatorKind::kWeylIntegral: return "weyl-int";
    case OperatorKind::kWeylDerivative: return "weyl-der";
  }
  return "?";
}

bool is_derivative(OperatorKind kind) {
  return kind == OperatorKind::kRLDerivative || kind == OperatorKind::kWeylDerivative;
}

OperatorSpec::OperatorSpec(OperatorKind kind, double alpha) : kind_(kind), alpha_(alpha) {
  require_finite(alpha, "OperatorSpec");
  require(alpha > 0.0, "OperatorSpec: requires alpha > 0");
}

int OperatorSpec::m() const { return static_cast<int>(std::floor(alpha_)) + 1; }

bool OperatorSpec::integer_order() const { return sf::is_integer(alpha_); }

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed-form";
    case Method::kOracle: return "oracle";
    case Method::kLiterature: return "literature";
  }
  return "?";
}

namespace closed_forms {

// --- integral expressions at a signed order ---------------------------------

double power_integral_expression(double order, double gamma_exp, double t) {
  return sf::gamma_ratio(1.0 + gamma_exp, 1.0 + gamma_exp + order) * std::pow(t, gamma_exp + order);
}

double exp_integral_expression(double order, double lambda, double t) {
  return std::pow(t, order) * sf::mittag_leffler(1.0, 1.0 + order, lambda * t);
}

double powerlog_integral_expression(double order, double nu, double t) {
  if (sf::is_nonpositive_integer(order + nu)) {
    throw SingularParamError("powerlog expression: order + nu is a pole");
  }
  const double bracket = std::log(t) + sf::digamma(nu) - sf::digamma(order + nu);
  return std::pow(t, order + nu - 1.0) * sf::gamma_ratio(nu, order + nu) * bracket;
}

double abspower_weyl_integral_expression(double order, double delta, double t) {
  return sf::gamma_ratio(delta - order, delta) * sf::cos_pi(0.5 * delta - order) /
         sf::cos_pi(0.5 * delta) * std::pow(t, order - delta);
}

// --- Riemann-Liouville --------------------------------------------------------

double rl_integral_power(double alpha, double gamma_exp, double t) {
  require_positive_t(t, "rl_integral_power");
  require(alpha > 0.0, "rl_integral_power: requires alpha > 0");
  require(gamma_exp > -1.0, "rl_integral_power: requires gamma > -1");
  return power_integral_expression(alpha, gamma_exp, t);
}

double rl_derivative_power(double alpha, double gamma_exp, double t) {
  require_positive_t(t, "rl_derivative_power");
  require(alpha > 0.0, "rl_derivative_power: requires alpha > 0");
  require(gamma_exp > -1.0, "rl_derivative_power: requires gamma > -1");
  const double coeff = sf::gamma_ratio(1.0 + gamma_exp, 1.0 + gamma_exp - alpha);
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(t, gamma_exp - alpha);
}

double rl_integral_exp(double alpha, double lambda, double t) {
  require_positive_t(t, "rl_integral_exp");
  require_finite(lambda, "rl_integral_exp");
  require(alpha > 0.0, "rl_integral_exp: requires alpha > 0");
  return exp_integral_expression(alpha, lambda, t);
}

double rl_derivative_exp(double alpha, double lambda, double t) {
  require_positive_t(t, "rl_derivative_exp");
  require_finite(lambda, "rl_derivative_exp");
  require(alpha > 0.0, "rl_derivative_exp: requires alpha > 0");
  require(!sf::is_integer(alpha), "rl_derivative_exp: integer alpha is a plain derivative");
  return std::pow(t, -alpha) * sf::mittag_leffler(1.0, 1.0 - alpha, lambda * t);
}

double rl_integral_powerlog(double alpha, double nu, double t) {
  require_positive_t(t, "rl_integral_powerlog");
  require(alpha > 0.0, "rl_integral_powerlog: requires alpha > 0");
  require(nu > 0.0, "rl_integral_powerlog: requires nu > 0");
  return powerlog_integral_expression(alpha, nu, t);
}

double rl_derivative_powerlog(double alpha, double nu, double t) {
  require_positive_t(t, "rl_derivative_powerlog");
  require(alpha > 0.0, "rl_derivative_powerlog: requires alpha > 0");
  require(!sf::is_integer(alpha), "rl_derivative_powerlog: integer alpha is a plain derivative");
  require(nu > 0.0, "rl_derivative_powerlog: requires nu > 0");
  const double shifted = nu - alpha;
  if (sf::is_nonpositive_integer(shifted)) {
    throw SingularParamError("rl_derivative_powerlog: nu - alpha is 0, -1, -2, ...");
  }
  const double bracket = std::log(t) + sf::digamma(nu) - sf::digamma(shifted);
  return std::pow(t, shifted - 1.0) * sf::gamma_ratio(nu, shifted) * bracket;
}

// --- Weyl ----------------------------------------------------------------------

double weyl_integral_abspower(double alpha, double delta, double t) {
  require_positive_t(t, "weyl_integral_abspower");
  require_finite(alpha, "weyl_integral_abspower");
  require_finite(delta, "weyl_integral_abspower");
  require(delta > 0.0 && delta < 1.0, "weyl_integral_abspower: requires 0 < delta < 1");
  require(alpha > 0.0 && alpha < delta, "weyl_integral_abspower: requires 0 < alpha < delta");
  return abspower_weyl_integral_expression(alpha, delta, t);
}

double weyl_derivative_abspower(double alpha, double delta, double t) {
  require_positive_t(t, "weyl_derivative_abspower");
  require_finite(alpha, "weyl_derivative_abspower");
  require_finite(delta, "weyl_derivative_abspower");
  require(delta > 0.0 && delta < 1.0, "weyl_derivative_abspower: requires 0 < delta < 1");
  require(alpha > 0.0, "weyl_derivative_abspower: requires alpha > 0");
  require(!sf::is_integer(alpha), "weyl_derivative_abspower: integer alpha is a plain derivative");
  const double cos_ratio = sf::cos_pi(0.5 * delta + alpha) / sf::cos_pi(0.5 * delta);
  if (cos_ratio == 0.0) return 0.0;
  return sf::gamma_ratio(delta + alpha, delta) * cos_ratio * std::pow(t, -alpha - delta);
}

double weyl_power_literature(double alpha, double delta, double t) {
  require_positive_t(t, "weyl_power_literature");
  require_finite(alpha, "weyl_power_literature");
  require_finite(delta, "weyl_power_literature");
  require(delta > 0.0 && delta < 1.0, "weyl_power_literature: requires 0 < delta < 1");
  return sf::gamma_ratio(delta + alpha, delta) * std::pow(t, -alpha - delta);
}

// --- auxiliary -------------------------------------------------------------------

double lemma1_integral(double a_exp, double beta_exp, double t) {
  require_positive_t(t, "lemma1_integral");
  require_finite(a_exp, "lemma1_integral");
  require_finite(beta_exp, "lemma1_integral");
  require(a_exp < -beta_exp - 1.0 && -beta_exp - 1.0 < 0.0,
          "lemma1_integral: requires a < -beta - 1 < 0");
  return std::pow(t, a_exp + beta_exp + 1.0) * sf::gamma(-1.0 - a_exp - beta_exp) *
         sf::gamma_ratio(beta_exp + 1.0, -a_exp);
}

double lemma3_log_beta_integral(double a, double b) {
  require_finite(a, "lemma3_log_beta_integral");
  require_finite(b, "lemma3_log_beta_integral");
  require(a > 0.0 && b > 0.0, "lemma3_log_beta_integral: requires a > 0 and b > 0");
  return sf::beta(a, b) * (sf::digamma(a) - sf::digamma(a + b));
}

double nth_derivative_power(unsigned n, double a_exp, double t) {
  require_positive_t(t, "nth_derivative_power");
  require_finite(a_exp, "nth_derivative_power");
  // (a - n + 1)_n = a (a-1) ... (a-n+1)
  const double falling = sf::pochhammer(a_exp - n + 1.0, n);
  if (falling == 0.0) return 0.0;
  return falling * std::pow(t, a_exp - n);
}

double nth_derivative_powerlog(unsigned n, double beta_exp, double t) {
  require_positive_t(t, "nth_derivative_powerlog");
  require_finite(beta_exp, "nth_derivative_powerlog");
  require(n >= 1, "nth_derivative_powerlog: requires n >= 1");
  const double low = beta_exp - n + 1.0;
  if (sf::is_nonpositive_integer(low)) {
    throw SingularParamError("nth_derivative_powerlog: beta - n + 1 is 0, -1, -2, ...");
  }
  const double bracket = std::log(t) + sf::digamma(beta_exp + 1.0) - sf::digamma(low);
  return sf::gamma_ratio(beta_exp + 1.0, low) * std::pow(t, beta_exp - n) * bracket;
}

SumIdentitySides digamma_sum_identity_sides(unsigned n, double beta_exp) {
  require_finite(beta_exp, "digamma_sum_identity");
  require(n >= 1, "digamma_sum_identity: requires n >= 1");
  const double low = beta_exp - n + 1.0;
  if (sf::is_nonpositive_integer(low)) {
    throw SingularParamError("digamma_sum_identity: beta - n + 1 is 0, -1, -2, ...");
  }
  double lhs = 0.0;
  double factorial_nk = sf::gamma(static_cast<double>(n));  // (n-1)! for k = 1
  for (unsigned k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    lhs += sign * sf::rgamma(beta_exp - n + k + 1.0) / (k * factorial_nk);
    if (k < n) factorial_nk /= static_cast<double>(n - k);
  }
  const double n_factorial = sf::gamma(n + 1.0);
  const double rhs =
      (sf::digamma(beta_exp + 1.0) - sf::digamma(low)) * sf::rgamma(low) / n_factorial;
  return {lhs, rhs};
}

double digamma_sum_identity_residual(unsigned n, double beta_exp) {
  const auto [lhs, rhs] = digamma_sum_identity_sides(n, beta_exp);
  return lhs - rhs;
}

// --- dispatch -----------------------------------------------------------------------

EvalResult evaluate(const OperatorSpec& op, const FunctionFamily& family, double t) {
  make_family(family);
  const double alpha = op.alpha();
  double value = 0.0;
  switch (op.kind()) {
    case OperatorKind::kRLIntegral:
      value = std::visit(Overloaded{
                             [&](const Power& p) { return rl_integral_power(alpha, p.gamma_exp, t); },
                             [&](const Exp& e) { return rl_integral_exp(alpha, e.lambda, t); },
                             [&](const PowerLog& p) { return rl_integral_powerlog(alpha, p.nu, t); },
                             [&](const AbsPower& a) { return rl_integral_power(alpha, -a.delta, t); },
                         },
                         family);
      break;
    case OperatorKind::kRLDerivative:
      if (op.integer_order()) {
        const auto n = static_cast<unsigned>(alpha);
        value = std::visit(
            Overloaded{
                [&](const Power& p) { return nth_derivative_power(n, p.gamma_exp, t); },
                [&](const Exp& e) { return std::pow(e.lambda, n) * std::exp(e.lambda * t); },
                [&](const PowerLog& p) { return nth_derivative_powerlog(n, p.nu - 1.0, t); },
                [&](const AbsPower& a) { return nth_derivative_power(n, -a.delta, t); },
            },
            family);
      } else {
        value = std::visit(
            Overloaded{
                [&](const Power& p) { return rl_derivative_power(alpha, p.gamma_exp, t); },
                [&](const Exp& e) { return rl_derivative_exp(alpha, e.lambda, t); },
                [&](const PowerLog& p) { return rl_derivative_powerlog(alpha, p.nu, t); },
                [&](const AbsPower& a) { return rl_derivative_power(alpha, -a.delta, t); },
            },
            family);
      }
      break;
    case OperatorKind::kWeylIntegral: {
      const auto* a = std::get_if<AbsPower>(&family);
      if (a == nullptr) throw DomainError("weyl-int: only the abspower family is supported");
      value = weyl_integral_abspower(alpha, a->delta, t);
      break;
    }
    case OperatorKind::kWeylDerivative: {
      const auto* a = std::get_if<AbsPower>(&family);
      if (a == nullptr) throw DomainError("weyl-der: only the abspower family is supported");
      value = op.integer_order()
                  ? nth_derivative_power(static_cast<unsigned>(alpha), -a->delta, t)
                  : weyl_derivative_abspower(alpha, a->delta, t);
      break;
    }
  }
  return EvalResult{value, Method::kClosedForm, 0.0};
}

}  // namespace closed_forms
}  // namespace fraccalc
