#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fraccalc/closed_forms.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/specfun.hpp"

using namespace fraccalc;
using namespace fraccalc::closed_forms;
using fraccalc::specfun::kPi;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

const double kSqrtPi = std::sqrt(kPi);

}  // namespace

// Frozen references are mpmath values at 50 digits.

TEST_CASE("power integral") {
  CHECK(rel_close(rl_integral_power(1.0, 0.0, 2.0), 2.0, 1e-15));
  CHECK(rel_close(rl_integral_power(0.5, -0.5, 1.0), kSqrtPi, 1e-15));
  CHECK(rel_close(rl_integral_power(0.5, 0.0, 4.0), 2.2567583341910251, 1e-15));
  CHECK(rel_close(rl_integral_power(0.5, 1.0, 1.0), 0.75225277806367505, 1e-15));
  for (double g : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0, 5.0}) CHECK(rel_close(rl_integral_power(1.0, g, t), std::pow(t, g + 1) / (g + 1), 1e-14));
  }
  CHECK_THROWS_AS(rl_integral_power(0.5, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_integral_power(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_integral_power(0.5, 1.0, 0.0), DomainError);
}

TEST_CASE("power integral semigroup") {
  for (double g : {-0.5, 0.0, 1.3}) {
    for (double a : {0.25, 0.9, 1.5}) {
      for (double b : {0.1, 0.5, 2.5}) {
        const double twice = rl_integral_power(a, g, 1.0) * rl_integral_power(b, g + a, 2.0);
        CHECK(rel_close(twice, rl_integral_power(a + b, g, 2.0), 1e-12));
      }
    }
  }
}

TEST_CASE("power derivative") {
  CHECK(rel_close(rl_derivative_power(0.5, 2.0, 1.0), 1.5045055561273501, 1e-15));
  CHECK(rel_close(rl_derivative_power(0.5, 0.0, 4.0), 0.28209479177387814, 1e-15));
  // Pole-as-zero: D^(1/2) t^(-1/2) = 0.
  CHECK(rl_derivative_power(0.5, -0.5, 3.0) == 0.0);
  CHECK(rl_derivative_power(2.5, 0.5, 3.0) == 0.0);
}

TEST_CASE("exponential") {
  CHECK(rel_close(rl_integral_exp(0.5, 0.0, 4.0), 2.2567583341910251, 1e-14));
  CHECK(rel_close(rl_integral_exp(0.5, 1.0, 1.0), 2.2906982523032382, 1e-14));
  CHECK(rel_close(rl_integral_exp(1.0, 1.0, 1.0), std::exp(1.0) - 1.0, 1e-14));
  CHECK(rel_close(rl_integral_exp(0.5, -1.0, 2.0), 0.51063660379369274513, 1e-13));
  CHECK(rel_close(rl_derivative_exp(0.5, 0.0, 1.0), 1.0 / kSqrtPi, 1e-14));
  CHECK(rel_close(rl_derivative_exp(0.5, 1.0, 1.0), 2.8548878358509945, 1e-14));
  CHECK(rel_close(rl_derivative_exp(1.5, 0.5, 2.0), 0.90961970402825452422, 1e-13));
  CHECK_THROWS_AS(rl_derivative_exp(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("power-log") {
  for (double t : {0.5, 1.0, 2.0}) CHECK(rel_close(rl_integral_powerlog(1.0, 1.0, t), t * (std::log(t) - 1.0), 1e-13));
  CHECK(std::fabs(rl_integral_powerlog(1.0, 1.0, std::exp(1.0))) <= 1e-15);
  CHECK(rel_close(rl_integral_powerlog(0.5, 1.0, 1.0), -0.69249265764135724, 1e-14));
  CHECK(rel_close(rl_derivative_powerlog(0.5, 1.0, 1.0), 0.78213283827483395, 1e-14));
  CHECK(rel_close(rl_derivative_powerlog(0.5, 1.0, 1.0), 2.0 * std::log(2.0) / kSqrtPi, 1e-14));
  CHECK_THROWS_AS(rl_derivative_powerlog(0.5, 0.5, 2.0), SingularParamError);
  CHECK_THROWS_AS(rl_derivative_powerlog(2.5, 0.5, 2.0), SingularParamError);
  CHECK_THROWS_AS(rl_integral_powerlog(0.5, 0.0, 1.0), DomainError);
}

TEST_CASE("Weyl integral of |t|^-delta") {
  CHECK(rel_close(weyl_integral_abspower(0.25, 0.5, 1.0), 2.8928181692641543, 1e-14));
  CHECK(rel_close(weyl_integral_abspower(0.3, 0.6, 2.0), 2.7760070924600983404, 1e-13));
  const double v1 = weyl_integral_abspower(0.3, 0.7, 1.0);
  for (double t : {0.5, 2.0, 5.0}) {
    CHECK(rel_close(weyl_integral_abspower(0.3, 0.7, t), std::pow(t, 0.3 - 0.7) * v1, 1e-14));
  }
  CHECK_THROWS_AS(weyl_integral_abspower(0.5, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(weyl_integral_abspower(0.6, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(weyl_integral_abspower(0.2, 1.0, 1.0), DomainError);
}

TEST_CASE("Weyl derivative of |t|^-delta") {
  CHECK(weyl_derivative_abspower(0.25, 0.5, 1.0) == 0.0);
  CHECK(weyl_derivative_abspower(0.1, 0.8, 3.0) == 0.0);
  CHECK(rel_close(weyl_derivative_abspower(0.5, 0.25, 1.0), -0.13999967745248263, 1e-14));
  const double tan_pi_8 = std::sqrt(2.0) - 1.0;
  CHECK(rel_close(weyl_derivative_abspower(0.5, 0.25, 1.0),
                  -tan_pi_8 * specfun::gamma(0.75) / specfun::gamma(0.25), 1e-14));
  CHECK(rel_close(weyl_derivative_abspower(2.5, 0.8, 1.0), -7.0937641911401731338, 1e-13));
  CHECK_THROWS_AS(weyl_derivative_abspower(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("literature formula") {
  CHECK(rel_close(weyl_power_literature(0.25, 0.5, 1.0), 0.69136733903629335, 1e-14));
  CHECK(rel_close(weyl_power_literature(0.5, 0.25, 1.0), specfun::gamma(0.75) / specfun::gamma(0.25), 1e-14));
  // Positive where the corrected value is negative.
  CHECK(weyl_power_literature(0.5, 0.25, 2.0) > 0.0);
  CHECK(weyl_derivative_abspower(0.5, 0.25, 2.0) < 0.0);
}

TEST_CASE("signed-order expressions reproduce the derivatives") {
  for (double a : {0.1, 0.5, 0.75, 1.5, 2.5}) {
    for (double t : {0.5, 2.0}) {
      CHECK(rel_close(rl_derivative_power(a, 1.0, t), power_integral_expression(-a, 1.0, t), 1e-12));
      CHECK(rel_close(rl_derivative_exp(a, -1.0, t), exp_integral_expression(-a, -1.0, t), 1e-12));
      CHECK(rel_close(rl_derivative_powerlog(a, 2.0, t), powerlog_integral_expression(-a, 2.0, t), 1e-12));
      CHECK(rel_close(weyl_derivative_abspower(a, 0.4, t), abspower_weyl_integral_expression(-a, 0.4, t), 1e-12));
    }
  }
  CHECK(rel_close(weyl_integral_abspower(0.2, 0.5, 2.0), abspower_weyl_integral_expression(0.2, 0.5, 2.0), 1e-15));
}

TEST_CASE("power tail integral") {
  CHECK(rel_close(lemma1_integral(-1.5, -0.5, 1.0), 2.0, 1e-14));
  CHECK(rel_close(lemma1_integral(-2.0, -0.5, 1.0), kPi / 2.0, 1e-14));
  CHECK(rel_close(lemma1_integral(-1.7, -0.3, 1.0), 10.0 / 7.0, 1e-14));
  CHECK(rel_close(lemma1_integral(-1.7, -0.3, 2.0), 0.71428571428571433, 1e-14));
  CHECK_THROWS_AS(lemma1_integral(-0.4, -0.5, 1.0), DomainError);
  CHECK_THROWS_AS(lemma1_integral(-3.0, -1.5, 1.0), DomainError);
}

TEST_CASE("log-beta integral") {
  CHECK(rel_close(lemma3_log_beta_integral(1.0, 1.0), -1.0, 1e-15));
  CHECK(rel_close(lemma3_log_beta_integral(2.0, 1.0), -0.25, 1e-15));
  CHECK(rel_close(lemma3_log_beta_integral(0.5, 0.5), -2.0 * kPi * std::log(2.0), 1e-14));
  CHECK_THROWS_AS(lemma3_log_beta_integral(0.0, 1.0), DomainError);
}

TEST_CASE("n-th derivatives") {
  CHECK(rel_close(nth_derivative_power(2, 3.0, 2.0), 12.0, 1e-15));
  CHECK(rel_close(nth_derivative_power(1, 0.5, 4.0), 0.25, 1e-15));
  CHECK(rel_close(nth_derivative_power(3, 2.5, 4.0), 1.875 * 0.5, 1e-15));
  CHECK(nth_derivative_power(3, 2.0, 4.0) == 0.0);
  CHECK(nth_derivative_power(0, 1.7, 3.0) == std::pow(3.0, 1.7));
  for (double t : {0.5, 2.0}) {
    CHECK(rel_close(nth_derivative_powerlog(1, 1.0, t), std::log(t) + 1.0, 1e-14));
    CHECK(rel_close(nth_derivative_powerlog(2, 0.5, t), -0.25 * std::pow(t, -1.5) * std::log(t), 1e-13));
    CHECK(rel_close(nth_derivative_powerlog(1, 2.0, t), 2.0 * t * std::log(t) + t, 1e-14));
  }
  CHECK_THROWS_AS(nth_derivative_powerlog(3, 2.0, 1.0), SingularParamError);
}

TEST_CASE("digamma sum identity") {
  const struct {
    unsigned n;
    double beta;
    double rhs;
  } frozen[] = {{2, 1.3, 0.68568769756757037},
                {5, 2.5, 0.0014104739588693907},
                {8, 0.5, 0.028219973775296069},
                {8, 4.1, -0.00012888629023327178}};
  for (const auto& f : frozen) {
    const auto s = digamma_sum_identity_sides(f.n, f.beta);
    CHECK(rel_close(s.rhs, f.rhs, 1e-13));
    CHECK(rel_close(s.lhs, f.rhs, 1e-12));
  }
  for (unsigned n = 1; n <= 8; ++n) {
    for (double b : {0.5, 1.3, 2.5, 4.1}) CHECK(std::fabs(digamma_sum_identity_residual(n, b)) <= 1e-12);
  }
  CHECK_THROWS_AS(digamma_sum_identity_residual(3, 1.0), SingularParamError);
}

TEST_CASE("zero-order continuity") {
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(rel_close(rl_integral_power(1e-8, 0.5, t), std::sqrt(t), 1e-6));
    CHECK(rel_close(rl_integral_exp(1e-8, -1.0, t), std::exp(-t), 1e-6));
    CHECK(std::fabs(rl_integral_powerlog(1e-8, 2.0, t) - t * std::log(t)) <= 1e-6 * std::max(1.0, std::fabs(t * std::log(t))));
  }
}

TEST_CASE("families and operators") {
  CHECK_THROWS_AS(make_family(Power{-1.0}), DomainError);
  CHECK_THROWS_AS(make_family(PowerLog{0.0}), DomainError);
  CHECK_THROWS_AS(make_family(AbsPower{1.0}), DomainError);
  CHECK(family_to_string(Power{0.5}) == "power:gamma=0.5");
  CHECK(family_to_string(AbsPower{0.25}) == "abspower:delta=0.25");
  CHECK(family_value(AbsPower{0.5}, -4.0) == doctest::Approx(0.5));
  CHECK(singular_at_zero(Power{0.5}));
  CHECK_FALSE(singular_at_zero(Power{2.0}));
  CHECK_FALSE(singular_at_zero(Exp{1.0}));
  CHECK(OperatorSpec(OperatorKind::kRLDerivative, 0.5).m() == 1);
  CHECK(OperatorSpec(OperatorKind::kRLDerivative, 2.0).m() == 3);
  CHECK(OperatorSpec(OperatorKind::kRLDerivative, 2.0).integer_order());
  CHECK_THROWS_AS(OperatorSpec(OperatorKind::kRLIntegral, 0.0), DomainError);
  CHECK(operator_kind_name(OperatorKind::kWeylDerivative) == "weyl-der");
}

TEST_CASE("dispatch") {
  const auto r = evaluate(OperatorSpec(OperatorKind::kRLIntegral, 0.5), Exp{1.0}, 1.0);
  CHECK(r.method == Method::kClosedForm);
  CHECK(rel_close(r.value, 2.2906982523032382, 1e-14));
  // Integer order: classical derivative.
  CHECK(rel_close(evaluate(OperatorSpec(OperatorKind::kRLDerivative, 2.0), Exp{0.5}, 2.0).value,
                  0.25 * std::exp(1.0), 1e-14));
  CHECK(rel_close(evaluate(OperatorSpec(OperatorKind::kRLDerivative, 1.0), PowerLog{2.0}, 2.0).value,
                  std::log(2.0) + 1.0, 1e-14));
  CHECK(rel_close(evaluate(OperatorSpec(OperatorKind::kRLIntegral, 0.5), AbsPower{0.5}, 1.0).value, kSqrtPi, 1e-14));
  CHECK(evaluate(OperatorSpec(OperatorKind::kWeylDerivative, 0.25), AbsPower{0.5}, 1.0).value == 0.0);
  CHECK_THROWS_AS(evaluate(OperatorSpec(OperatorKind::kWeylIntegral, 0.25), Exp{1.0}, 1.0), DomainError);
}
