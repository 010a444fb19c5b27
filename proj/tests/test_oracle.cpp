#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <thread>
#include <vector>

#include "fraccalc/closed_forms.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/oracle.hpp"
#include "fraccalc/specfun.hpp"

using namespace fraccalc;
using namespace fraccalc::oracle;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

Integrand of(const FunctionFamily& f) { return Integrand::from_family(f); }

}  // namespace

TEST_CASE("RL integral") {
  CHECK(rel_close(rl_integral_quad(of(Power{0.0}), 0.5, 1.0).value, 1.1283791670955126, 1e-13));
  CHECK(rel_close(rl_integral_quad(of(Exp{1.0}), 1.0, 1.0).value, std::exp(1.0) - 1.0, 1e-14));
  CHECK(rel_close(rl_integral_quad(of(PowerLog{1.0}), 0.5, 1.0).value, -0.69249265764135724, 1e-10));
  CHECK(rel_close(rl_integral_quad(of(Power{-0.5}), 0.25, 2.0).value,
                  closed_forms::rl_integral_power(0.25, -0.5, 2.0), 1e-10));
  // A non-family integrand.
  const Integrand cosine{[](double x) { return std::cos(x); }, false};
  CHECK(rel_close(rl_integral_quad(cosine, 1.0, 0.7).value, std::sin(0.7), 1e-14));
  CHECK_THROWS_AS(rl_integral_quad(of(Power{0.0}), 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_integral_quad(of(Power{0.0}), 0.5, -1.0), DomainError);
}

TEST_CASE("RL derivative") {
  CHECK(rel_close(rl_derivative_quad(of(Power{2.0}), 0.5, 1.0).value, 1.5045055561273501, 1e-10));
  CHECK(rel_close(rl_derivative_quad(of(Power{0.0}), 0.5, 4.0).value, 0.28209479177387814, 1e-10));
  CHECK(rel_close(rl_derivative_quad(of(Exp{1.0}), 0.5, 1.0).value, 2.8548878358509945, 1e-10));
  CHECK(rel_close(rl_derivative_quad(of(PowerLog{1.0}), 0.5, 1.0).value, 0.78213283827483395, 1e-10));
  CHECK(std::fabs(rl_derivative_quad(of(Power{-0.5}), 2.5, 1.0).value) <= 1e-9);
  CHECK_THROWS_AS(rl_derivative_quad(of(Power{1.0}), 2.0, 1.0), DomainError);
}

TEST_CASE("Weyl integral") {
  const auto v1 = weyl_integral_quad(0.5, 0.25, 1.0);
  CHECK(rel_close(v1.value, 2.8928181692641543, 1e-10));
  CHECK(v1.method == Method::kOracle);
  const auto v2 = weyl_integral_quad(0.5, 0.25, 2.0);
  CHECK(rel_close(v2.value / v1.value, std::pow(2.0, 0.25 - 0.5), 1e-8));
  CHECK(rel_close(weyl_integral_quad(0.6, 0.3, 2.0).value, 2.7760070924600983404, 1e-10));
  CHECK_THROWS_AS(weyl_integral_quad(0.5, 0.6, 1.0), DomainError);
  CHECK_THROWS_AS(weyl_integral_quad(0.5, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(weyl_integral_quad(1.2, 0.5, 1.0), DomainError);
}

TEST_CASE("Weyl derivative") {
  CHECK(std::fabs(weyl_derivative_quad(0.5, 0.25, 1.0).value) <= 1e-6);
  CHECK(rel_close(weyl_derivative_quad(0.25, 0.5, 1.0).value, -0.13999967745248263, 1e-9));
  // m - alpha >= delta: the regularized tail.
  CHECK(rel_close(weyl_derivative_quad(0.2, 0.5, 1.0).value, closed_forms::weyl_derivative_abspower(0.5, 0.2, 1.0),
                  1e-8));
  CHECK(rel_close(weyl_derivative_quad(0.8, 2.5, 1.0).value, -7.0937641911401731338, 1e-6));
  CHECK_THROWS_AS(weyl_derivative_quad(0.5, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(OperatorSpec(OperatorKind::kWeylDerivative, 1.0), AbsPower{0.5}, 1.0), DomainError);
}

TEST_CASE("power tail integral quadrature") {
  CHECK(std::fabs(lemma1_quad(-1.5, -0.5, 1.0).value - 2.0) <= 1e-9);
  CHECK(std::fabs(lemma1_quad(-2.0, -0.5, 1.0).value - specfun::kPi / 2.0) <= 1e-9);
  CHECK(rel_close(lemma1_quad(-1.7, -0.3, 2.0).value, closed_forms::lemma1_integral(-1.7, -0.3, 2.0), 1e-8));
  CHECK_THROWS_AS(lemma1_quad(-0.5, -0.3, 1.0), DomainError);
}

TEST_CASE("Richardson derivative") {
  auto cube = [](double x) { return x * x * x; };
  CHECK(rel_close(richardson_derivative(cube, 1, 2.0).value, 12.0, 1e-12));
  CHECK(rel_close(richardson_derivative(cube, 2, 2.0).value, 12.0, 1e-10));
  auto logt = [](double x) { return std::log(x); };
  CHECK(rel_close(richardson_derivative(logt, 3, 0.5).value, 16.0, 1e-8));
  QuadConfig wide;
  wide.fd_step_factor = 0.5;
  CHECK_THROWS_AS(richardson_derivative(cube, 3, 1.0, wide), StencilError);
  wide.fd_step_factor = 0.4;
  CHECK_THROWS_AS(rl_derivative_quad(of(Power{1.0}), 2.5, 1.0, wide), StencilError);
}

TEST_CASE("configuration and convergence failures") {
  QuadConfig bad;
  bad.target_rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = QuadConfig{};
  bad.max_nodes = 8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = QuadConfig{};
  bad.richardson_levels = 0;
  CHECK_THROWS_AS(rl_integral_quad(of(Power{0.0}), 0.5, 1.0, bad), DomainError);
  QuadConfig short_ladder;
  short_ladder.max_nodes = 16;
  CHECK_THROWS_AS(rl_integral_quad(of(Power{0.0}), 0.5, 1.0, short_ladder), ConvergenceError);
  CHECK_THROWS_AS(rl_integral_quad(of(PowerLog{0.01}), 0.5, 1.0), ConvergenceError);
}

TEST_CASE("tightening the tolerance stays within the previous estimate") {
  QuadConfig loose;
  loose.target_rel_tol = 1e-6;
  QuadConfig tight = loose;
  tight.target_rel_tol = 0.5e-6;
  const FunctionFamily families[] = {Power{-0.5}, Power{0.5}, Exp{-1.0}, PowerLog{0.3}, PowerLog{2.0}};
  for (const auto& f : families) {
    for (double alpha : {0.1, 0.5, 0.9, 1.5}) {
      for (double t : {0.5, 2.0}) {
        const auto a = rl_integral_quad(of(f), alpha, t, loose);
        const auto b = rl_integral_quad(of(f), alpha, t, tight);
        CHECK(std::fabs(a.value - b.value) <= a.abs_err_estimate);
      }
    }
  }
}

TEST_CASE("error estimates are honest on the closed-form grid") {
  int total = 0;
  int honest = 0;
  const FunctionFamily families[] = {Power{-0.5}, Power{0.0}, Power{0.5}, Power{1.0}, Power{2.0}, Exp{-1.0},
                                     Exp{0.5},    Exp{1.0},   PowerLog{0.3}, PowerLog{1.0}, PowerLog{2.0}};
  for (const auto& f : families) {
    for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9, 1.5, 2.5}) {
      for (double t : {0.5, 1.0, 2.0, 5.0}) {
        for (auto kind : {OperatorKind::kRLIntegral, OperatorKind::kRLDerivative}) {
          const OperatorSpec op(kind, alpha);
          const double exact = closed_forms::evaluate(op, f, t).value;
          const auto r = evaluate(op, f, t);
          ++total;
          // Rounding in the closed form itself sets a floor.
          if (std::fabs(r.value - exact) <= 10.0 * r.abs_err_estimate + 8e-16 * std::fabs(exact)) ++honest;
        }
      }
    }
  }
  for (double delta : {0.2, 0.4, 0.5, 0.6, 0.8}) {
    for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9, 1.5, 2.5}) {
      for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const double exact = closed_forms::weyl_derivative_abspower(alpha, delta, t);
        const auto r = weyl_derivative_quad(delta, alpha, t);
        ++total;
        if (std::fabs(r.value - exact) <= 10.0 * r.abs_err_estimate + 8e-16 * std::fabs(exact)) ++honest;
      }
    }
  }
  MESSAGE("honest estimates: " << honest << " / " << total);
  CHECK(honest >= 0.95 * total);
}

TEST_CASE("deterministic and thread-safe") {
  const auto first = weyl_derivative_quad(0.4, 1.5, 2.0);
  CHECK(weyl_derivative_quad(0.4, 1.5, 2.0).value == first.value);
  std::vector<double> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < results.size(); ++i) {
      pool.emplace_back([&results, i] { results[i] = weyl_derivative_quad(0.4, 1.5, 2.0).value; });
    }
  }
  for (double r : results) CHECK(r == first.value);
}

TEST_CASE("dispatch") {
  const auto r = evaluate(OperatorSpec(OperatorKind::kRLDerivative, 1.0), Exp{1.0}, 1.0);
  CHECK(rel_close(r.value, std::exp(1.0), 1e-10));
  CHECK(rel_close(evaluate(OperatorSpec(OperatorKind::kRLIntegral, 0.5), AbsPower{0.5}, 1.0).value,
                  std::sqrt(specfun::kPi), 1e-10));
  CHECK_THROWS_AS(evaluate(OperatorSpec(OperatorKind::kWeylIntegral, 0.25), Power{1.0}, 1.0), DomainError);
}
