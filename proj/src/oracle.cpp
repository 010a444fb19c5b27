#include "fraccalc/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fraccalc/errors.hpp"
#include "fraccalc/gauss_jacobi.hpp"
#include "fraccalc/specfun.hpp"

namespace fraccalc::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kFirstRung = 16;
// Grading exponent for the tau -> 0 end: s = w^k / 2 turns s^p log s with
// p > -1 into w^(k(p+1)-1) log w, smooth enough for Gauss-Legendre down to
// p + 1 ~ 0.1.
constexpr double kGrading = 24.0;

struct Sample {
  double value;
  double magnitude;  // sum of |w_i h_i|, the scale of rounding noise
};

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_positive_t(double t, const char* what) {
  require(std::isfinite(t) && t > 0.0, std::string(what) + ": requires finite t > 0");
}

// \int_0^x (x - tau)^(order-1) f(tau) dtau at a fixed node count.
class RLKernelSum {
 public:
  RLKernelSum(const Integrand& f, double order, std::size_t n)
      : f_(&f), order_(order), right_(quadrature::gauss_jacobi(n, order - 1.0, 0.0)) {
    if (f.singular_at_zero) left_ = quadrature::gauss_legendre(n);
  }

  Sample operator()(double x) const {
    double sum = 0.0;
    double mag = 0.0;
    if (!f_->singular_at_zero) {
      // (1-s)^(order-1) is the rule's weight on the whole of [0, 1].
      for (std::size_t i = 0; i < right_.size(); ++i) {
        const double term = right_.weights[i] * f_->evaluator(x * right_.nodes[i]);
        sum += term;
        mag += std::fabs(term);
      }
    } else {
      // [0, 1/2] graded, s = w^k / 2.
      for (std::size_t i = 0; i < left_.size(); ++i) {
        const double w = left_.nodes[i];
        const double wk1 = std::pow(w, kGrading - 1.0);
        const double s = 0.5 * wk1 * w;
        const double term = left_.weights[i] * 0.5 * kGrading * wk1 *
                            std::pow(1.0 - s, order_ - 1.0) * f_->evaluator(x * s);
        sum += term;
        mag += std::fabs(term);
      }
      // [1/2, 1] with s = (1 + v)/2, so (1-s)^(order-1) ds = 2^-order (1-v)^(order-1) dv.
      const double scale = std::pow(2.0, -order_);
      for (std::size_t i = 0; i < right_.size(); ++i) {
        const double term =
            scale * right_.weights[i] * f_->evaluator(0.5 * x * (1.0 + right_.nodes[i]));
        sum += term;
        mag += std::fabs(term);
      }
    }
    const double xp = std::pow(x, order_);
    return {xp * sum, xp * mag};
  }

 private:
  const Integrand* f_;
  double order_;
  quadrature::JacobiRule right_;
  quadrature::JacobiRule left_;
};

// \int_0^inf h(u, x) du through u = x s/(1-s). The rule weight is
// s^b (1-s)^a; the caller declares a, b from the integrand's endpoint
// behaviour and h is divided by the weight numerically.
class HalfLineSum {
 public:
  using Kernel = std::function<double(double u, double x)>;

  HalfLineSum(Kernel h, double a, double b, std::size_t n)
      : h_(std::move(h)), rule_(quadrature::gauss_jacobi(n, a, b)) {}

  Sample operator()(double x) const {
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < rule_.size(); ++i) {
      const double s = rule_.nodes[i];
      const double c = rule_.complements[i];
      const double u = x * s / c;
      const double jacobian = x / (c * c);
      const double weight = std::pow(s, rule_.b) * std::pow(c, rule_.a);
      const double term = rule_.weights[i] * h_(u, x) * jacobian / weight;
      sum += term;
      mag += std::fabs(term);
    }
    return {sum, mag};
  }

 private:
  Kernel h_;
  quadrature::JacobiRule rule_;
};

template <class Sum>
struct Converged {
  Sum sum;
  Sample sample;
  double abs_err;
};

// Doubling ladder 16, 32, ... until two rungs agree.
template <class Make>
auto converge(Make make, double x, const QuadConfig& cfg) -> Converged<decltype(make(kFirstRung))> {
  auto coarse_sum = make(kFirstRung);
  Sample coarse = coarse_sum(x);
  for (auto n = 2 * kFirstRung; n <= static_cast<std::size_t>(cfg.max_nodes); n *= 2) {
    auto fine_sum = make(n);
    const Sample fine = fine_sum(x);
    const double diff = std::fabs(fine.value - coarse.value);
    const double noise = 64.0 * kEps * fine.magnitude;
    if (diff <= std::max(cfg.target_rel_tol * std::fabs(fine.value), noise)) {
      return {std::move(fine_sum), fine, std::max(diff, 8.0 * kEps * fine.magnitude)};
    }
    coarse = fine;
  }
  throw ConvergenceError("quadrature ladder reached max_nodes without agreement");
}

Integrand abspower_integrand(double delta) {
  return Integrand{[delta](double tau) { return std::pow(std::fabs(tau), -delta); }, true};
}

// Weyl tail \int_{-inf}^0 (x - tau)^(order-1) f(tau) dtau for f = |tau|^-delta,
// written over u = -tau. When order >= delta the integral diverges; the
// x-independent (1 + u)^(order-1) is then subtracted, which leaves every
// derivative in x unchanged. It is the limit T -> inf of cutting the tail at
// -T, whose neglected part contributes at most
// |(order-1)_m| T^(-alpha-delta) / (alpha+delta) to the m-th derivative.
HalfLineSum weyl_tail(double delta, double order, std::size_t n) {
  const Integrand f = abspower_integrand(delta);
  if (order < delta) {
    auto kernel = [f, order](double u, double x) {
      return std::pow(x + u, order - 1.0) * f.evaluator(-u);
    };
    return HalfLineSum(kernel, delta - order - 1.0, -delta, n);
  }
  auto kernel = [f, order](double u, double x) {
    const double diff = std::pow(1.0 + u, order - 1.0) *
                        std::expm1((order - 1.0) * std::log1p((x - 1.0) / (1.0 + u)));
    return diff * f.evaluator(-u);
  };
  return HalfLineSum(kernel, delta - order, -delta, n);
}

double factorial(unsigned m) {
  double f = 1.0;
  for (unsigned k = 2; k <= m; ++k) f *= k;
  return f;
}

}  // namespace

void QuadConfig::validate() const {
  require(std::isfinite(target_rel_tol) && target_rel_tol > 0.0, "QuadConfig: target_rel_tol must be > 0");
  require(max_nodes >= 16, "QuadConfig: max_nodes must be >= 16");
  require(std::isfinite(fd_step_factor) && fd_step_factor > 0.0, "QuadConfig: fd_step_factor must be > 0");
  require(richardson_levels >= 1, "QuadConfig: richardson_levels must be >= 1");
}

Integrand Integrand::from_family(const FunctionFamily& family) {
  make_family(family);
  return Integrand{[family](double tau) { return family_value(family, tau); }, fraccalc::singular_at_zero(family)};
}

EvalResult richardson_derivative(const std::function<double(double)>& g, unsigned m, double t,
                                 const QuadConfig& cfg) {
  cfg.validate();
  require(m >= 1, "richardson_derivative: order must be >= 1");
  require(std::isfinite(t), "richardson_derivative: t must be finite");
  const double h0 = cfg.fd_step_factor * std::fabs(t);
  if (t - m * h0 <= 0.0) {
    throw StencilError("richardson_derivative: stencil reaches t <= 0");
  }
  std::vector<double> binom(m + 1, 1.0);
  for (unsigned j = 1; j <= m; ++j) binom[j] = binom[j - 1] * (m - j + 1) / j;

  const auto levels = static_cast<std::size_t>(cfg.richardson_levels);
  std::vector<std::vector<double>> table(levels + 1, std::vector<double>(levels + 1, 0.0));
  double best = 0.0;
  double err = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= levels; ++i) {
    const double h = h0 / std::pow(2.0, static_cast<double>(i));
    double sum = 0.0;
    double mag = 0.0;
    for (unsigned j = 0; j <= m; ++j) {
      const double x = t + (0.5 * m - j) * h;
      const double c = ((j % 2 == 0) ? 1.0 : -1.0) * binom[j];
      const double gx = g(x);
      sum += c * gx;
      mag += std::fabs(c * gx);
    }
    const double hm = std::pow(h, static_cast<double>(m));
    table[i][0] = sum / hm;
    double factor = 1.0;
    for (std::size_t j = 1; j <= i; ++j) {
      factor *= 4.0;
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    if (i == 0) continue;
    // Shrinking h trades truncation for rounding noise; keep the diagonal
    // entry with the smallest combined estimate.
    const double est = std::fabs(table[i][i] - table[i - 1][i - 1]) + 8.0 * kEps * mag / hm;
    if (est < err) {
      err = est;
      best = table[i][i];
    }
  }
  return EvalResult{best, Method::kOracle, err};
}

EvalResult rl_integral_quad(const Integrand& f, double alpha, double t, const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(alpha) && alpha > 0.0, "rl_integral_quad: requires alpha > 0");
  require_positive_t(t, "rl_integral_quad");
  auto result = converge([&](std::size_t n) { return RLKernelSum(f, alpha, n); }, t, cfg);
  const double g = specfun::gamma(alpha);
  return EvalResult{result.sample.value / g, Method::kOracle, result.abs_err / g};
}

EvalResult rl_derivative_quad(const Integrand& f, double alpha, double t, const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(alpha) && alpha > 0.0, "rl_derivative_quad: requires alpha > 0");
  require(!specfun::is_integer(alpha), "rl_derivative_quad: alpha must not be an integer");
  require_positive_t(t, "rl_derivative_quad");
  const OperatorSpec op(OperatorKind::kRLDerivative, alpha);
  const auto m = static_cast<unsigned>(op.m());
  const double order = m - alpha;
  const double g_order = specfun::gamma(order);
  auto conv = converge([&](std::size_t n) { return RLKernelSum(f, order, n); }, t, cfg);
  const RLKernelSum& sum = conv.sum;
  auto g = [&](double x) { return sum(x).value / g_order; };
  EvalResult d = richardson_derivative(g, m, t, cfg);
  d.abs_err_estimate += conv.abs_err / g_order * factorial(m + 1) / std::pow(t, m);
  return d;
}

EvalResult weyl_integral_quad(double delta, double alpha, double t, const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(delta) && delta > 0.0 && delta < 1.0, "weyl_integral_quad: requires 0 < delta < 1");
  require(std::isfinite(alpha) && alpha > 0.0 && alpha < delta,
          "weyl_integral_quad: requires 0 < alpha < delta");
  require_positive_t(t, "weyl_integral_quad");
  const Integrand f = abspower_integrand(delta);
  // -inf..0 and 0..t pieces.
  auto near = converge([&](std::size_t n) { return RLKernelSum(f, alpha, n); }, t, cfg);
  auto tail = converge([&](std::size_t n) { return weyl_tail(delta, alpha, n); }, t, cfg);
  const double g = specfun::gamma(alpha);
  return EvalResult{(near.sample.value + tail.sample.value) / g, Method::kOracle,
                    (near.abs_err + tail.abs_err) / g};
}

EvalResult weyl_derivative_quad(double delta, double alpha, double t, const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(delta) && delta > 0.0 && delta < 1.0,
          "weyl_derivative_quad: requires 0 < delta < 1");
  require(std::isfinite(alpha) && alpha > 0.0, "weyl_derivative_quad: requires alpha > 0");
  require(!specfun::is_integer(alpha), "weyl_derivative_quad: alpha must not be an integer");
  require_positive_t(t, "weyl_derivative_quad");
  const OperatorSpec op(OperatorKind::kWeylDerivative, alpha);
  const auto m = static_cast<unsigned>(op.m());
  const double order = m - alpha;
  const Integrand f = abspower_integrand(delta);
  auto near = converge([&](std::size_t n) { return RLKernelSum(f, order, n); }, t, cfg);
  auto tail = converge([&](std::size_t n) { return weyl_tail(delta, order, n); }, t, cfg);
  const double g_order = specfun::gamma(order);
  const RLKernelSum& near_sum = near.sum;
  const HalfLineSum& tail_sum = tail.sum;
  auto g = [&](double x) { return (near_sum(x).value + tail_sum(x).value) / g_order; };
  EvalResult d = richardson_derivative(g, m, t, cfg);
  d.abs_err_estimate += (near.abs_err + tail.abs_err) / g_order * factorial(m + 1) / std::pow(t, m);
  return d;
}

EvalResult lemma1_quad(double a_exp, double beta_exp, double t, const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(a_exp) && std::isfinite(beta_exp), "lemma1_quad: exponents must be finite");
  require(a_exp < -beta_exp - 1.0 && -beta_exp - 1.0 < 0.0, "lemma1_quad: requires a < -beta - 1 < 0");
  require_positive_t(t, "lemma1_quad");
  auto kernel = [a_exp, beta_exp](double u, double x) {
    return std::pow(x + u, a_exp) * std::pow(u, beta_exp);
  };
  auto conv = converge(
      [&](std::size_t n) { return HalfLineSum(kernel, -a_exp - beta_exp - 2.0, beta_exp, n); }, t, cfg);
  return EvalResult{conv.sample.value, Method::kOracle, conv.abs_err};
}

EvalResult evaluate(const OperatorSpec& op, const FunctionFamily& family, double t, const QuadConfig& cfg) {
  make_family(family);
  const double alpha = op.alpha();
  switch (op.kind()) {
    case OperatorKind::kRLIntegral:
      return rl_integral_quad(Integrand::from_family(family), alpha, t, cfg);
    case OperatorKind::kRLDerivative: {
      const Integrand f = Integrand::from_family(family);
      if (op.integer_order()) {
        require_positive_t(t, "oracle::evaluate");
        return richardson_derivative(f.evaluator, static_cast<unsigned>(alpha), t, cfg);
      }
      return rl_derivative_quad(f, alpha, t, cfg);
    }
    case OperatorKind::kWeylIntegral: {
      const auto* a = std::get_if<AbsPower>(&family);
      require(a != nullptr, "weyl-int: only the abspower family is supported");
      return weyl_integral_quad(a->delta, alpha, t, cfg);
    }
    case OperatorKind::kWeylDerivative: {
      const auto* a = std::get_if<AbsPower>(&family);
      require(a != nullptr, "weyl-der: only the abspower family is supported");
      return weyl_derivative_quad(a->delta, alpha, t, cfg);
    }
  }
  throw DomainError("oracle::evaluate: unknown operator");
}

}  // namespace fraccalc::oracle
