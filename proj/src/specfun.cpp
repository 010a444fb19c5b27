#include "fraccalc/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fraccalc/errors.hpp"

namespace fraccalc::specfun {

namespace {

constexpr double kLanczosG = 6.024680040776729583740234375;

// Lanczos approximation with N = 13, g as above; accurate to double
// precision. Coefficients of the rational form num(z)/den(z), lowest degree
// first, where den(z) = z (z+1) ... (z+11).
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626};
constexpr std::array<double, 13> kLanczosDen = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,    66.0,       1.0};

// Ratio of two degree-12 polynomials; switches to 1/z for z > 1 so that
// neither numerator nor denominator overflows.
double lanczos_sum(double z) {
  double num = 0.0;
  double den = 0.0;
  if (z <= 1.0) {
    for (int i = 12; i >= 0; --i) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
  } else {
    const double w = 1.0 / z;
    for (int i = 0; i <= 12; ++i) {
      num = num * w + kLanczosNum[i];
      den = den * w + kLanczosDen[i];
    }
  }
  return num / den;
}

// zeta(k) for integer k >= 2: partial sum plus an Euler-Maclaurin tail.
double zeta_integer(int k) {
  constexpr int kN = 16;
  double sum = 0.0;
  for (int n = kN - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -k);
  const double nk = std::pow(static_cast<double>(kN), -k);
  sum += kN * nk / (k - 1) + 0.5 * nk;
  // B_{2j} / (2j)!
  constexpr std::array<double, 6> kBernoulliOverFactorial = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0};
  double rising = k;  // (k)_{2j-1}
  double npow = nk / kN;
  for (int j = 1; j <= 6; ++j) {
    sum += kBernoulliOverFactorial[j - 1] * rising * npow;
    rising *= static_cast<double>(k + 2 * j - 1) * (k + 2 * j);
    npow /= static_cast<double>(kN) * kN;
  }
  return sum;
}

constexpr int kZetaTerms = 32;

const std::array<double, kZetaTerms + 1>& zeta_table() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> t{};
    for (int k = 2; k <= kZetaTerms; ++k) t[k] = zeta_integer(k);
    return t;
  }();
  return table;
}

// ln Gamma(1 + x) for |x| <= 1/4 from the Taylor series about 1.
double log_gamma1p_series(double x) {
  const auto& zeta = zeta_table();
  double sum = 0.0;
  double xk = -x;  // (-x)^k
  for (int k = 2; k <= kZetaTerms; ++k) {
    xk *= -x;
    sum += zeta[k] * xk / k;
  }
  return -kEulerGamma * x + sum;
}

double lanczos_log_gamma(double z) {
  const double zgh = z + kLanczosG - 0.5;
  return std::log(lanczos_sum(z)) + (z - 0.5) * std::log(zgh) - zgh;
}

// ln|Gamma(z)| and the sign of Gamma(z) for any non-pole real z.
double log_abs_gamma(double z, int* sign) {
  if (z > 0.0) {
    *sign = 1;
    return log_gamma(z);
  }
  const double s = sin_pi(z);
  *sign = s < 0.0 ? -1 : 1;
  return std::log(kPi) - std::log(std::fabs(s)) - log_gamma(1.0 - z);
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument is not finite");
  }
}

}  // namespace

RealArg::RealArg(double value) : value_(value) {
  if (!std::isfinite(value)) throw DomainError("RealArg: value is not finite");
}

MLParams MLParams::make(double mu, double nu) {
  require_finite(mu, "MLParams");
  require_finite(nu, "MLParams");
  if (!(mu > 0.0)) throw DomainError("MLParams: mu must be positive");
  return MLParams{mu, nu};
}

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

bool is_nonpositive_integer(double x) { return x <= 0.0 && is_integer(x); }

double sin_pi(double x) {
  require_finite(x, "sin_pi");
  // Reduce to r in [-1, 1] with sin(pi x) = sin(pi r).
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  require_finite(x, "cos_pi");
  return sin_pi(x + 0.5);
}

double gamma(double z) {
  require_finite(z, "gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at z = " + std::to_string(z));
  }
  if (z < 0.0) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const double g1 = 1.0 - z;
    if (g1 > 171.0) {
      int sign = 1;
      const double lg = log_abs_gamma(z, &sign);
      return sign * std::exp(lg);
    }
    return kPi / (sin_pi(z) * gamma(g1));
  }
  if (z > 171.7) throw OverflowError("gamma: overflow for z = " + std::to_string(z));
  if (is_integer(z) && z <= 30.0) {
    double f = 1.0;
    for (double k = 2.0; k < z; k += 1.0) f *= k;
    return f;
  }
  const double zgh = z + kLanczosG - 0.5;
  double result = lanczos_sum(z);
  if (z * std::log(zgh) > 700.0) {
    const double hp = std::pow(zgh, z / 2.0 - 0.25);
    result *= hp / std::exp(zgh);
    result *= hp;
  } else {
    result *= std::pow(zgh, z - 0.5) / std::exp(zgh);
  }
  if (!std::isfinite(result)) {
    throw OverflowError("gamma: overflow for z = " + std::to_string(z));
  }
  return result;
}

double log_gamma(double z) {
  require_finite(z, "log_gamma");
  if (!(z > 0.0)) throw DomainError("log_gamma: requires z > 0");
  if (std::fabs(z - 1.0) <= 0.25) return log_gamma1p_series(z - 1.0);
  if (std::fabs(z - 2.0) <= 0.25) {
    const double x = z - 2.0;
    return log_gamma1p_series(x) + std::log1p(x);
  }
  if (z < 0.75) return log_gamma(z + 1.0) - std::log(z);
  return lanczos_log_gamma(z);
}

double rgamma(double z) {
  require_finite(z, "rgamma");
  if (is_nonpositive_integer(z)) return 0.0;
  if (z > 171.0) return std::exp(-log_gamma(z));
  return 1.0 / gamma(z);
}

double gamma_ratio(double p, double q) {
  require_finite(p, "gamma_ratio");
  require_finite(q, "gamma_ratio");
  const bool p_pole = is_nonpositive_integer(p);
  const bool q_pole = is_nonpositive_integer(q);
  if (p_pole && q_pole) {
    // Gamma(-n + e) / Gamma(-k + e) -> (-1)^(n-k) k! / n!
    const double n = -p;
    const double k = -q;
    const double mag = std::exp(log_gamma(k + 1.0) - log_gamma(n + 1.0));
    return std::fmod(n - k, 2.0) == 0.0 ? mag : -mag;
  }
  if (q_pole) return 0.0;
  if (p_pole) throw PoleError("gamma_ratio: numerator at a pole");
  if (std::fabs(p) <= 160.0 && std::fabs(q) <= 160.0) {
    return gamma(p) / gamma(q);
  }
  int sp = 1;
  int sq = 1;
  const double lp = log_abs_gamma(p, &sp);
  const double lq = log_abs_gamma(q, &sq);
  const double result = sp * sq * std::exp(lp - lq);
  if (!std::isfinite(result)) throw OverflowError("gamma_ratio: overflow");
  return result;
}

double digamma(double z) {
  require_finite(z, "digamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("digamma: pole at z = " + std::to_string(z));
  }
  if (z < 0.0) {
    // psi(1 - z) - psi(z) = pi cot(pi z)
    return digamma(1.0 - z) - kPi * cos_pi(z) / sin_pi(z);
  }
  double shift = 0.0;
  while (z < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const double w = 1.0 / (z * z);
  // Asymptotic series in 1/z^2 with Bernoulli-number coefficients.
  const double tail =
      w * (1.0 / 12 -
           w * (1.0 / 120 -
                w * (1.0 / 252 -
                     w * (1.0 / 240 -
                          w * (1.0 / 132 - w * (691.0 / 32760 - w / 12.0))))));
  return shift + std::log(z) - 0.5 / z - tail;
}

double pochhammer(double x, unsigned n) {
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= x + k;
  return p;
}

double beta(double a, double b) {
  require_finite(a, "beta");
  require_finite(b, "beta");
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: requires a > 0 and b > 0");
  if (a + b < 160.0) return gamma(a) * gamma(b) / gamma(a + b);
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double lower_incomplete_gamma(double alpha, double z) {
  require_finite(alpha, "lower_incomplete_gamma");
  if (std::isnan(z)) throw DomainError("lower_incomplete_gamma: z is NaN");
  if (!(alpha > 0.0)) throw DomainError("lower_incomplete_gamma: requires alpha > 0");
  if (z < 0.0) throw DomainError("lower_incomplete_gamma: requires z >= 0");
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return gamma(alpha);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double log_prefactor = alpha * std::log(z) - z;
  if (z < alpha + 1.0) {
    double ap = alpha;
    double del = 1.0 / alpha;
    double sum = del;
    for (int n = 0; n < 10000; ++n) {
      ap += 1.0;
      del *= z / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * kEps) {
        return sum * std::exp(log_prefactor);
      }
    }
    throw ConvergenceError("lower_incomplete_gamma: series did not converge");
  }
  // Upper function Gamma(alpha, z) by the modified Lentz continued fraction.
  constexpr double kTiny = 1e-300;
  double b = z + 1.0 - alpha;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - alpha);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      const double upper = std::exp(log_prefactor) * h;
      const double result = gamma(alpha) - upper;
      return result;
    }
  }
  throw ConvergenceError("lower_incomplete_gamma: continued fraction did not converge");
}

namespace {

// E_{1,nu}(z), z < 0, through Kummer's transformation
//   E_{1,nu}(z) = e^z / Gamma(nu) * sum_k (nu-1)/(nu-1+k) (-z)^k / k!,
// whose terms past k = 0 share one sign. nu <= 0 is lifted with
// E_{1,nu}(z) = 1/Gamma(nu) + z E_{1,nu+1}(z).
double ml_exp_negative(double nu, double z, const MLConfig& cfg) {
  if (nu <= 0.0) return rgamma(nu) + z * ml_exp_negative(nu + 1.0, z, cfg);
  const double x = -z;
  double sum = 1.0;
  double mag = 1.0;
  double power = 1.0;  // x^k / k!
  int quiet = 0;
  for (int k = 1; k < cfg.max_terms; ++k) {
    power *= x / k;
    const double term = (nu - 1.0) / (nu - 1.0 + k) * power;
    sum += term;
    mag += std::fabs(term);
    if (std::fabs(term) <= cfg.rel_tol * mag) {
      if (++quiet >= cfg.quiet_terms) return std::exp(z) * sum * rgamma(nu);
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("mittag_leffler: term budget exhausted");
}

}  // namespace

double mittag_leffler(double mu, double nu, double z, const MLConfig& cfg) {
  const MLParams p = MLParams::make(mu, nu);
  require_finite(z, "mittag_leffler");
  if (std::fabs(z) > cfg.z_max) {
    throw DomainError("mittag_leffler: |z| exceeds the admitted maximum");
  }
  if (z == 0.0) return rgamma(p.nu);
  if (p.mu == 1.0 && z < 0.0) return ml_exp_negative(p.nu, z, cfg);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double log_abs_z = std::log(std::fabs(z));
  // Neumaier compensated sum.
  double sum = 0.0;
  double comp = 0.0;
  double largest = 0.0;
  int quiet = 0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    const double arg = p.mu * k + p.nu;
    double term;
    if (arg < 160.0 && k * log_abs_z < 700.0) {
      term = std::pow(z, k) * rgamma(arg);
    } else {
      const double mag = std::exp(k * log_abs_z - log_gamma(arg));
      term = (z < 0.0 && (k % 2 == 1)) ? -mag : mag;
    }
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    largest = std::max(largest, std::fabs(term));
    const double total = sum + comp;
    if (arg > 0.0 && std::fabs(term) <= cfg.rel_tol * std::fabs(total)) {
      if (++quiet >= cfg.quiet_terms) {
        if (!(largest * kEps <= cfg.accuracy * std::fabs(total))) {
          throw ConvergenceError("mittag_leffler: cancellation in the alternating series exceeds the accuracy target");
        }
        return total;
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("mittag_leffler: term budget exhausted");
}

}  // namespace fraccalc::specfun
