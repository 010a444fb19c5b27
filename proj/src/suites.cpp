#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fraccalc/closed_forms.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/format.hpp"
#include "fraccalc/oracle.hpp"
#include "fraccalc/specfun.hpp"
#include "fraccalc/verify.hpp"

namespace fraccalc::verify {

namespace sf = specfun;
namespace cf = closed_forms;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Measured {
  double lhs;
  double rhs;
  std::string note;
  std::optional<bool> passed;  // replaces the numeric rule when set
};

struct Task {
  std::string id;
  Inputs inputs;
  double tol;
  double tol_abs;
  std::function<Measured()> run;
};

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const RunOptions& options) : options_(options) {}

  const RunOptions& options() const { return options_; }
  const FormulaSet& formulas() const { return options_.formulas; }
  const Tolerances& tol() const { return options_.tolerances; }

  void add(std::string id, Inputs inputs, double tol, double tol_abs, std::function<Measured()> run) {
    tasks_.push_back(Task{std::move(id), std::move(inputs), tol, tol_abs, std::move(run)});
  }
  // Runs after every task of the suite has finished.
  void add_final(std::string id, Inputs inputs, double tol, double tol_abs, std::function<Measured()> run) {
    finals_.push_back(Task{std::move(id), std::move(inputs), tol, tol_abs, std::move(run)});
  }
  void skip() { ++skipped_; }

  std::vector<Task>& tasks() { return tasks_; }
  std::vector<Task>& finals() { return finals_; }
  int skipped() const { return skipped_; }

 private:
  const RunOptions& options_;
  std::vector<Task> tasks_;
  std::vector<Task> finals_;
  int skipped_ = 0;
};

Measured compare(double lhs, double rhs) { return Measured{lhs, rhs, {}, std::nullopt}; }

bool near_integer(double x) { return std::fabs(x - std::round(x)) < 1e-12; }

// ---------------------------------------------------------------------------
// specfun
// ---------------------------------------------------------------------------

void build_specfun(SuiteBuilder& b) {
  for (int i = 0; i < 1000; ++i) {
    const double z = (i + 0.5) / 1000.0;
    b.add("reflection", {{"z", z}}, 1e-12, 0.0, [z] {
      return compare(sf::gamma(z) * sf::gamma(1.0 - z) * sf::sin_pi(z) / sf::kPi, 1.0);
    });
  }
  for (int i = 0; i <= 400; ++i) {
    const double z = -10.0 + 0.05 * i;
    if (near_integer(z) && z < 0.5) {
      b.skip();
      continue;
    }
    b.add("gamma-recurrence", {{"z", z}}, 1e-12, 0.0,
          [z] { return compare(sf::gamma(z + 1.0), z * sf::gamma(z)); });
  }
  for (int i = 0; i <= 400; ++i) {
    const double z = -10.0 + 0.05 * i;
    if (near_integer(z) && z < 0.5) {
      b.skip();
      continue;
    }
    b.add("digamma-recurrence", {{"z", z}}, 1e-12, 1e-12,
          [z] { return compare(sf::digamma(z + 1.0) - sf::digamma(z), 1.0 / z); });
  }
  for (int i = 1; i <= 600; ++i) {
    const double z = 0.05 * i;
    b.add("log-gamma-consistency", {{"z", z}}, 1e-13, 1e-15,
          [z] { return compare(sf::log_gamma(z), std::log(sf::gamma(z))); });
  }
  for (double alpha : {0.3, 0.7, 1.5}) {
    for (int i = 1; i <= 80; ++i) {
      const double z = 0.25 * i;
      b.add("incgamma-mittag-leffler", {{"alpha", alpha}, {"z", z}}, 1e-9, 0.0, [alpha, z] {
        const double rhs = std::pow(z, alpha) * sf::gamma(alpha) * std::exp(-z) *
                           sf::mittag_leffler(1.0, 1.0 + alpha, z);
        return compare(sf::lower_incomplete_gamma(alpha, z), rhs);
      });
    }
    b.add("incgamma-monotone", {{"alpha", alpha}}, 0.0, 0.0, [alpha] {
      int violations = 0;
      double prev = 0.0;
      for (int i = 1; i <= 400; ++i) {
        const double v = sf::lower_incomplete_gamma(alpha, 0.05 * i);
        if (v < prev) ++violations;
        prev = v;
      }
      return Measured{static_cast<double>(violations), 0.0, "violations over 400 points", std::nullopt};
    });
  }
  struct Known {
    const char* id;
    double value;
    double reference;
  };
  const Known known[] = {
      {"gamma(0.5)", sf::gamma(0.5), 1.7724538509055160273},
      {"gamma(-0.5)", sf::gamma(-0.5), -3.5449077018110320546},
      {"gamma(5)", sf::gamma(5.0), 24.0},
      {"log_gamma(0.5)", sf::log_gamma(0.5), 0.57236494292470008707},
      {"log_gamma(0.1)", sf::log_gamma(0.1), 2.2527126517342059599},
      {"digamma(1)", sf::digamma(1.0), -sf::kEulerGamma},
      {"lower_incomplete_gamma(0.5,1)", sf::lower_incomplete_gamma(0.5, 1.0), 1.4936482656248540508},
      {"mittag_leffler(1,1.5,1)", sf::mittag_leffler(1.0, 1.5, 1.0), 2.2906982523032382},
      {"mittag_leffler(1,1,1)", sf::mittag_leffler(1.0, 1.0, 1.0), 2.7182818284590452354},
  };
  for (const auto& k : known) {
    const double v = k.value;
    const double ref = k.reference;
    b.add(std::string("known/") + k.id, {}, 1e-14, 0.0, [v, ref] { return compare(v, ref); });
  }
}

// ---------------------------------------------------------------------------
// Riemann-Liouville suites
// ---------------------------------------------------------------------------

const double kZeroOrder = 1e-8;
const std::vector<double> kZeroOrderTs{0.5, 0.75, 1.25, 2.0};

// Closed form vs oracle for one family on the whole alpha x t grid.
void add_rl_oracle_checks(SuiteBuilder& b, const FunctionFamily& family, const std::string& key,
                          const FormulaSet::Fn3& integral, const FormulaSet::Fn3& derivative) {
  const auto& o = b.options();
  const double p = family_parameter(family);
  for (double alpha : o.grid.alphas) {
    for (double t : o.grid.ts) {
      const Inputs in{{key, p}, {"alpha", alpha}, {"t", t}};
      b.add("int-oracle", in, b.tol().integral_oracle, b.tol().abs_floor, [&o, &integral, family, p, alpha, t] {
        const auto f = oracle::Integrand::from_family(family);
        return compare(integral(alpha, p, t), oracle::rl_integral_quad(f, alpha, t, o.quad).value);
      });
      if (sf::is_integer(alpha)) {
        b.skip();
        continue;
      }
      if (std::holds_alternative<PowerLog>(family) && sf::is_nonpositive_integer(p - alpha)) {
        b.skip();
        continue;
      }
      b.add("der-oracle", in, b.tol().derivative_oracle, b.tol().abs_floor, [&o, &derivative, family, p, alpha, t] {
        const auto f = oracle::Integrand::from_family(family);
        return compare(derivative(alpha, p, t), oracle::rl_derivative_quad(f, alpha, t, o.quad).value);
      });
    }
  }
}

void add_zero_order_checks(SuiteBuilder& b, const FunctionFamily& family, const std::string& key,
                           const FormulaSet::Fn3& integral) {
  const double p = family_parameter(family);
  for (double t : kZeroOrderTs) {
    b.add("zero-order", {{key, p}, {"alpha", kZeroOrder}, {"t", t}}, 1e-6, b.tol().abs_floor,
          [&integral, family, p, t] { return compare(integral(kZeroOrder, p, t), family_value(family, t)); });
  }
}

void build_rl_power(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  for (double g : o.grid.gammas) {
    add_rl_oracle_checks(b, Power{g}, "gamma", fs.rl_integral_power, fs.rl_derivative_power);
  }
  for (double g : o.grid.gammas) {
    for (double t : o.grid.ts) {
      b.add("alpha-one", {{"gamma", g}, {"t", t}}, 1e-14, 0.0,
            [&fs, g, t] { return compare(fs.rl_integral_power(1.0, g, t), std::pow(t, g + 1.0) / (g + 1.0)); });
    }
  }
  // I^beta I^alpha t^gamma = I^(alpha+beta) t^gamma, the inner result being
  // c t^(gamma+alpha) with c = I^alpha t^gamma at t = 1.
  for (double g : o.grid.gammas) {
    for (double alpha : o.grid.alphas) {
      for (double beta : {0.25, 0.5, 1.5}) {
        for (double t : o.grid.ts) {
          b.add("semigroup", {{"gamma", g}, {"alpha", alpha}, {"beta", beta}, {"t", t}}, 1e-12, 0.0,
                [&fs, g, alpha, beta, t] {
                  const double twice = fs.rl_integral_power(alpha, g, 1.0) * fs.rl_integral_power(beta, g + alpha, t);
                  return compare(twice, fs.rl_integral_power(alpha + beta, g, t));
                });
        }
      }
    }
  }
  for (double g : o.grid.gammas) add_zero_order_checks(b, Power{g}, "gamma", fs.rl_integral_power);
}

void build_rl_exp(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  for (double l : o.grid.lambdas) {
    add_rl_oracle_checks(b, Exp{l}, "lambda", fs.rl_integral_exp, fs.rl_derivative_exp);
  }
  for (double l : o.grid.lambdas) {
    for (double t : o.grid.ts) {
      b.add("alpha-one", {{"lambda", l}, {"t", t}}, 1e-12, 0.0,
            [&fs, l, t] { return compare(fs.rl_integral_exp(1.0, l, t), std::expm1(l * t) / l); });
    }
  }
  for (double l : o.grid.lambdas) add_zero_order_checks(b, Exp{l}, "lambda", fs.rl_integral_exp);
}

void build_rl_log(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  for (double nu : o.grid.nus) {
    add_rl_oracle_checks(b, PowerLog{nu}, "nu", fs.rl_integral_powerlog, fs.rl_derivative_powerlog);
  }
  for (double nu : o.grid.nus) {
    for (double t : o.grid.ts) {
      b.add("alpha-one", {{"nu", nu}, {"t", t}}, 1e-12, b.tol().abs_floor, [&fs, nu, t] {
        return compare(fs.rl_integral_powerlog(1.0, nu, t), std::pow(t, nu) * (std::log(t) - 1.0 / nu) / nu);
      });
    }
  }
  for (double nu : o.grid.nus) add_zero_order_checks(b, PowerLog{nu}, "nu", fs.rl_integral_powerlog);
}

// ---------------------------------------------------------------------------
// Weyl
// ---------------------------------------------------------------------------

void build_weyl(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  for (double delta : o.grid.deltas) {
    for (double alpha : o.grid.alphas) {
      for (double t : o.grid.ts) {
        const Inputs in{{"delta", delta}, {"alpha", alpha}, {"t", t}};
        if (alpha < delta) {
          b.add("int-oracle", in, b.tol().integral_oracle, b.tol().abs_floor, [&o, &fs, delta, alpha, t] {
            return compare(fs.weyl_integral_abspower(alpha, delta, t),
                           oracle::weyl_integral_quad(delta, alpha, t, o.quad).value);
          });
        } else {
          b.skip();
        }
        if (sf::is_integer(alpha)) {
          b.skip();
          continue;
        }
        b.add("der-oracle", in, b.tol().derivative_oracle, b.tol().abs_floor, [&o, &fs, delta, alpha, t] {
          return compare(fs.weyl_derivative_abspower(alpha, delta, t),
                         oracle::weyl_derivative_quad(delta, alpha, t, o.quad).value);
        });
      }
    }
  }
  for (double delta : o.grid.deltas) {
    for (double alpha : o.grid.alphas) {
      if (!(alpha < delta)) {
        b.skip();
        continue;
      }
      b.add("int-homogeneity", {{"delta", delta}, {"alpha", alpha}}, 1e-8, 0.0, [&o, delta, alpha] {
        const double v1 = oracle::weyl_integral_quad(delta, alpha, 1.0, o.quad).value;
        const double v2 = oracle::weyl_integral_quad(delta, alpha, 2.0, o.quad).value;
        return compare(v2 / v1, std::pow(2.0, alpha - delta));
      });
    }
  }
  // cos(pi delta/2 + pi alpha) vanishes on delta/2 + alpha = k + 1/2.
  for (double delta : o.grid.deltas) {
    for (double alpha : o.grid.alphas) {
      if (!near_integer(0.5 * delta + alpha - 0.5)) continue;
      for (double t : o.grid.ts) {
        b.add("cancellation-locus", {{"delta", delta}, {"alpha", alpha}, {"t", t}}, 0.0, 0.0,
              [&fs, delta, alpha, t] { return compare(fs.weyl_derivative_abspower(alpha, delta, t), 0.0); });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// D^alpha = I^(-alpha)
// ---------------------------------------------------------------------------

void build_d_equals_i_neg(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  constexpr double kTol = 1e-12;
  for (double alpha : o.grid.alphas) {
    for (double t : o.grid.ts) {
      for (double g : o.grid.gammas) {
        b.add("power", {{"gamma", g}, {"alpha", alpha}, {"t", t}}, kTol, 0.0, [&fs, g, alpha, t] {
          return compare(fs.rl_derivative_power(alpha, g, t), cf::power_integral_expression(-alpha, g, t));
        });
      }
      for (double l : o.grid.lambdas) {
        if (sf::is_integer(alpha)) {
          b.skip();
          continue;
        }
        b.add("exp", {{"lambda", l}, {"alpha", alpha}, {"t", t}}, kTol, 0.0, [&fs, l, alpha, t] {
          return compare(fs.rl_derivative_exp(alpha, l, t), cf::exp_integral_expression(-alpha, l, t));
        });
      }
      for (double nu : o.grid.nus) {
        if (sf::is_integer(alpha) || sf::is_nonpositive_integer(nu - alpha)) {
          b.skip();
          continue;
        }
        b.add("powerlog", {{"nu", nu}, {"alpha", alpha}, {"t", t}}, kTol, 0.0, [&fs, nu, alpha, t] {
          return compare(fs.rl_derivative_powerlog(alpha, nu, t), cf::powerlog_integral_expression(-alpha, nu, t));
        });
      }
      for (double delta : o.grid.deltas) {
        if (sf::is_integer(alpha)) {
          b.skip();
          continue;
        }
        b.add("abspower", {{"delta", delta}, {"alpha", alpha}, {"t", t}}, kTol, 0.0, [&fs, delta, alpha, t] {
          return compare(fs.weyl_derivative_abspower(alpha, delta, t),
                         cf::abspower_weyl_integral_expression(-alpha, delta, t));
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Literature falsification
// ---------------------------------------------------------------------------

void build_literature_falsification(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  std::vector<std::array<double, 3>> points;
  for (double delta : o.grid.deltas) {
    for (double alpha : o.grid.alphas) {
      if (alpha >= 1.0) {
        b.skip();
        continue;
      }
      for (double t : o.grid.falsification_ts) points.push_back({delta, alpha, t});
    }
  }
  auto verdicts = std::make_shared<std::vector<Verdict>>(points.size(), Verdict::kInconclusive);
  const double tol = b.tol().override_rel.value_or(b.tol().derivative_oracle);
  const double tol_abs = b.tol().abs_floor;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [delta, alpha, t] = points[i];
    b.add("verdict", {{"delta", delta}, {"alpha", alpha}, {"t", t}}, tol, tol_abs,
          [&o, &fs, verdicts, i, delta = delta, alpha = alpha, t = t, tol, tol_abs] {
            const auto m = falsification_margin(delta, alpha, t, o.quad, fs);
            (*verdicts)[i] = m.verdict;
            const auto numeric = make_record("", {}, m.corrected, m.oracle, tol, tol_abs);
            std::string note = "verdict=" + std::string(verdict_name(m.verdict)) +
                               " literature=" + format_sig17(m.literature) + " oracle_err=" + format_sig17(m.oracle_err);
            return Measured{m.corrected, m.oracle, std::move(note),
                            numeric.passed && m.verdict != Verdict::kLiterature};
          });
  }
  const auto n_points = static_cast<double>(points.size());
  b.add_final("corrected-fraction", {{"points", n_points}}, 0.0, 0.05, [verdicts, n_points] {
    int corrected = 0;
    int literature = 0;
    for (Verdict v : *verdicts) {
      if (v == Verdict::kCorrected) ++corrected;
      if (v == Verdict::kLiterature) ++literature;
    }
    const double fraction = n_points > 0 ? corrected / n_points : 1.0;
    std::string note = "corrected=" + std::to_string(corrected) + " literature=" + std::to_string(literature) +
                       " inconclusive=" + std::to_string(static_cast<int>(n_points) - corrected - literature);
    return Measured{fraction, 1.0, std::move(note), fraction >= 0.95 && literature == 0};
  });
}

// ---------------------------------------------------------------------------
// Lemmas
// ---------------------------------------------------------------------------

void build_lemmas(SuiteBuilder& b) {
  const auto& o = b.options();
  const auto& fs = b.formulas();
  for (double a : {-1.2, -1.5, -1.7, -2.0, -2.5, -3.0}) {
    for (double beta : {-0.5, -0.3, 0.0, 0.5, 1.0}) {
      if (!(a < -beta - 1.0 && -beta - 1.0 < 0.0)) {
        b.skip();
        continue;
      }
      for (double t : {0.5, 1.0, 2.0}) {
        b.add("lemma1-quad", {{"a", a}, {"beta", beta}, {"t", t}}, 1e-8, 0.0, [&o, &fs, a, beta, t] {
          return compare(fs.lemma1_integral(a, beta, t), oracle::lemma1_quad(a, beta, t, o.quad).value);
        });
      }
    }
  }
  // \int_0^1 log t = -1, \int_0^1 t log t = -1/4, and -2 pi log 2 at (1/2, 1/2).
  const std::array<std::array<double, 3>, 3> exact{
      {{1.0, 1.0, -1.0}, {2.0, 1.0, -0.25}, {0.5, 0.5, -2.0 * sf::kPi * std::log(2.0)}}};
  for (const auto& [a, bb, value] : exact) {
    b.add("lemma3-exact", {{"a", a}, {"b", bb}}, 1e-14, 0.0,
          [&fs, a = a, bb = bb, value = value] { return compare(fs.lemma3_log_beta_integral(a, bb), value); });
  }
  // The log-beta integral is Gamma(b) I^b [t^(a-1) log t] at t = 1.
  for (double a : {0.5, 1.0, 2.0}) {
    for (double bb : {0.5, 1.0, 2.0}) {
      b.add("lemma3-quad", {{"a", a}, {"b", bb}}, b.tol().identity, 0.0, [&o, &fs, a, bb] {
        const auto f = oracle::Integrand::from_family(PowerLog{a});
        const double q = sf::gamma(bb) * oracle::rl_integral_quad(f, bb, 1.0, o.quad).value;
        return compare(fs.lemma3_log_beta_integral(a, bb), q);
      });
    }
  }
  for (unsigned n = 1; n <= 8; ++n) {
    for (double beta : {0.5, 1.3, 2.5, 4.1}) {
      b.add("digamma-sum-identity", {{"n", static_cast<double>(n)}, {"beta", beta}}, 1e-12, 1e-12, [&fs, n, beta] {
        const auto s = fs.digamma_sum_identity_sides(n, beta);
        return compare(s.lhs, s.rhs);
      });
    }
  }
  for (unsigned n = 1; n <= 3; ++n) {
    for (double beta : {0.5, 1.3, 2.0}) {
      for (double t : o.grid.ts) {
        if (sf::is_nonpositive_integer(beta - n + 1.0)) {
          b.skip();
          continue;
        }
        b.add("powerlog-derivative-fd", {{"n", static_cast<double>(n)}, {"beta", beta}, {"t", t}}, 1e-6,
              b.tol().abs_floor, [&o, &fs, n, beta, t] {
                auto g = [beta](double x) { return std::pow(x, beta) * std::log(x); };
                return compare(fs.nth_derivative_powerlog(n, beta, t),
                               oracle::richardson_derivative(g, n, t, o.quad).value);
              });
      }
    }
  }
  for (unsigned n = 1; n <= 3; ++n) {
    for (double a : {-0.5, 0.5, 1.3, 2.0}) {
      for (double t : o.grid.ts) {
        b.add("power-derivative-fd", {{"n", static_cast<double>(n)}, {"a", a}, {"t", t}}, 1e-6, b.tol().abs_floor,
              [&o, &fs, n, a, t] {
                auto g = [a](double x) { return std::pow(x, a); };
                return compare(fs.nth_derivative_power(n, a, t), oracle::richardson_derivative(g, n, t, o.quad).value);
              });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

using BuildFn = void (*)(SuiteBuilder&);

struct SuiteEntry {
  const char* name;
  BuildFn build;
};

constexpr SuiteEntry kSuites[] = {
    {"specfun", build_specfun},
    {"rl-power", build_rl_power},
    {"rl-exp", build_rl_exp},
    {"rl-log", build_rl_log},
    {"weyl", build_weyl},
    {"d-equals-i-neg", build_d_equals_i_neg},
    {"literature-falsification", build_literature_falsification},
    {"lemmas", build_lemmas},
};

CheckRecord execute(const Task& task, const Tolerances& tol, const std::string& prefix) {
  const double rel = tol.override_rel.value_or(task.tol);
  try {
    Measured m = task.run();
    CheckRecord r = make_record(prefix + task.id, task.inputs, m.lhs, m.rhs, rel, task.tol_abs, std::move(m.note));
    if (m.passed) r.passed = *m.passed;
    return r;
  } catch (const std::exception& e) {
    return make_record(prefix + task.id, task.inputs, kNaN, kNaN, rel, task.tol_abs,
                       std::string("error: ") + e.what());
  }
}

std::vector<CheckRecord> execute_all(const std::vector<Task>& tasks, const RunOptions& options,
                                     const std::string& prefix) {
  std::vector<CheckRecord> out(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = execute(tasks[i], options.tolerances, prefix);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = execute(tasks[i], options.tolerances, prefix);
    });
  }
  pool.clear();
  return out;
}

void run_entry(const SuiteEntry& entry, const RunOptions& options, const std::string& prefix,
               VerificationReport& report) {
  SuiteBuilder builder(options);
  entry.build(builder);
  auto records = execute_all(builder.tasks(), options, prefix);
  for (const auto& task : builder.finals()) records.push_back(execute(task, options.tolerances, prefix));
  for (auto& r : records) {
    (r.passed ? report.n_pass : report.n_fail)++;
    report.records.push_back(std::move(r));
  }
  report.n_skipped += builder.skipped();
}

}  // namespace

std::string Grid::to_string() const {
  auto list = [](const char* key, const std::vector<double>& xs) {
    std::string s = std::string(key) + "={";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + format_short(xs[i]);
    return s + "}";
  };
  return list("alpha", alphas) + ";" + list("gamma", gammas) + ";" + list("lambda", lambdas) + ";" +
         list("nu", nus) + ";" + list("delta", deltas) + ";" + list("t", ts) + ";" +
         list("t_falsification", falsification_ts);
}

FormulaSet FormulaSet::standard() {
  FormulaSet fs;
  fs.rl_integral_power = cf::rl_integral_power;
  fs.rl_derivative_power = cf::rl_derivative_power;
  fs.rl_integral_exp = cf::rl_integral_exp;
  fs.rl_derivative_exp = cf::rl_derivative_exp;
  fs.rl_integral_powerlog = cf::rl_integral_powerlog;
  fs.rl_derivative_powerlog = cf::rl_derivative_powerlog;
  fs.weyl_integral_abspower = cf::weyl_integral_abspower;
  fs.weyl_derivative_abspower = cf::weyl_derivative_abspower;
  fs.weyl_power_literature = cf::weyl_power_literature;
  fs.lemma1_integral = cf::lemma1_integral;
  fs.lemma3_log_beta_integral = cf::lemma3_log_beta_integral;
  fs.nth_derivative_power = cf::nth_derivative_power;
  fs.nth_derivative_powerlog = cf::nth_derivative_powerlog;
  fs.digamma_sum_identity_sides = cf::digamma_sum_identity_sides;
  return fs;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : kSuites) n.emplace_back(e.name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(name);
  report.grid_spec = options.grid.to_string();
  bool found = false;
  for (const auto& entry : kSuites) {
    if (name == "all") {
      run_entry(entry, options, std::string(entry.name) + "/", report);
      found = true;
    } else if (name == entry.name) {
      run_entry(entry, options, "", report);
      found = true;
    }
  }
  if (!found) throw UnknownSuiteError("unknown suite: " + std::string(name));
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kCorrected:
      return "corrected";
    case Verdict::kLiterature:
      return "literature";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FalsificationMargin falsification_margin(double delta, double alpha, double t, const oracle::QuadConfig& cfg,
                                         const FormulaSet& formulas) {
  FalsificationMargin m{};
  m.corrected = formulas.weyl_derivative_abspower(alpha, delta, t);
  m.literature = formulas.weyl_power_literature(alpha, delta, t);
  const auto o = oracle::weyl_derivative_quad(delta, alpha, t, cfg);
  m.oracle = o.value;
  m.oracle_err = o.abs_err_estimate;
  const double band = 10.0 * m.oracle_err;
  const double d_corr = std::fabs(m.oracle - m.corrected);
  const double d_lit = std::fabs(m.oracle - m.literature);
  if (d_corr <= band && d_lit > band) {
    m.verdict = Verdict::kCorrected;
  } else if (d_lit <= band && d_corr > band) {
    m.verdict = Verdict::kLiterature;
  } else {
    m.verdict = Verdict::kInconclusive;
  }
  return m;
}

}  // namespace fraccalc::verify
