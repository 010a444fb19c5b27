#ifndef FRACCALC_VERIFY_HPP_
#define FRACCALC_VERIFY_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fraccalc/closed_forms.hpp"
#include "fraccalc/oracle.hpp"

namespace fraccalc::verify {

using Inputs = std::map<std::string, double>;

/// One comparison lhs vs rhs. rhs is the reference side.
struct CheckRecord {
  std::string check_id;
  Inputs inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tol = 0.0;
  double tol_abs = 0.0;
  bool passed = false;
  std::string note;

  bool operator==(const CheckRecord&) const = default;
};

/// Fills abs_diff, rel_diff and passed = (abs_diff <= tol_abs || rel_diff <= tol).
/// NaN on either side never passes.
CheckRecord make_record(std::string check_id, Inputs inputs, double lhs, double rhs, double tol,
                        double tol_abs, std::string note = {});

struct VerificationReport {
  std::string suite;
  std::string grid_spec;
  std::vector<CheckRecord> records;
  int n_pass = 0;
  int n_fail = 0;
  /// Grid points outside a formula's precondition; not part of records.
  int n_skipped = 0;
  double wall_time_seconds = 0.0;

  bool operator==(const VerificationReport&) const = default;
};

struct Grid {
  std::vector<double> alphas{0.1, 0.25, 0.5, 0.75, 0.9, 1.5, 2.5};
  std::vector<double> gammas{-0.5, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> lambdas{-1.0, 0.5, 1.0};
  std::vector<double> nus{0.3, 1.0, 2.0};
  std::vector<double> deltas{0.2, 0.4, 0.5, 0.6, 0.8};
  std::vector<double> ts{0.5, 1.0, 2.0, 5.0};
  /// t values of the falsification sweep.
  std::vector<double> falsification_ts{0.5, 1.0, 2.0};

  /// One-line description, e.g. "alpha={0.1,0.25};gamma={...};...".
  std::string to_string() const;
};

/// Per-kind default tolerances.
struct Tolerances {
  double identity = 1e-9;
  double integral_oracle = 1e-7;
  double derivative_oracle = 1e-4;
  double abs_floor = 1e-9;
  /// When set, replaces the relative tolerance of every check.
  std::optional<double> override_rel;
};

/// The closed forms under test. Suites only reach closed forms through this
/// table so that tests can substitute deliberately broken ones.
struct FormulaSet {
  using Fn3 = std::function<double(double, double, double)>;

  Fn3 rl_integral_power;
  Fn3 rl_derivative_power;
  Fn3 rl_integral_exp;
  Fn3 rl_derivative_exp;
  Fn3 rl_integral_powerlog;
  Fn3 rl_derivative_powerlog;
  Fn3 weyl_integral_abspower;
  Fn3 weyl_derivative_abspower;
  Fn3 weyl_power_literature;
  Fn3 lemma1_integral;
  std::function<double(double, double)> lemma3_log_beta_integral;
  std::function<double(unsigned, double, double)> nth_derivative_power;
  std::function<double(unsigned, double, double)> nth_derivative_powerlog;
  std::function<closed_forms::SumIdentitySides(unsigned, double)> digamma_sum_identity_sides;

  static FormulaSet standard();
};

struct RunOptions {
  Grid grid;
  Tolerances tolerances;
  oracle::QuadConfig quad;
  FormulaSet formulas = FormulaSet::standard();
  /// Worker threads; results are ordered by check index regardless.
  unsigned threads = 1;
};

/// specfun, rl-power, rl-exp, rl-log, weyl, d-equals-i-neg,
/// literature-falsification, lemmas, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. A check that throws becomes a failed record whose note
/// carries the message. Throws UnknownSuiteError for an unknown name.
VerificationReport run_suite(std::string_view name, const RunOptions& options = {});

enum class Verdict { kCorrected, kLiterature, kInconclusive };

std::string_view verdict_name(Verdict verdict);

struct FalsificationMargin {
  double corrected;
  double literature;
  double oracle;
  double oracle_err;
  Verdict verdict;
};

/// Arbitrates the corrected Weyl derivative of |t|^-delta against the
/// literature formula: corrected iff |oracle - corrected| <= 10 err and
/// |oracle - literature| > 10 err, literature symmetrically, else
/// inconclusive.
FalsificationMargin falsification_margin(double delta, double alpha, double t,
                                         const oracle::QuadConfig& cfg = {},
                                         const FormulaSet& formulas = FormulaSet::standard());

enum class ReportFormat { kText, kJson, kCsv };

/// "text", "json", "csv"; nullopt otherwise.
std::optional<ReportFormat> parse_report_format(std::string_view name);

std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Inverse of emit_report(..., kJson). Throws Error on malformed input.
VerificationReport parse_report_json(std::string_view text);

}  // namespace fraccalc::verify

#endif  // FRACCALC_VERIFY_HPP_
