#ifndef FRACCALC_CLI_HPP_
#define FRACCALC_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fraccalc/closed_forms.hpp"
#include "fraccalc/errors.hpp"
#include "fraccalc/oracle.hpp"
#include "fraccalc/verify.hpp"

namespace fraccalc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitConvergence = 4,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// start:stop:step, inclusive of stop within step * 1e-9.
struct Range {
  double start;
  double stop;
  double step;

  std::vector<double> values() const;
};

enum class MethodChoice { kClosed, kOracle, kBoth };

struct EvalCommand {
  OperatorKind op;
  double alpha;
  FunctionFamily family;
  double t;
  MethodChoice method = MethodChoice::kClosed;
  std::optional<std::string> config_path;
};

struct VerifyCommand {
  std::string suite;
  verify::ReportFormat format = verify::ReportFormat::kText;
  std::optional<std::string> out_path;
  std::optional<double> tol;
  std::optional<std::string> config_path;
};

struct TableCommand {
  OperatorKind op;
  FunctionFamily family;
  Range alpha;
  Range t;
  std::optional<std::string> out_path;
};

struct CompareCommand {
  double delta;
  double alpha;
  Range t;
  std::optional<std::string> out_path;
};

/// --help was requested; text is the grammar to print.
struct HelpCommand {
  std::string text;
};

using Command = std::variant<EvalCommand, VerifyCommand, TableCommand, CompareCommand, HelpCommand>;

/// Decimal literal, e.g. "0.5", "-2", "1e-8". No inf, nan or expressions.
double parse_decimal(std::string_view token);

/// "power:gamma=G", "exp:lambda=L", "powerlog:nu=N" or "abspower:delta=D".
FunctionFamily parse_family(std::string_view token);

Range parse_range(std::string_view token);

/// "rl-int", "rl-der", "weyl-int", "weyl-der".
OperatorKind parse_operator(std::string_view token);

struct FileConfig {
  oracle::QuadConfig quad;
  unsigned threads = 1;
};

/// `key = value` lines, '#' starts a comment. Keys: target_rel_tol,
/// max_nodes, fd_step_factor, richardson_levels, threads.
FileConfig parse_config(std::string_view text);
FileConfig load_config(const std::string& path);

/// argv without the program name. Throws UsageError naming the bad token.
Command parse_args(const std::vector<std::string>& args);

/// Executes a parsed command. Library errors propagate.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_args + run with errors mapped to exit codes and reported on err.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fraccalc::cli

#endif  // FRACCALC_CLI_HPP_
