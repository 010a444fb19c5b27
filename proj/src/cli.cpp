#include "fraccalc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "fraccalc/format.hpp"

namespace fraccalc::cli {

namespace {

constexpr const char* kGrammar =
    "\ncommands:\n"
    "  eval    --op {rl-int|rl-der|weyl-int|weyl-der} --alpha A --fn FAMILY --t T\n"
    "          [--method closed|oracle|both] [--config PATH]\n"
    "  verify  --suite NAME [--format text|json|csv] [--out PATH] [--tol X] [--config PATH]\n"
    "  table   --op KIND --fn FAMILY --alpha-range a:b:s --t-range a:b:s [--out PATH]\n"
    "  compare --delta D --alpha A --t-range a:b:s [--out PATH]\n"
    "FAMILY: power:gamma=G | exp:lambda=L | powerlog:nu=N | abspower:delta=D\n"
    "suites: specfun rl-power rl-exp rl-log weyl d-equals-i-neg literature-falsification lemmas all\n"
    "exit codes: 0 ok, 1 verification failed, 2 usage, 3 domain error, 4 no convergence\n";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::ostream& open_output(const std::optional<std::string>& path, std::ofstream& file, std::ostream& fallback) {
  if (!path) return fallback;
  file.open(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + *path + "'");
  return file;
}

FileConfig config_or_default(const std::optional<std::string>& path) {
  return path ? load_config(*path) : FileConfig{};
}

int run_eval(const EvalCommand& cmd, std::ostream& out) {
  const FileConfig cfg = config_or_default(cmd.config_path);
  const OperatorSpec op(cmd.op, cmd.alpha);
  auto print = [&](const EvalResult& r) {
    out << format_sig17(r.value) << '\t' << format_sig17(r.abs_err_estimate) << '\t' << method_name(r.method) << '\n';
  };
  if (cmd.method != MethodChoice::kOracle) print(closed_forms::evaluate(op, cmd.family, cmd.t));
  if (cmd.method != MethodChoice::kClosed) print(oracle::evaluate(op, cmd.family, cmd.t, cfg.quad));
  return kExitOk;
}

int run_verify(const VerifyCommand& cmd, std::ostream& out) {
  const FileConfig cfg = config_or_default(cmd.config_path);
  verify::RunOptions options;
  options.quad = cfg.quad;
  options.threads = cfg.threads;
  options.tolerances.override_rel = cmd.tol;
  const auto report = verify::run_suite(cmd.suite, options);
  std::ofstream file;
  std::ostream& sink = open_output(cmd.out_path, file, out);
  sink << verify::emit_report(report, cmd.format);
  if (cmd.out_path) {
    out << report.suite << ": " << report.records.size() << " records, " << report.n_pass << " pass, "
        << report.n_fail << " fail, " << report.n_skipped << " skipped\n";
  }
  return report.n_fail == 0 ? kExitOk : kExitVerifyFailed;
}

int run_table(const TableCommand& cmd, std::ostream& out) {
  const FileConfig cfg;
  std::ostringstream csv;
  csv << "alpha,t,param,value_closed,value_oracle,abs_diff\n";
  const double param = family_parameter(cmd.family);
  for (double alpha : cmd.alpha.values()) {
    const OperatorSpec op(cmd.op, alpha);
    for (double t : cmd.t.values()) {
      const double closed = closed_forms::evaluate(op, cmd.family, t).value;
      const double oracle_value = oracle::evaluate(op, cmd.family, t, cfg.quad).value;
      csv << format_short(alpha) << ',' << format_short(t) << ',' << format_short(param) << ','
          << format_sig17(closed) << ',' << format_sig17(oracle_value) << ','
          << format_sig17(std::fabs(closed - oracle_value)) << '\n';
    }
  }
  std::ofstream file;
  open_output(cmd.out_path, file, out) << csv.str();
  return kExitOk;
}

int run_compare(const CompareCommand& cmd, std::ostream& out) {
  std::ostringstream csv;
  csv << "delta,alpha,t,corrected,literature,oracle,oracle_err,verdict\n";
  for (double t : cmd.t.values()) {
    const auto m = verify::falsification_margin(cmd.delta, cmd.alpha, t);
    csv << format_short(cmd.delta) << ',' << format_short(cmd.alpha) << ',' << format_short(t) << ','
        << format_sig17(m.corrected) << ',' << format_sig17(m.literature) << ',' << format_sig17(m.oracle) << ','
        << format_sig17(m.oracle_err) << ',' << verify::verdict_name(m.verdict) << '\n';
  }
  std::ofstream file;
  open_output(cmd.out_path, file, out) << csv.str();
  return kExitOk;
}

}  // namespace

std::vector<double> Range::values() const {
  const double span = (stop - start) / step;
  const auto n = static_cast<long>(std::floor(span + 1e-9));
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) v.push_back(start + static_cast<double>(i) * step);
  return v;
}

double parse_decimal(std::string_view token) {
  const std::string_view s = trim(token);
  const bool ok_chars = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
  });
  const bool has_digit = std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!ok_chars || !has_digit) throw UsageError("not a decimal number: '" + std::string(token) + "'");
  const char* first = s.data();
  if (*first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw UsageError("not a decimal number: '" + std::string(token) + "'");
  }
  return value;
}

FunctionFamily parse_family(std::string_view token) {
  const auto colon = token.find(':');
  const auto eq = token.find('=');
  if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon) {
    throw UsageError("bad function family '" + std::string(token) + "' (expected e.g. power:gamma=0.5)");
  }
  const auto name = token.substr(0, colon);
  const auto key = token.substr(colon + 1, eq - colon - 1);
  const double value = parse_decimal(token.substr(eq + 1));
  auto expect = [&](std::string_view want) {
    if (key != want) {
      throw UsageError("bad function family '" + std::string(token) + "': parameter must be " + std::string(want));
    }
  };
  if (name == "power") {
    expect("gamma");
    return Power{value};
  }
  if (name == "exp") {
    expect("lambda");
    return Exp{value};
  }
  if (name == "powerlog") {
    expect("nu");
    return PowerLog{value};
  }
  if (name == "abspower") {
    expect("delta");
    return AbsPower{value};
  }
  throw UsageError("unknown function family '" + std::string(name) + "'");
}

Range parse_range(std::string_view token) {
  const auto parts = split(token, ':');
  if (parts.size() != 3) throw UsageError("bad range '" + std::string(token) + "' (expected start:stop:step)");
  Range r{parse_decimal(parts[0]), parse_decimal(parts[1]), parse_decimal(parts[2])};
  if (!(r.step > 0.0)) throw UsageError("range step must be > 0 in '" + std::string(token) + "'");
  if (r.stop < r.start - r.step * 1e-9) throw UsageError("empty range '" + std::string(token) + "'");
  return r;
}

OperatorKind parse_operator(std::string_view token) {
  for (auto kind : {OperatorKind::kRLIntegral, OperatorKind::kRLDerivative, OperatorKind::kWeylIntegral,
                    OperatorKind::kWeylDerivative}) {
    if (operator_kind_name(kind) == token) return kind;
  }
  throw UsageError("unknown operator '" + std::string(token) + "'");
}

FileConfig parse_config(std::string_view text) {
  FileConfig cfg;
  int line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value_text = trim(line.substr(eq + 1));
    const double value = parse_decimal(value_text);
    auto as_int = [&] {
      if (value != std::floor(value) || value < 0 || value > 1e9) {
        throw UsageError("config key '" + std::string(key) + "' needs a non-negative integer");
      }
      return static_cast<int>(value);
    };
    if (key == "target_rel_tol") {
      cfg.quad.target_rel_tol = value;
    } else if (key == "max_nodes") {
      cfg.quad.max_nodes = as_int();
    } else if (key == "fd_step_factor") {
      cfg.quad.fd_step_factor = value;
    } else if (key == "richardson_levels") {
      cfg.quad.richardson_levels = as_int();
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(std::max(1, as_int()));
    } else {
      throw UsageError("unknown config key '" + std::string(key) + "'");
    }
  }
  try {
    cfg.quad.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

FileConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Fractional integrals and derivatives: closed forms, quadrature oracles, verification.", "fraccalc"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string op, alpha, fn, t, method = "closed", config;
  auto* eval = app.add_subcommand("eval", "Evaluate one operator at one point");
  eval->add_option("--op", op, "rl-int | rl-der | weyl-int | weyl-der")->required();
  eval->add_option("--alpha", alpha, "order alpha > 0")->required();
  eval->add_option("--fn", fn, "power:gamma=G | exp:lambda=L | powerlog:nu=N | abspower:delta=D")->required();
  eval->add_option("--t", t, "evaluation point t > 0")->required();
  eval->add_option("--method", method, "closed | oracle | both (default closed)");
  eval->add_option("--config", config, "key = value file overriding quadrature settings");

  std::string suite, format = "text", out, tol;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "specfun | rl-power | rl-exp | rl-log | weyl | d-equals-i-neg | "
                                    "literature-falsification | lemmas | all")
      ->required();
  ver->add_option("--format", format, "text | json | csv (default text)");
  ver->add_option("--out", out, "write the report here instead of stdout");
  ver->add_option("--tol", tol, "relative tolerance applied to every check");
  ver->add_option("--config", config, "key = value file overriding quadrature settings");

  std::string alpha_range, t_range;
  auto* table = app.add_subcommand("table", "Closed form and oracle over an alpha x t grid, as CSV");
  table->add_option("--op", op, "rl-int | rl-der | weyl-int | weyl-der")->required();
  table->add_option("--fn", fn, "function family")->required();
  table->add_option("--alpha-range", alpha_range, "start:stop:step")->required();
  table->add_option("--t-range", t_range, "start:stop:step")->required();
  table->add_option("--out", out, "CSV output path (default stdout)");

  std::string delta;
  auto* cmp = app.add_subcommand("compare", "Corrected vs literature Weyl derivative of |t|^-delta, as CSV");
  cmp->add_option("--delta", delta, "0 < delta < 1")->required();
  cmp->add_option("--alpha", alpha, "order alpha > 0")->required();
  cmp->add_option("--t-range", t_range, "start:stop:step")->required();
  cmp->add_option("--out", out, "CSV output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto* sub : {eval, ver, table, cmp}) {
      if (sub->parsed()) return HelpCommand{sub->help()};
    }
    return HelpCommand{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return HelpCommand{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };

  if (eval->parsed()) {
    MethodChoice m;
    if (method == "closed") {
      m = MethodChoice::kClosed;
    } else if (method == "oracle") {
      m = MethodChoice::kOracle;
    } else if (method == "both") {
      m = MethodChoice::kBoth;
    } else {
      throw UsageError("unknown method '" + method + "'");
    }
    return EvalCommand{parse_operator(op), parse_decimal(alpha), parse_family(fn), parse_decimal(t), m, opt(config)};
  }
  if (ver->parsed()) {
    VerifyCommand v;
    v.suite = suite;
    const auto f = verify::parse_report_format(format);
    if (!f) throw UsageError("unknown format '" + format + "'");
    v.format = *f;
    v.out_path = opt(out);
    if (!tol.empty()) {
      v.tol = parse_decimal(tol);
      if (!(*v.tol > 0.0)) throw UsageError("--tol must be > 0");
    }
    v.config_path = opt(config);
    return v;
  }
  if (table->parsed()) {
    return TableCommand{parse_operator(op), parse_family(fn), parse_range(alpha_range), parse_range(t_range), opt(out)};
  }
  return CompareCommand{parse_decimal(delta), parse_decimal(alpha), parse_range(t_range), opt(out)};
}

int run(const Command& command, std::ostream& out, std::ostream& /*err*/) {
  return std::visit(
      [&](const auto& cmd) -> int {
        using T = std::decay_t<decltype(cmd)>;
        if constexpr (std::is_same_v<T, EvalCommand>) {
          return run_eval(cmd, out);
        } else if constexpr (std::is_same_v<T, VerifyCommand>) {
          return run_verify(cmd, out);
        } else if constexpr (std::is_same_v<T, TableCommand>) {
          return run_table(cmd, out);
        } else if constexpr (std::is_same_v<T, CompareCommand>) {
          return run_compare(cmd, out);
        } else {
          out << cmd.text;
          return kExitOk;
        }
      },
      command);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out, err);
  } catch (const UsageError& e) {
    err << "fraccalc: " << e.what() << "\nrun 'fraccalc --help' for usage\n";
    return kExitUsage;
  } catch (const UnknownSuiteError& e) {
    err << "fraccalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "fraccalc: convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const Error& e) {
    err << "fraccalc: domain error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace fraccalc::cli
