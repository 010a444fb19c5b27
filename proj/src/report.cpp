#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "fraccalc/errors.hpp"
#include "fraccalc/format.hpp"
#include "fraccalc/verify.hpp"
#include "json.hpp"

namespace fraccalc::verify {

namespace {

using nlohmann::ordered_json;

// JSON has no NaN or infinity; those travel as strings.
ordered_json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw Error("report json: expected a number, got " + j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string inputs_to_string(const Inputs& inputs) {
  std::string out;
  for (const auto& [k, v] : inputs) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_short(v);
  }
  return out;
}

// How far past its tolerance a record sits; > 1 means failed.
double badness(const CheckRecord& r) {
  if (std::isnan(r.abs_diff)) return std::numeric_limits<double>::infinity();
  const double a = r.tol_abs > 0 ? r.abs_diff / r.tol_abs : (r.abs_diff == 0 ? 0 : HUGE_VAL);
  const double b = r.tol > 0 ? r.rel_diff / r.tol : (r.rel_diff == 0 ? 0 : HUGE_VAL);
  return std::min(a, b);
}

std::string emit_text(const VerificationReport& report) {
  std::ostringstream os;
  char line[256];
  os << "suite: " << report.suite << "\n";
  os << "grid: " << report.grid_spec << "\n";
  std::snprintf(line, sizeof line, "records: %zu  pass: %d  fail: %d  skipped: %d  time: %.3f s\n",
                report.records.size(), report.n_pass, report.n_fail, report.n_skipped,
                report.wall_time_seconds);
  os << line;

  auto print = [&](const CheckRecord& r) {
    std::snprintf(line, sizeof line, "  %-4s %-32s lhs=%-24.17g rhs=%-24.17g abs=%.3g rel=%.3g (tol %.3g / %.3g)",
                  r.passed ? "ok" : "FAIL", r.check_id.c_str(), r.lhs, r.rhs, r.abs_diff, r.rel_diff, r.tol,
                  r.tol_abs);
    os << line << "  " << inputs_to_string(r.inputs);
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << "\n";
  };

  std::vector<std::size_t> order(report.records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return badness(report.records[a]) > badness(report.records[b]);
  });
  if (!order.empty()) {
    os << "worst records:\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(5, order.size()); ++i) print(report.records[order[i]]);
  }
  if (report.n_fail > 0) {
    os << "failures:\n";
    for (const auto& r : report.records) {
      if (!r.passed) print(r);
    }
  }
  os << (report.n_fail == 0 ? "PASS\n" : "FAIL\n");
  return os.str();
}

std::string emit_json(const VerificationReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["grid_spec"] = report.grid_spec;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = number_to_json(v);
    records.push_back({{"check_id", r.check_id},
                       {"inputs", inputs},
                       {"lhs", number_to_json(r.lhs)},
                       {"rhs", number_to_json(r.rhs)},
                       {"abs_diff", number_to_json(r.abs_diff)},
                       {"rel_diff", number_to_json(r.rel_diff)},
                       {"tol", number_to_json(r.tol)},
                       {"tol_abs", number_to_json(r.tol_abs)},
                       {"passed", r.passed},
                       {"note", r.note}});
  }
  j["records"] = std::move(records);
  j["n_pass"] = report.n_pass;
  j["n_fail"] = report.n_fail;
  j["n_skipped"] = report.n_skipped;
  j["wall_time_seconds"] = report.wall_time_seconds;
  return j.dump(2) + "\n";
}

std::string emit_csv(const VerificationReport& report) {
  std::string out = "suite,check_id,inputs,lhs,rhs,abs_diff,rel_diff,tol,tol_abs,passed,note\n";
  for (const auto& r : report.records) {
    out += csv_field(report.suite) + ',' + csv_field(r.check_id) + ',' + csv_field(inputs_to_string(r.inputs)) +
           ',' + format_sig17(r.lhs) + ',' + format_sig17(r.rhs) + ',' + format_sig17(r.abs_diff) + ',' +
           format_sig17(r.rel_diff) + ',' + format_sig17(r.tol) + ',' + format_sig17(r.tol_abs) + ',' +
           (r.passed ? "true" : "false") + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

}  // namespace

CheckRecord make_record(std::string check_id, Inputs inputs, double lhs, double rhs, double tol, double tol_abs,
                        std::string note) {
  CheckRecord r;
  r.check_id = std::move(check_id);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::fabs(lhs - rhs);
  if (lhs == rhs) {
    r.abs_diff = 0.0;  // also covers inf == inf
    r.rel_diff = 0.0;
  } else if (rhs != 0.0) {
    r.rel_diff = r.abs_diff / std::fabs(rhs);
  } else {
    r.rel_diff = std::numeric_limits<double>::infinity();
  }
  r.tol = tol;
  r.tol_abs = tol_abs;
  r.passed = r.abs_diff <= tol_abs || r.rel_diff <= tol;
  r.note = std::move(note);
  return r;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return emit_text(report);
    case ReportFormat::kJson:
      return emit_json(report);
    case ReportFormat::kCsv:
      return emit_csv(report);
  }
  return {};
}

VerificationReport parse_report_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("report json: ") + e.what());
  }
  try {
    VerificationReport report;
    report.suite = j.at("suite").get<std::string>();
    report.grid_spec = j.at("grid_spec").get<std::string>();
    for (const auto& jr : j.at("records")) {
      CheckRecord r;
      r.check_id = jr.at("check_id").get<std::string>();
      for (const auto& [k, v] : jr.at("inputs").items()) r.inputs[k] = number_from_json(v);
      r.lhs = number_from_json(jr.at("lhs"));
      r.rhs = number_from_json(jr.at("rhs"));
      r.abs_diff = number_from_json(jr.at("abs_diff"));
      r.rel_diff = number_from_json(jr.at("rel_diff"));
      r.tol = number_from_json(jr.at("tol"));
      r.tol_abs = jr.contains("tol_abs") ? number_from_json(jr.at("tol_abs")) : 0.0;
      r.passed = jr.at("passed").get<bool>();
      r.note = jr.value("note", std::string{});
      report.records.push_back(std::move(r));
    }
    report.n_pass = j.at("n_pass").get<int>();
    report.n_fail = j.at("n_fail").get<int>();
    report.n_skipped = j.value("n_skipped", 0);
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return report;
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("report json: ") + e.what());
  }
}

}  // namespace fraccalc::verify
