#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fraccalc/cli.hpp"

using namespace fraccalc;
using namespace fraccalc::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("decimal literals") {
  CHECK(parse_decimal("0.5") == 0.5);
  CHECK(parse_decimal("-2") == -2.0);
  CHECK(parse_decimal("1e-8") == 1e-8);
  CHECK(parse_decimal(".25") == 0.25);
  for (const char* bad : {"", "1/2", "nan", "inf", "0x10", "1.5abc", "--1", "e5", "1,5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_decimal(bad), UsageError);
  }
}

TEST_CASE("families, operators and ranges") {
  CHECK(std::get<Power>(parse_family("power:gamma=0.5")).gamma_exp == 0.5);
  CHECK(std::get<Exp>(parse_family("exp:lambda=-1")).lambda == -1.0);
  CHECK(std::get<PowerLog>(parse_family("powerlog:nu=2")).nu == 2.0);
  CHECK(std::get<AbsPower>(parse_family("abspower:delta=0.3")).delta == 0.3);
  CHECK_THROWS_AS(parse_family("power:lambda=1"), UsageError);
  CHECK_THROWS_AS(parse_family("sin:gamma=1"), UsageError);
  CHECK_THROWS_AS(parse_family("power"), UsageError);

  CHECK(parse_operator("weyl-der") == OperatorKind::kWeylDerivative);
  CHECK_THROWS_AS(parse_operator("bogus"), UsageError);

  const auto r = parse_range("0.1:0.5:0.1").values();
  REQUIRE(r.size() == 5);
  CHECK(r.back() == doctest::Approx(0.5));
  CHECK(parse_range("1:1:1").values().size() == 1);
  CHECK_THROWS_AS(parse_range("1:0:0.1"), UsageError);
  CHECK_THROWS_AS(parse_range("0:1:0"), UsageError);
  CHECK_THROWS_AS(parse_range("0:1"), UsageError);
}

TEST_CASE("config files") {
  const auto c = parse_config("# quadrature\ntarget_rel_tol = 1e-8\nmax_nodes=512\n\nthreads = 3 # comment\n");
  CHECK(c.quad.target_rel_tol == 1e-8);
  CHECK(c.quad.max_nodes == 512);
  CHECK(c.threads == 3);
  CHECK(c.quad.fd_step_factor == oracle::QuadConfig{}.fd_step_factor);
  CHECK_THROWS_AS(parse_config("colour = red\n"), UsageError);
  CHECK_THROWS_AS(parse_config("max_nodes = -4\n"), UsageError);
  CHECK_THROWS_AS(parse_config("max_nodes\n"), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/fraccalc.conf"), UsageError);
}

TEST_CASE("argument parsing") {
  const auto cmd = parse_args({"eval", "--op", "rl-int", "--alpha", "0.5", "--fn", "power:gamma=0", "--t", "1"});
  const auto& e = std::get<EvalCommand>(cmd);
  CHECK(e.op == OperatorKind::kRLIntegral);
  CHECK(e.alpha == 0.5);
  CHECK(e.method == MethodChoice::kClosed);

  const auto v = std::get<VerifyCommand>(parse_args({"verify", "--suite", "weyl", "--format", "json", "--tol", "1e-6"}));
  CHECK(v.format == verify::ReportFormat::kJson);
  CHECK(v.tol == 1e-6);

  CHECK(std::holds_alternative<HelpCommand>(parse_args({"--help"})));
  CHECK(std::holds_alternative<HelpCommand>(parse_args({"eval", "--help"})));

  CHECK_THROWS_AS(parse_args({"eval", "--op", "bogus", "--alpha", "0.5", "--fn", "power:gamma=0", "--t", "1"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"eval", "--op", "rl-int", "--fn", "power:gamma=0", "--t", "1"}), UsageError);
  CHECK_THROWS_AS(parse_args({"eval", "--op", "rl-int", "--alpha", "1/2", "--fn", "power:gamma=0", "--t", "1"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "--suite", "weyl", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"table", "--op", "rl-int", "--fn", "power:gamma=0", "--alpha-range", "0.5:1:0.5",
                              "--t-range", "1:2:1", "--config", "x"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
}

TEST_CASE("eval") {
  auto r = call({"eval", "--op", "rl-int", "--alpha", "0.5", "--fn", "power:gamma=0", "--t", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("1.1283791670955126\t", 0) == 0);
  CHECK(r.out.find("\tclosed-form\n") != std::string::npos);

  r = call({"eval", "--op", "rl-der", "--alpha", "0.5", "--fn", "power:gamma=2", "--t", "1", "--method", "both"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 2);
  CHECK(r.out.find("\toracle\n") != std::string::npos);

  r = call({"eval", "--op", "weyl-int", "--alpha", "0.6", "--fn", "abspower:delta=0.5", "--t", "1"});
  CHECK(r.code == kExitDomain);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());

  r = call({"eval", "--op", "rl-int", "--alpha", "0.5", "--fn", "power:gamma=0", "--t", "1", "--config",
            "/nonexistent/x.conf"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("table and compare") {
  auto r = call({"table", "--op", "rl-int", "--fn", "exp:lambda=1", "--alpha-range", "0.5:1:0.5", "--t-range",
                 "1:2:1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("alpha,t,param,value_closed,value_oracle,abs_diff\n", 0) == 0);
  CHECK(count_lines(r.out) == 5);

  r = call({"compare", "--delta", "0.5", "--alpha", "0.25", "--t-range", "0.5:2:0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("delta,alpha,t,corrected,literature,oracle,oracle_err,verdict\n", 0) == 0);
  CHECK(count_lines(r.out) == 5);
  CHECK(r.out.find("literature\n", 10) == std::string::npos);
}

TEST_CASE("verify and help") {
  auto r = call({"verify", "--suite", "lemmas"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS\n") != std::string::npos);
  CHECK(call({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(call({"verify", "--suite", "rl-power", "--tol", "1e-300"}).code == kExitVerifyFailed);

  r = call({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("eval") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
