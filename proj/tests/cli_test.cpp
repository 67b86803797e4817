#include <gtest/gtest.h>

#include <sstream>

#include "frobtrace/cli.hpp"
#include "json.hpp"

namespace frobtrace::cli {
namespace {

using nlohmann::json;

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <typename Cmd, typename Fn>
Captured capture(const Cmd& cmd, Fn fn) {
  std::ostringstream out, err;
  const int code = fn(cmd, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
  return lines;
}

const std::vector<std::uint32_t> kGrid{13, 25, 37, 49, 61, 73, 97, 109, 121, 169};

TEST(Trace, WorkedInstanceAllMethods) {
  const Captured r = capture(TraceCommand{13, 1, 1, 1}, run_trace);
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["trace_thm1"], -4);
  EXPECT_EQ(j["trace_thm2"], -4);
  EXPECT_EQ(j["trace_oracle"], -4);
  EXPECT_EQ(j["j"], 7);
  EXPECT_EQ(j["delta"], 11);
  EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(Trace, SchemaHasExactlyTheReportKeysInOrder) {
  const Captured r = capture(TraceCommand{13, 1, 1, 1}, run_trace);
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j.size(), std::size(kReportColumns));
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) EXPECT_EQ(key, kReportColumns[i++]);
}

TEST(Trace, ExtensionField) {
  const Captured r = capture(TraceCommand{5, 2, 1, 1}, run_trace);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["q"], 25);
  EXPECT_EQ(j["trace_oracle"], j["trace_thm1"]);
  EXPECT_EQ(j["trace_oracle"], j["trace_thm2"]);
}

TEST(Trace, CongruenceViolationIsUsageError) {
  TraceCommand cmd{11, 1, 1, 1};
  cmd.methods = kMethodThm1;
  const Captured r = capture(cmd, run_trace);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("BadFieldCongruence"), std::string::npos) << r.err;
}

TEST(Trace, ExcludedJInvariantNamesHypothesis) {
  const Captured r = capture(TraceCommand{13, 1, 0, 1}, run_trace);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("j"), std::string::npos);
}

TEST(Trace, OracleOnlyAcceptsAnyNonsingularField) {
  TraceCommand cmd{11, 1, 1, 1};
  cmd.methods = kMethodOracle;
  EXPECT_EQ(capture(cmd, run_trace).code, kExitOk);
}

TEST(Trace, InvalidInputs) {
  EXPECT_EQ(capture(TraceCommand{4, 1, 1, 1}, run_trace).code, kExitUsage);
  EXPECT_EQ(capture(TraceCommand{13, 1, 13, 1}, run_trace).code, kExitUsage);
  TraceCommand big{13, 3, 1, 1};
  big.max_q = 1000;
  EXPECT_EQ(capture(big, run_trace).code, kExitUsage);
}

TEST(Trace, RoundingFailureIsDisagreement) {
  TraceCommand cmd{13, 1, 1, 1};
  cmd.tolerance = 0.0;
  EXPECT_EQ(capture(cmd, run_trace).code, kExitDisagree);
}

TEST(Trace, CsvRendering) {
  TraceCommand cmd{13, 1, 1, 1};
  cmd.format = OutputFormat::Csv;
  cmd.methods = kMethodOracle;
  const Captured r = capture(cmd, run_trace);
  EXPECT_EQ(r.out,
            "p,e,q,a,b,j,delta,trace_thm1,trace_thm2,trace_oracle,residual_thm1,residual_thm2,agree\n"
            "13,1,13,1,1,7,11,,,-4,,,true\n");
}

TEST(Sweep, GridAgreesEverywhere) {
  SweepConfig config;
  config.q_list = kGrid;
  config.curves_per_q = 25;
  config.seed = 42;
  const Captured r = capture(config, run_sweep);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::vector<json> lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 251u);
  const json& summary = lines.back()["summary"];
  EXPECT_EQ(summary["curves_tested"], 250);
  EXPECT_EQ(summary["agreements"], 250);
  EXPECT_LT(summary["max_residual"].get<double>(), 1e-6 * 13);
  EXPECT_FALSE(summary.contains("elapsed"));
}

TEST(Sweep, ByteIdenticalReruns) {
  SweepConfig config;
  config.q_list = {13, 25, 37};
  config.curves_per_q = 10;
  const Captured first = capture(config, run_sweep);
  const Captured second = capture(config, run_sweep);
  EXPECT_EQ(first.out, second.out);

  config.threads = 4;
  EXPECT_EQ(capture(config, run_sweep).out, first.out);

  config.format = OutputFormat::Csv;
  config.threads = 1;
  const Captured csv = capture(config, run_sweep);
  EXPECT_EQ(csv.out, capture(config, run_sweep).out);
  EXPECT_EQ(csv.out.rfind(report_csv_header(), 0), 0u);
}

TEST(Sweep, SeedChangesSample) {
  SweepConfig config;
  config.q_list = {37};
  config.curves_per_q = 5;
  const std::string a = capture(config, run_sweep).out;
  config.seed = 43;
  EXPECT_NE(capture(config, run_sweep).out, a);
}

TEST(Sweep, EmptySweep) {
  SweepConfig config;
  config.q_list = {13};
  config.curves_per_q = 0;
  const Captured r = capture(config, run_sweep);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"summary\":{\"curves_tested\":0,\"agreements\":0,\"max_residual\":0.0}}\n");
}

TEST(Sweep, TimingFlagAddsElapsed) {
  SweepConfig config;
  config.q_list = {13};
  config.curves_per_q = 1;
  config.timing = true;
  const std::vector<json> lines = json_lines(capture(config, run_sweep).out);
  EXPECT_TRUE(lines.back()["summary"].contains("elapsed"));
}

TEST(Sweep, FieldResolution) {
  SweepConfig config;
  config.q_range = std::pair{10u, 130u};
  EXPECT_EQ(resolve_sweep_fields(config),
            (std::vector<std::uint32_t>{13, 25, 37, 49, 61, 73, 97, 109, 121}));
  config.q_list = {169, 13};
  EXPECT_EQ(resolve_sweep_fields(config).back(), 169u);
  EXPECT_EQ(resolve_sweep_fields(config).size(), 10u);
}

TEST(Sweep, ConfigErrors) {
  for (std::uint32_t bad : {11u, 15u, 121u * 2}) {
    SweepConfig config;
    config.q_list = {bad};
    EXPECT_EQ(capture(config, run_sweep).code, kExitUsage) << bad;
  }
  SweepConfig over;
  over.q_list = {169};
  over.max_q = 100;
  EXPECT_EQ(capture(over, run_sweep).code, kExitUsage);
}

TEST(Identities, PrimeThirteen) {
  const Captured r = capture(IdentitiesCommand{13, 1, 50}, run_identities);
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const json summary = json_lines(r.out).back()["summary"];
  EXPECT_TRUE(summary["passed"].get<bool>());
  EXPECT_EQ(summary["quadratic_gauss_sign"], "+");
}

TEST(Identities, TwentyFiveHasNegativeSign) {
  const Captured r = capture(IdentitiesCommand{5, 2, 50}, run_identities);
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const std::vector<json> lines = json_lines(r.out);
  EXPECT_EQ(lines.back()["summary"]["quadratic_gauss_sign"], "-");
  bool saw_info = false;
  for (const json& line : lines) {
    if (line.contains("status") && line["status"] == "info") saw_info = true;
  }
  EXPECT_TRUE(saw_info);
}

TEST(Identities, NoSignWhenThreeModFour) {
  const Captured r = capture(IdentitiesCommand{11, 1, 10}, run_identities);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(json_lines(r.out).back()["summary"]["quadratic_gauss_sign"].is_null());
}

TEST(Identities, InvalidField) {
  EXPECT_EQ(capture(IdentitiesCommand{4, 1}, run_identities).code, kExitUsage);
  EXPECT_EQ(capture(IdentitiesCommand{2, 3}, run_identities).code, kExitUsage);
}

TEST(Environment, MaxQOverride) {
  ::unsetenv("FROBTRACE_MAX_Q");
  EXPECT_EQ(max_q_from_env(), kDefaultMaxQ);
  ::setenv("FROBTRACE_MAX_Q", "5000", 1);
  EXPECT_EQ(max_q_from_env(), 5000u);
  ::setenv("FROBTRACE_MAX_Q", "lots", 1);
  EXPECT_THROW(max_q_from_env(), Error);
  ::unsetenv("FROBTRACE_MAX_Q");
}

}  // namespace
}  // namespace frobtrace::cli
