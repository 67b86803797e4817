#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "frobtrace/elliptic.hpp"
#include "frobtrace/field.hpp"

namespace frobtrace::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Json, Csv };

// Fixed CSV column order; the JSON record carries the same keys in the same
// order.
inline constexpr const char* kReportColumns[] = {
    "p", "e", "q", "a", "b", "j", "delta", "trace_thm1", "trace_thm2", "trace_oracle",
    "residual_thm1", "residual_thm2", "agree"};

std::string report_json(const TraceReport& report);
std::string report_csv_header();
std::string report_csv_row(const TraceReport& report);

// FROBTRACE_MAX_Q when set, kDefaultMaxQ otherwise. Error(BadArgument) on an
// unparsable value.
std::uint32_t max_q_from_env();

struct TraceCommand {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  unsigned methods = kMethodAll;
  OutputFormat format = OutputFormat::Json;
  std::optional<double> tolerance;
  std::uint32_t max_q = kDefaultMaxQ;
};

int run_trace(const TraceCommand& cmd, std::ostream& out, std::ostream& err);

struct SweepConfig {
  std::vector<std::uint32_t> q_list;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> q_range;
  std::uint32_t curves_per_q = 25;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::Json;
  std::optional<double> tolerance;
  std::uint32_t max_q = kDefaultMaxQ;
  unsigned threads = 1;
  // Adds wall-clock time to the stdout summary, which makes output
  // non-reproducible. Elapsed time always goes to the stderr summary.
  bool timing = false;
};

// Fields covered by a sweep, ascending and deduplicated. Error(BadArgument)
// for any explicit q that is not a prime power = 1 mod 12 within max_q.
std::vector<std::uint32_t> resolve_sweep_fields(const SweepConfig& config);

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

struct IdentitiesCommand {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint32_t trials = 50;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
  std::optional<double> tolerance;
  std::uint32_t max_q = kDefaultMaxQ;
};

int run_identities(const IdentitiesCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace frobtrace::cli
