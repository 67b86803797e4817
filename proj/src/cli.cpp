#include "frobtrace/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "frobtrace/charsums.hpp"
#include "frobtrace/identities.hpp"
#include "json.hpp"

namespace frobtrace::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json report_object(const TraceReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["e"] = r.e;
  j["q"] = r.q;
  j["a"] = r.a;
  j["b"] = r.b;
  j["j"] = optional_value(r.j);
  j["delta"] = r.delta;
  j["trace_thm1"] = optional_value(r.trace_thm1);
  j["trace_thm2"] = optional_value(r.trace_thm2);
  j["trace_oracle"] = optional_value(r.trace_oracle);
  j["residual_thm1"] = optional_value(r.residual_thm1);
  j["residual_thm2"] = optional_value(r.residual_thm2);
  j["agree"] = r.agree;
  return j;
}

void diagnose(std::ostream& err, const Error& e) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::RoundingFailure ? kExitDisagree : kExitUsage;
}

// Every prime power in [lo, hi] that is 1 mod 12.
std::vector<std::uint32_t> fields_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t q = std::max<std::uint32_t>(lo, 13); q <= hi; ++q) {
    if (q % 12 == 1 && as_prime_power(q)) out.push_back(static_cast<std::uint32_t>(q));
  }
  return out;
}

}  // namespace

std::string report_json(const TraceReport& report) { return report_object(report).dump(); }

std::string report_csv_header() {
  std::string out;
  for (const char* col : kReportColumns) {
    if (!out.empty()) out += ',';
    out += col;
  }
  return out;
}

std::string report_csv_row(const TraceReport& report) {
  const ordered_json j = report_object(report);
  std::string out;
  for (const char* col : kReportColumns) {
    if (col != kReportColumns[0]) out += ',';
    const auto& v = j.at(col);
    if (!v.is_null()) out += v.dump();
  }
  return out;
}

std::uint32_t max_q_from_env() {
  const char* raw = std::getenv("FROBTRACE_MAX_Q");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxQ;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v < 2 || v > 0xffffffffull) {
    throw Error(ErrorCode::BadArgument, std::string("FROBTRACE_MAX_Q is not a valid bound: ") + raw);
  }
  return static_cast<std::uint32_t>(v);
}

int run_trace(const TraceCommand& cmd, std::ostream& out, std::ostream& err) {
  TraceReport report;
  try {
    const FieldPtr ctx = build_field(cmd.p, cmd.e, FieldOptions{cmd.max_q, std::nullopt});
    const Curve curve = make_curve(*ctx, cmd.a, cmd.b);
    const GaussTable table = build_gauss_table(*ctx);
    report = make_trace_report(curve, table, cmd.methods, cmd.tolerance.value_or(-1.0));
  } catch (const Error& e) {
    diagnose(err, e);
    return exit_code_for(e);
  }
  if (cmd.format == OutputFormat::Json) {
    out << report_json(report) << '\n';
  } else {
    out << report_csv_header() << '\n' << report_csv_row(report) << '\n';
  }
  return report.agree ? kExitOk : kExitDisagree;
}

std::vector<std::uint32_t> resolve_sweep_fields(const SweepConfig& config) {
  std::vector<std::uint32_t> fields;
  for (std::uint32_t q : config.q_list) {
    if (!as_prime_power(q)) {
      throw Error(ErrorCode::BadArgument, std::to_string(q) + " is not a prime power");
    }
    if (q % 12 != 1) {
      throw Error(ErrorCode::BadFieldCongruence, "q = " + std::to_string(q) + " is not 1 mod 12");
    }
    if (q > config.max_q) {
      throw Error(ErrorCode::TooLarge, "q = " + std::to_string(q) + " exceeds the maximum " +
                                           std::to_string(config.max_q));
    }
    fields.push_back(q);
  }
  if (config.q_range) {
    const auto [lo, hi] = *config.q_range;
    if (lo > hi) throw Error(ErrorCode::BadArgument, "empty q range");
    for (std::uint32_t q : fields_in_range(lo, std::min(hi, config.max_q))) fields.push_back(q);
  }
  std::sort(fields.begin(), fields.end());
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
  return fields;
}

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint32_t> fields;
  try {
    fields = resolve_sweep_fields(config);
  } catch (const Error& e) {
    diagnose(err, e);
    return kExitUsage;
  }

  if (config.format == OutputFormat::Csv) out << report_csv_header() << '\n';
  std::uint64_t tested = 0, agreements = 0;
  double max_residual = 0.0;

  for (std::uint32_t q : fields) {
    const auto [p, e] = *as_prime_power(q);
    const FieldPtr ctx = build_field(p, e, FieldOptions{config.max_q, std::nullopt});
    const GaussTable table = build_gauss_table(*ctx);

    struct Outcome {
      TraceReport report;
      std::string diagnostic;
    };
    std::vector<Outcome> outcomes(config.curves_per_q);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
      for (std::uint32_t i = next++; i < config.curves_per_q; i = next++) {
        SplitMix64 rng = substream(config.seed, q, i);
        const Curve curve = random_curve(*ctx, rng);
        try {
          outcomes[i].report =
              make_trace_report(curve, table, kMethodAll, config.tolerance.value_or(-1.0));
        } catch (const Error& ex) {
          // Keep the oracle result and mark the record as a disagreement.
          TraceReport r = make_trace_report(curve, table, kMethodOracle);
          r.agree = false;
          outcomes[i].report = r;
          outcomes[i].diagnostic = std::string(to_string(ex.code())) + ": " + ex.what();
        }
      }
    };
    const unsigned threads = std::max(1u, std::min(config.threads, config.curves_per_q));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (const Outcome& o : outcomes) {
      ++tested;
      if (o.report.agree) ++agreements;
      max_residual = std::max({max_residual, o.report.residual_thm1.value_or(0.0),
                               o.report.residual_thm2.value_or(0.0)});
      if (!o.diagnostic.empty()) {
        err << "q = " << q << ", (a, b) = (" << o.report.a << ", " << o.report.b
            << "): " << o.diagnostic << '\n';
      }
      out << (config.format == OutputFormat::Json ? report_json(o.report) : report_csv_row(o.report))
          << '\n';
    }
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ordered_json summary;
  summary["curves_tested"] = tested;
  summary["agreements"] = agreements;
  summary["max_residual"] = max_residual;
  if (config.timing) summary["elapsed"] = elapsed;
  if (config.format == OutputFormat::Json) {
    out << ordered_json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "# summary,curves_tested=" << tested << ",agreements=" << agreements
        << ",max_residual=" << ordered_json(max_residual).dump();
    if (config.timing) out << ",elapsed=" << ordered_json(elapsed).dump();
    out << '\n';
  }
  err << "sweep: " << agreements << "/" << tested << " agreements, max residual " << max_residual
      << ", elapsed " << elapsed << " s\n";
  return agreements == tested ? kExitOk : kExitDisagree;
}

int run_identities(const IdentitiesCommand& cmd, std::ostream& out, std::ostream& err) {
  std::vector<SuiteEntry> entries;
  int sign = 0;
  std::uint32_t q = 0;
  try {
    if (cmd.p == 2) {
      throw Error(ErrorCode::BadArgument, "identity suite requires odd characteristic");
    }
    const FieldPtr ctx = build_field(cmd.p, cmd.e, FieldOptions{cmd.max_q, std::nullopt});
    q = ctx->q();
    const GaussTable table = build_gauss_table(*ctx);
    IdentitySuiteOptions options;
    options.trials = cmd.trials;
    options.seed = cmd.seed;
    options.tolerance = cmd.tolerance.value_or(-1.0);
    entries = run_identity_suite(table, options);
    sign = special_identities_report(table, options.tolerance).quadratic_gauss_sign;
  } catch (const Error& e) {
    diagnose(err, e);
    return kExitUsage;
  }

  const bool passed = suite_passed(entries);
  if (cmd.format == OutputFormat::Json) {
    for (const SuiteEntry& s : entries) {
      ordered_json j;
      j["identity"] = s.name;
      j["status"] = to_string(s.status);
      j["checks"] = s.checks;
      j["max_deviation"] = s.max_deviation;
      j["note"] = s.note;
      out << j.dump() << '\n';
    }
    ordered_json summary;
    summary["q"] = q;
    summary["passed"] = passed;
    summary["quadratic_gauss_sign"] = sign == 0 ? ordered_json(nullptr) : ordered_json(sign > 0 ? "+" : "-");
    out << ordered_json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "identity,status,checks,max_deviation,note\n";
    for (const SuiteEntry& s : entries) {
      out << ordered_json(s.name).dump() << ',' << to_string(s.status) << ',' << s.checks << ','
          << ordered_json(s.max_deviation).dump() << ',' << ordered_json(s.note).dump() << '\n';
    }
    out << "# summary,q=" << q << ",passed=" << (passed ? "true" : "false")
        << ",quadratic_gauss_sign=" << (sign == 0 ? "" : sign > 0 ? "+" : "-") << '\n';
  }
  return passed ? kExitOk : kExitDisagree;
}

}  // namespace frobtrace::cli
