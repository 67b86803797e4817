// frobtrace: trace of Frobenius via finite-field hypergeometric series.
//
//   frobtrace trace --p 13 --e 1 --a 1 --b 1 --method all
//   frobtrace sweep --q 13,25,37 --curves 25 --seed 42
//   frobtrace identities --p 13 --e 1 --trials 50

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "frobtrace/cli.hpp"

namespace {

using frobtrace::cli::OutputFormat;

const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::Json},
                                                   {"csv", OutputFormat::Csv}};

const std::map<std::string, unsigned> kMethods{{"thm1", frobtrace::kMethodThm1},
                                               {"thm2", frobtrace::kMethodThm2},
                                               {"oracle", frobtrace::kMethodOracle},
                                               {"all", frobtrace::kMethodAll}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace of Frobenius via Gaussian hypergeometric series over F_q"};
  app.require_subcommand(1);

  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::Json;

  frobtrace::cli::TraceCommand trace;
  std::string method = "all";
  auto* trace_cmd = app.add_subcommand("trace", "Trace of Frobenius for y^2 = x^3 + ax + b");
  trace_cmd->add_option("--p", trace.p, "Characteristic")->required();
  trace_cmd->add_option("--e", trace.e, "Extension degree")->default_val(1);
  trace_cmd->add_option("--a", trace.a, "Index of a in F_q")->required();
  trace_cmd->add_option("--b", trace.b, "Index of b in F_q")->required();
  trace_cmd->add_option("--method", method, "thm1 | thm2 | oracle | all")
      ->check(CLI::IsMember({"thm1", "thm2", "oracle", "all"}))
      ->default_val("all");

  frobtrace::cli::SweepConfig sweep;
  std::vector<std::uint32_t> range;
  auto* sweep_cmd = app.add_subcommand("sweep", "Formula-vs-oracle comparison on random curves");
  sweep_cmd->add_option("--q", sweep.q_list, "Explicit field sizes")->delimiter(',');
  sweep_cmd->add_option("--range", range, "q_min q_max, filtered to prime powers = 1 mod 12")
      ->expected(2);
  sweep_cmd->add_option("--curves", sweep.curves_per_q, "Curves per field")->default_val(25);
  sweep_cmd->add_option("--seed", sweep.seed, "RNG seed")->default_val(42);
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads per field")->default_val(1);
  sweep_cmd->add_flag("--timing", sweep.timing, "Include elapsed time in the summary record");

  frobtrace::cli::IdentitiesCommand identities;
  auto* id_cmd = app.add_subcommand("identities", "Character-sum identity suite for one field");
  id_cmd->add_option("--p", identities.p, "Characteristic")->required();
  id_cmd->add_option("--e", identities.e, "Extension degree")->default_val(1);
  id_cmd->add_option("--trials", identities.trials, "Random instances per sampled identity")
      ->default_val(50);
  id_cmd->add_option("--seed", identities.seed, "RNG seed")->default_val(0);

  for (auto* cmd : {trace_cmd, sweep_cmd, id_cmd}) {
    cmd->add_option("--format", format, "json | csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    cmd->add_option("--tolerance", tolerance, "Absolute tolerance (default 1e-6 q)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : frobtrace::cli::kExitUsage;
  }

  std::uint32_t max_q = frobtrace::kDefaultMaxQ;
  try {
    max_q = frobtrace::cli::max_q_from_env();
  } catch (const frobtrace::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return frobtrace::cli::kExitUsage;
  }

  if (*trace_cmd) {
    trace.methods = kMethods.at(method);
    trace.format = format;
    trace.tolerance = tolerance;
    trace.max_q = max_q;
    return frobtrace::cli::run_trace(trace, std::cout, std::cerr);
  }
  if (*sweep_cmd) {
    if (range.size() == 2) sweep.q_range = std::pair{range[0], range[1]};
    if (sweep.q_list.empty() && !sweep.q_range) {
      std::cerr << "error: sweep needs --q or --range\n";
      return frobtrace::cli::kExitUsage;
    }
    sweep.format = format;
    sweep.tolerance = tolerance;
    sweep.max_q = max_q;
    return frobtrace::cli::run_sweep(sweep, std::cout, std::cerr);
  }
  identities.format = format;
  identities.tolerance = tolerance;
  identities.max_q = max_q;
  return frobtrace::cli::run_identities(identities, std::cout, std::cerr);
}
