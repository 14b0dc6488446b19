// netdiv: network diversity analytics over weighted directed edge lists.
//
// Subcommands: metrics, correlate, summarize, generate, oracle-check.
// Exit codes: 0 success, 2 flag/usage error, 3 input or I/O error,
// 4 oracle check failed. All state lives in flags; identical invocations
// produce byte-identical output.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netdiv/betweenness.hpp"
#include "netdiv/edge_list.hpp"
#include "netdiv/errors.hpp"
#include "netdiv/format.hpp"
#include "netdiv/generators.hpp"
#include "netdiv/graph.hpp"
#include "netdiv/metrics.hpp"
#include "netdiv/stats.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCheckFailed = 4;

struct CommonOptions {
  std::string input;
  bool directed = false;
  double theta = 0.0;
  std::string threshold_mode = "filter";
  std::string cutoff = "3";
  bool include_self = true;
  std::string format = "csv";
  std::string output;
};

std::optional<int> parse_cutoff(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "unbounded") return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw CLI::ValidationError("--cutoff", "expected a positive integer or 'inf'");
  }
  return value;
}

std::string validate_cutoff(const std::string& text) {
  try {
    parse_cutoff(text);
  } catch (const CLI::ValidationError&) {
    return "expected a positive integer or 'inf', got '" + text + "'";
  }
  return {};
}

netdiv::ThresholdPolicy policy_of(const CommonOptions& opts) {
  return netdiv::ThresholdPolicy{
      opts.theta, opts.threshold_mode == "binarize" ? netdiv::ThresholdMode::binarize
                                                    : netdiv::ThresholdMode::filter_weighted};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw netdiv::ValidationError("cannot open output file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw netdiv::ValidationError("failed writing output file: " + path);
}

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_metrics_flags) {
  cmd->add_option("-i,--input", opts.input, "edge-list CSV (src,dst,weight)")->required();
  cmd->add_flag("--directed", opts.directed, "treat the edge list as directed");
  cmd->add_option("--theta", opts.theta, "threshold for tie presence (default 0)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threshold-mode", opts.threshold_mode,
                  "filter keeps surviving weights, binarize sets them to 1")
      ->check(CLI::IsMember({"filter", "binarize"}));
  cmd->add_option("--cutoff", opts.cutoff,
                  "geodesic distance cap for betweenness/summary, or 'inf' (default 3)")
      ->check(CLI::Validator(validate_cutoff, "CUTOFF"));
  if (with_metrics_flags) {
    cmd->add_flag("--include-self,!--exclude-self", opts.include_self,
                  "count reflexive ties in entropy (default on)");
  }
  cmd->add_option("-f,--format", opts.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", opts.output, "output file (default standard output)");
}

std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network diversity analytics: tie-strength entropy, distance-capped "
               "betweenness, constraint and correlation reports over edge-list CSVs"};
  app.require_subcommand(1);

  CommonOptions metrics_opts;
  auto* metrics_cmd = app.add_subcommand("metrics", "per-node metric report");
  add_common_options(metrics_cmd, metrics_opts, /*with_metrics_flags=*/true);

  CommonOptions correlate_opts;
  std::string perf_path;
  auto* correlate_cmd =
      app.add_subcommand("correlate", "correlate metrics with a performance vector");
  add_common_options(correlate_cmd, correlate_opts, /*with_metrics_flags=*/true);
  correlate_cmd->add_option("-p,--perf", perf_path, "performance CSV (node,value)")
      ->required();

  CommonOptions summarize_opts;
  auto* summarize_cmd = app.add_subcommand("summarize", "network summary statistics");
  add_common_options(summarize_cmd, summarize_opts, /*with_metrics_flags=*/false);

  auto* generate_cmd = app.add_subcommand("generate", "emit a synthetic fixture graph");
  std::string kind;
  int gen_n = 8;
  double gen_p = 0.3;
  std::uint64_t gen_seed = 1;
  std::string gen_output;
  std::string gen_perf_output;
  bool gen_directed = false;
  generate_cmd
      ->add_option("-k,--kind", kind,
                   "fixture kind: fig1, star, complete, ring, random, broker-specialist")
      ->required()
      ->check(CLI::IsMember({"fig1", "star", "complete", "ring", "random", "broker-specialist"}));
  generate_cmd->add_option("-n,--nodes", gen_n, "node count (default 8)");
  generate_cmd->add_option("-p,--edge-prob", gen_p, "edge probability for random fixtures")
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("-s,--seed", gen_seed, "random seed (default 1)");
  generate_cmd->add_flag("--directed", gen_directed, "directed variant (random only)");
  generate_cmd->add_option("-o,--output", gen_output, "edge-list output file (default stdout)");
  generate_cmd->add_option("--perf-output", gen_perf_output,
                           "performance CSV output (broker-specialist only)");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "verify fast betweenness against the exhaustive oracle");
  netdiv::OracleCheckOptions oracle_opts;
  std::string oracle_format = "csv";
  std::string oracle_output;
  oracle_cmd->add_option("--trials", oracle_opts.trials, "random graphs to test (default 100)")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-n", oracle_opts.max_nodes, "largest graph size (default 10)")
      ->check(CLI::Range(2, 12));
  oracle_cmd
      ->add_option("-p,--edge-prob", oracle_opts.edge_probability,
                   "edge probability (default 0.3)")
      ->check(CLI::Range(0.0, 1.0));
  oracle_cmd->add_option("-s,--seed", oracle_opts.seed, "random seed (default 1)");
  oracle_cmd->add_option("-f,--format", oracle_format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  oracle_cmd->add_option("-o,--output", oracle_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << single_line(e.what()) << " (run with --help)\n";
    return kExitUsage;
  }

  try {
    if (metrics_cmd->parsed()) {
      const auto g = netdiv::load_edge_list_file(metrics_opts.input, metrics_opts.directed);
      const auto params = netdiv::betweenness_params_for(g, parse_cutoff(metrics_opts.cutoff));
      const auto report = netdiv::compute_report(g, policy_of(metrics_opts), params,
                                                 metrics_opts.include_self);
      write_output(metrics_opts.output, metrics_opts.format == "json"
                                            ? netdiv::report_to_json(report)
                                            : netdiv::report_to_csv(report));
    } else if (correlate_cmd->parsed()) {
      const auto g = netdiv::load_edge_list_file(correlate_opts.input, correlate_opts.directed);
      const auto params =
          netdiv::betweenness_params_for(g, parse_cutoff(correlate_opts.cutoff));
      const auto report = netdiv::compute_report(g, policy_of(correlate_opts), params,
                                                 correlate_opts.include_self);
      const auto perf = netdiv::load_performance_file(perf_path);
      const auto table = netdiv::correlate_report(report, perf);
      write_output(correlate_opts.output, correlate_opts.format == "json"
                                              ? netdiv::correlations_to_json(table)
                                              : netdiv::correlations_to_csv(table));
    } else if (summarize_cmd->parsed()) {
      const auto g = netdiv::load_edge_list_file(summarize_opts.input, summarize_opts.directed);
      const auto thresholded = netdiv::apply_threshold(g, policy_of(summarize_opts));
      const auto summary =
          netdiv::summarize(thresholded, parse_cutoff(summarize_opts.cutoff));
      write_output(summarize_opts.output, summarize_opts.format == "json"
                                              ? netdiv::summary_to_json(summary)
                                              : netdiv::summary_to_csv(summary));
    } else if (generate_cmd->parsed()) {
      if (kind == "broker-specialist") {
        const auto fixture = netdiv::fixtures::broker_specialist(gen_n, gen_seed);
        write_output(gen_output, netdiv::serialize_edge_list(fixture.graph));
        if (!gen_perf_output.empty()) {
          std::vector<std::pair<std::string, double>> rows(fixture.performance.values.begin(),
                                                           fixture.performance.values.end());
          std::sort(rows.begin(), rows.end());
          std::string out = "node,value\n";
          char buf[32];
          for (const auto& [node, value] : rows) {
            out += node;
            out += ',';
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
            out.append(buf, ptr);
            out += '\n';
          }
          write_output(gen_perf_output, out);
        }
      } else {
        if (!gen_perf_output.empty()) {
          throw netdiv::ValidationError(
              "--perf-output is only produced by the broker-specialist fixture");
        }
        netdiv::Graph g = [&] {
          if (kind == "fig1") return netdiv::fixtures::fig1();
          if (kind == "star") return netdiv::fixtures::star(gen_n);
          if (kind == "complete") return netdiv::fixtures::complete_graph(gen_n);
          if (kind == "ring") return netdiv::fixtures::ring(gen_n);
          return netdiv::fixtures::random_gnp(gen_n, gen_p, gen_seed, gen_directed);
        }();
        write_output(gen_output, netdiv::serialize_edge_list(g));
      }
    } else if (oracle_cmd->parsed()) {
      const auto result = netdiv::run_oracle_check(oracle_opts);
      write_output(oracle_output, oracle_format == "json"
                                      ? netdiv::oracle_check_to_json(result)
                                      : netdiv::oracle_check_to_csv(result));
      if (!result.passed) {
        std::cerr << "error: oracle check failed, max deviation "
                  << netdiv::format_sig9(result.max_deviation) << "\n";
        return kExitCheckFailed;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << single_line(e.what()) << "\n";
    return kExitInput;
  }
  return 0;
}
