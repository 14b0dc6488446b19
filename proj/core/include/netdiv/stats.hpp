#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netdiv/graph.hpp"
#include "netdiv/metrics.hpp"

namespace netdiv {

enum class PearsonStatus {
  ok,
  insufficient_pairs,  // fewer than 2 complete pairs
  zero_variance,       // one margin is constant
};

const char* to_string(PearsonStatus s);

struct PearsonResult {
  PearsonStatus status{PearsonStatus::insufficient_pairs};
  double r{0.0};  // meaningful only when status == ok
  int n_used{0};  // pairs remaining after missing-value removal
};

// Product-moment correlation with pairwise deletion: pairs where either side
// is missing are dropped. Degenerate inputs are reported in the status, not
// thrown. Throws ValidationError when the sequences differ in length.
PearsonResult pearson(std::span<const std::optional<double>> xs,
                      std::span<const std::optional<double>> ys);

struct NetworkSummary {
  std::size_t n{0};
  double mean_out_degree{0.0};  // self-loops excluded
  // Mean p_ii over nodes with positive out-weight; nullopt when none qualify.
  std::optional<double> mean_self_weight_share;
  // Mean geodesic distance over ordered pairs reachable within the cutoff;
  // nullopt when no such pair exists.
  std::optional<double> mean_geodesic_distance;
  // Largest geodesic distance when every ordered pair is reachable within
  // the cutoff; nullopt otherwise (the diameter is not bounded by the cap).
  std::optional<int> diameter_capped;
};

// Structural summary of the graph as seen under the distance cutoff
// (nullopt cutoff = no cap). Distances ignore weights and self-loops.
NetworkSummary summarize(const Graph& g, std::optional<int> cutoff);

// Node-aligned outcome values (citation counts and the like). Nodes absent
// from the map are treated as missing.
struct PerformanceVector {
  std::unordered_map<std::string, double> values;
};

// CSV `node,value` with an optional `node,value` header. Duplicate nodes are
// rejected; an empty file is a valid all-missing vector.
PerformanceVector load_performance_csv(std::string_view text);
PerformanceVector load_performance_csv(std::istream& in);
PerformanceVector load_performance_file(const std::string& path);

struct MetricCorrelation {
  std::string metric;
  PearsonResult result;
};

// One row per metric column (entropy, k_betweenness, constraint,
// clustering), each correlated against the performance vector with pairwise
// missing-value removal. A degenerate column yields a typed status row and
// never aborts the other metrics. Throws ValidationError when the
// performance vector references a node that is not in the report.
std::vector<MetricCorrelation> correlate_report(const MetricReport& report,
                                                const PerformanceVector& perf);

}  // namespace netdiv
