#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netdiv/graph.hpp"

namespace netdiv {

enum class PairConvention {
  unordered_pairs,  // undirected graphs: each {j,l} counted once
  ordered_pairs,    // directed graphs: (j,l) and (l,j) counted separately
};

// cutoff: node pairs farther apart than this contribute nothing;
// std::nullopt means classic (unbounded) betweenness.
struct BetweennessParams {
  std::optional<int> cutoff{3};
  PairConvention convention{PairConvention::unordered_pairs};
};

// The convention appropriate for g's directedness, with the given cutoff.
BetweennessParams betweenness_params_for(const Graph& g, std::optional<int> cutoff);

// Shortest-path-counting betweenness with the single-source search truncated
// at the cutoff depth: C(i) sums, over pairs (j,l) with geodesic distance
// d(j,l) <= cutoff, the fraction of shortest j-l paths that pass through i.
// Runs on topology only (surviving weights are ignored); self-loops never
// participate. With threads > 1, per-source contributions are reduced in
// source index order so the output is bit-identical for any thread count.
std::vector<double> k_betweenness(const Graph& g, const BetweennessParams& params,
                                  unsigned threads = 1);

// Exhaustive verification twin of k_betweenness: enumerates every simple
// path up to the cutoff length between every pair, keeps minimum-length
// ones, and counts pass-through occurrences. Throws SizeError for graphs
// with more than 12 nodes.
std::vector<double> betweenness_oracle(const Graph& g, const BetweennessParams& params);

struct OracleCheckOptions {
  int trials{100};
  int max_nodes{10};
  double edge_probability{0.3};
  std::uint64_t seed{1};
};

struct OracleCheckResult {
  int trials{0};
  int comparisons{0};        // node scores compared
  double max_deviation{0.0};
  bool passed{false};
};

// Seeded random graphs, alternating directed/undirected, checked at cutoffs
// 1, 2, 3 and unbounded against the exhaustive oracle (tolerance 1e-9).
OracleCheckResult run_oracle_check(const OracleCheckOptions& opts);

}  // namespace netdiv
