#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netdiv/betweenness.hpp"
#include "netdiv/graph.hpp"

namespace netdiv {

// Row-normalized tie strengths of one focal node: p_ij = w_ij / sum_j w_ij
// over the neighbor set selected by include_self. Only positive entries,
// ascending neighbor index; the entries sum to 1.
struct ProportionalWeights {
  NodeIndex focal{0};
  std::vector<std::pair<NodeIndex, double>> entries;

  int contact_count() const noexcept { return static_cast<int>(entries.size()); }
};

// nullopt when the selected neighbor set carries no weight.
std::optional<ProportionalWeights> proportional_weights(const Graph& g, NodeIndex i,
                                                        bool include_self);

// Shannon entropy of the proportional tie strengths divided by log of the
// contact count: 1 = attention divided evenly, near 0 = concentrated on one
// contact. Independent of the logarithm base. nullopt with fewer than two
// contacts, where the normalization is indeterminate.
std::optional<double> normalized_entropy(const Graph& g, NodeIndex i, bool include_self);

// Burt's constraint: C(i) = sum_j (p_ij + sum_q p_iq p_qj)^2 over i's
// non-self contacts j, with q ranging over i's other non-self contacts and
// all p rows normalized without self-loops. Higher constraint = fewer
// structural holes = less brokerage. nullopt without non-self contacts.
std::optional<double> burt_constraint(const Graph& g, NodeIndex i);

// Fraction of ordered pairs of i's non-self neighbors that are directly
// tied. nullopt when i has fewer than two such neighbors.
std::optional<double> local_clustering(const Graph& g, NodeIndex i);

struct NodeMetrics {
  std::string node;
  int degree{0};                  // non-self contacts on the thresholded graph
  double self_weight_share{0.0};  // p_ii; 0 without a self-loop
  std::optional<double> entropy;
  double k_betweenness{0.0};
  std::optional<double> constraint;
  std::optional<double> clustering;
};

struct MetricReport {
  std::vector<NodeMetrics> rows;  // one per node, sorted by label
};

// Full per-node table. Entropy and self-weight share are computed on the
// weighted graph (weight-filtered at theta, never binarized); betweenness,
// constraint and clustering on the thresholded graph, with betweenness
// ignoring surviving weights entirely. No node is ever dropped.
MetricReport compute_report(const Graph& g, const ThresholdPolicy& policy,
                            const BetweennessParams& params, bool include_self,
                            unsigned threads = 1);

}  // namespace netdiv
