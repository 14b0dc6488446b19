#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netdiv {

using NodeIndex = std::uint32_t;
using Weight = double;

struct Edge {
  NodeIndex src{0};
  NodeIndex dst{0};
  Weight weight{1.0};
};

enum class ThresholdMode {
  filter_weighted,  // drop ties below theta, keep surviving weights
  binarize,         // drop ties below theta, set surviving weights to 1
};

struct ThresholdPolicy {
  double theta{0.0};
  ThresholdMode mode{ThresholdMode::filter_weighted};
};

// Weighted graph, directed or undirected, immutable once built. Node labels
// are arbitrary strings; internally nodes are dense indices 0..n-1 and the
// label<->index mapping is stable for the lifetime of the graph. Undirected
// graphs keep a symmetric adjacency. Self-loops are allowed; ties of weight
// zero do not exist (callers drop them before construction).
class Graph {
 public:
  // `edges` holds each tie once: ordered (src,dst) pairs for directed graphs,
  // one row per unordered pair for undirected ones (orientation free).
  // Throws ValidationError on duplicate labels, duplicate pairs, out-of-range
  // indices, or non-positive/non-finite weights.
  Graph(std::vector<std::string> labels, bool directed, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  bool directed() const noexcept { return directed_; }
  bool has_self_loops() const noexcept { return self_loop_count_ > 0; }
  std::size_t self_loop_count() const noexcept { return self_loop_count_; }

  // Canonical tie count: ordered pairs for directed graphs, unordered pairs
  // (src <= dst by index) for undirected ones.
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::string& label(NodeIndex i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeIndex> index_of(std::string_view label) const;
  // Like index_of but throws LookupError for unknown labels.
  NodeIndex require_index(std::string_view label) const;

  // Outgoing ties of i in ascending neighbor index. The self-loop, when one
  // exists, is included only if include_self. Throws LookupError when i is
  // out of range.
  std::vector<std::pair<NodeIndex, Weight>> out_neighbors(NodeIndex i,
                                                          bool include_self) const;

  // Raw adjacency row of i (self-loop included), ascending neighbor index.
  const std::vector<std::pair<NodeIndex, Weight>>& adjacency(NodeIndex i) const;

  Weight weight(NodeIndex src, NodeIndex dst) const;  // 0 when no tie
  Weight self_weight(NodeIndex i) const { return weight(i, i); }
  Weight out_weight_total(NodeIndex i, bool include_self) const;
  // Number of non-self outgoing contacts.
  int out_degree(NodeIndex i) const;

 private:
  void check_index(NodeIndex i) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  bool directed_{false};
  std::vector<Edge> edges_;  // canonical, sorted by (src,dst)
  std::vector<std::vector<std::pair<NodeIndex, Weight>>> adj_;
  std::size_t self_loop_count_{0};
};

// Returns a new graph with the policy applied. The node set is unchanged;
// nodes may become isolated. Idempotent for a fixed policy.
Graph apply_threshold(const Graph& g, const ThresholdPolicy& policy);

}  // namespace netdiv
