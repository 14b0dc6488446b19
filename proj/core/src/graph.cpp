#include "netdiv/graph.hpp"

#include <algorithm>
#include <cmath>

#include "netdiv/errors.hpp"

namespace netdiv {

Graph::Graph(std::vector<std::string> labels, bool directed, std::vector<Edge> edges)
    : labels_(std::move(labels)), directed_(directed) {
  index_.reserve(labels_.size());
  for (NodeIndex i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) {
      throw ValidationError("duplicate node label: " + labels_[i]);
    }
  }

  const auto n = labels_.size();
  for (auto& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw ValidationError("edge weight must be positive and finite");
    }
    if (!directed_ && e.dst < e.src) {
      std::swap(e.src, e.dst);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].src == edges[k - 1].src && edges[k].dst == edges[k - 1].dst) {
      throw ValidationError("duplicate edge: " + labels_[edges[k].src] + " -> " +
                            labels_[edges[k].dst]);
    }
  }
  edges_ = std::move(edges);

  adj_.resize(n);
  for (const auto& e : edges_) {
    adj_[e.src].emplace_back(e.dst, e.weight);
    if (e.src == e.dst) {
      ++self_loop_count_;
    } else if (!directed_) {
      adj_[e.dst].emplace_back(e.src, e.weight);
    }
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
  }
}

void Graph::check_index(NodeIndex i) const {
  if (i >= labels_.size()) {
    throw LookupError("node index " + std::to_string(i) + " out of range");
  }
}

const std::string& Graph::label(NodeIndex i) const {
  check_index(i);
  return labels_[i];
}

std::optional<NodeIndex> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Graph::require_index(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) {
    throw LookupError("unknown node: " + std::string(label));
  }
  return *idx;
}

std::vector<std::pair<NodeIndex, Weight>> Graph::out_neighbors(NodeIndex i,
                                                               bool include_self) const {
  check_index(i);
  std::vector<std::pair<NodeIndex, Weight>> out;
  out.reserve(adj_[i].size());
  for (const auto& [j, w] : adj_[i]) {
    if (j == i && !include_self) continue;
    out.emplace_back(j, w);
  }
  return out;
}

const std::vector<std::pair<NodeIndex, Weight>>& Graph::adjacency(NodeIndex i) const {
  check_index(i);
  return adj_[i];
}

Weight Graph::weight(NodeIndex src, NodeIndex dst) const {
  check_index(src);
  check_index(dst);
  const auto& row = adj_[src];
  auto it = std::lower_bound(row.begin(), row.end(), dst,
                             [](const auto& entry, NodeIndex key) { return entry.first < key; });
  if (it != row.end() && it->first == dst) return it->second;
  return 0.0;
}

Weight Graph::out_weight_total(NodeIndex i, bool include_self) const {
  check_index(i);
  Weight total = 0.0;
  for (const auto& [j, w] : adj_[i]) {
    if (j == i && !include_self) continue;
    total += w;
  }
  return total;
}

int Graph::out_degree(NodeIndex i) const {
  check_index(i);
  int degree = 0;
  for (const auto& [j, w] : adj_[i]) {
    if (j != i) ++degree;
  }
  return degree;
}

Graph apply_threshold(const Graph& g, const ThresholdPolicy& policy) {
  if (!std::isfinite(policy.theta) || policy.theta < 0.0) {
    throw ValidationError("threshold theta must be non-negative and finite");
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.weight < policy.theta) continue;
    const Weight w = policy.mode == ThresholdMode::binarize ? 1.0 : e.weight;
    kept.push_back(Edge{e.src, e.dst, w});
  }
  return Graph(g.labels(), g.directed(), std::move(kept));
}

}  // namespace netdiv
