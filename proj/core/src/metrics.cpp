#include "netdiv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netdiv/errors.hpp"

namespace netdiv {

std::optional<ProportionalWeights> proportional_weights(const Graph& g, NodeIndex i,
                                                        bool include_self) {
  const auto neighbors = g.out_neighbors(i, include_self);
  if (neighbors.empty()) return std::nullopt;

  double total = 0.0;
  for (const auto& [j, w] : neighbors) total += w;

  ProportionalWeights pw;
  pw.focal = i;
  pw.entries.reserve(neighbors.size());
  for (const auto& [j, w] : neighbors) pw.entries.emplace_back(j, w / total);
  return pw;
}

std::optional<double> normalized_entropy(const Graph& g, NodeIndex i, bool include_self) {
  const auto neighbors = g.out_neighbors(i, include_self);
  const std::size_t k = neighbors.size();
  if (k <= 1) return std::nullopt;

  double total = 0.0;
  double weighted_log = 0.0;  // sum of w * log(w)
  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0;
  for (const auto& [j, w] : neighbors) {
    total += w;
    weighted_log += w * std::log(w);
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  if (wmin == wmax) return 1.0;  // attention divided evenly

  // -sum p log p with p = w/total, rearranged to avoid forming each p.
  const double h = std::log(total) - weighted_log / total;
  const double d = h / std::log(static_cast<double>(k));
  return std::clamp(d, 0.0, 1.0);
}

std::optional<double> burt_constraint(const Graph& g, NodeIndex i) {
  const auto contacts = g.out_neighbors(i, /*include_self=*/false);
  if (contacts.empty()) return std::nullopt;

  double total = 0.0;
  for (const auto& [j, w] : contacts) total += w;

  double constraint = 0.0;
  for (const auto& [j, wj] : contacts) {
    const double p_ij = wj / total;
    double indirect = 0.0;
    for (const auto& [q, wq] : contacts) {
      if (q == j) continue;
      const double q_total = g.out_weight_total(q, /*include_self=*/false);
      if (q_total <= 0.0) continue;
      const double w_qj = g.weight(q, j);
      if (w_qj > 0.0) indirect += (wq / total) * (w_qj / q_total);
    }
    const double c_ij = p_ij + indirect;
    constraint += c_ij * c_ij;
  }
  return constraint;
}

std::optional<double> local_clustering(const Graph& g, NodeIndex i) {
  const auto neighbors = g.out_neighbors(i, /*include_self=*/false);
  const std::size_t d = neighbors.size();
  if (d < 2) return std::nullopt;

  std::size_t links = 0;
  for (const auto& [q, wq] : neighbors) {
    for (const auto& [r, wr] : neighbors) {
      if (q != r && g.weight(q, r) > 0.0) ++links;
    }
  }
  return static_cast<double>(links) / static_cast<double>(d * (d - 1));
}

MetricReport compute_report(const Graph& g, const ThresholdPolicy& policy,
                            const BetweennessParams& params, bool include_self,
                            unsigned threads) {
  const Graph weighted =
      apply_threshold(g, ThresholdPolicy{policy.theta, ThresholdMode::filter_weighted});
  std::optional<Graph> binarized;
  if (policy.mode == ThresholdMode::binarize) {
    binarized = apply_threshold(g, policy);
  }
  const Graph& topo = binarized ? *binarized : weighted;

  const auto betweenness = k_betweenness(topo, params, threads);

  MetricReport report;
  report.rows.reserve(g.node_count());
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    NodeMetrics row;
    row.node = g.label(i);
    row.degree = topo.out_degree(i);
    const double total = weighted.out_weight_total(i, /*include_self=*/true);
    row.self_weight_share = total > 0.0 ? weighted.self_weight(i) / total : 0.0;
    row.entropy = normalized_entropy(weighted, i, include_self);
    row.k_betweenness = betweenness[i];
    row.constraint = burt_constraint(topo, i);
    row.clustering = local_clustering(topo, i);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const NodeMetrics& a, const NodeMetrics& b) { return a.node < b.node; });
  return report;
}

}  // namespace netdiv
