#include "netdiv/betweenness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "netdiv/errors.hpp"
#include "netdiv/generators.hpp"

namespace netdiv {

namespace {

void validate_params(const Graph& g, const BetweennessParams& params) {
  if (params.cutoff && *params.cutoff < 1) {
    throw ValidationError("betweenness cutoff must be >= 1");
  }
  const bool wants_ordered = params.convention == PairConvention::ordered_pairs;
  if (wants_ordered != g.directed()) {
    throw ValidationError(
        "pair convention does not match graph directedness: undirected graphs "
        "use unordered pairs, directed graphs use ordered pairs");
  }
}

// Index-only adjacency without self-loops; geodesics never revisit a node.
std::vector<std::vector<NodeIndex>> topology_rows(const Graph& g) {
  std::vector<std::vector<NodeIndex>> rows(g.node_count());
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    for (const auto& [j, w] : g.adjacency(i)) {
      if (j != i) rows[i].push_back(j);
    }
  }
  return rows;
}

struct BrandesScratch {
  explicit BrandesScratch(std::size_t n)
      : dist(n, -1), sigma(n, 0.0), delta(n, 0.0), preds(n) {
    order.reserve(n);
    queue.reserve(n);
  }

  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::vector<NodeIndex>> preds;
  std::vector<NodeIndex> order;
  std::vector<NodeIndex> queue;
};

// One truncated single-source pass; adds this source's dependency scores
// into `out`.
void accumulate_source(const std::vector<std::vector<NodeIndex>>& rows, NodeIndex s,
                       std::optional<int> cutoff, BrandesScratch& sc,
                       std::vector<double>& out) {
  sc.order.clear();
  sc.queue.clear();
  sc.dist[s] = 0;
  sc.sigma[s] = 1.0;
  sc.delta[s] = 0.0;
  sc.preds[s].clear();
  sc.queue.push_back(s);

  std::size_t head = 0;
  while (head < sc.queue.size()) {
    const NodeIndex v = sc.queue[head++];
    sc.order.push_back(v);
    if (cutoff && sc.dist[v] == *cutoff) continue;  // horizon nodes are targets only
    for (const NodeIndex w : rows[v]) {
      if (sc.dist[w] < 0) {
        sc.dist[w] = sc.dist[v] + 1;
        sc.sigma[w] = 0.0;
        sc.delta[w] = 0.0;
        sc.preds[w].clear();
        sc.queue.push_back(w);
      }
      if (sc.dist[w] == sc.dist[v] + 1) {
        sc.sigma[w] += sc.sigma[v];
        sc.preds[w].push_back(v);
      }
    }
  }

  // Dependency accumulation, farthest vertices first.
  for (auto it = sc.order.rbegin(); it != sc.order.rend(); ++it) {
    const NodeIndex w = *it;
    for (const NodeIndex v : sc.preds[w]) {
      sc.delta[v] += sc.sigma[v] / sc.sigma[w] * (1.0 + sc.delta[w]);
    }
    if (w != s) out[w] += sc.delta[w];
  }

  for (const NodeIndex v : sc.order) sc.dist[v] = -1;
}

}  // namespace

BetweennessParams betweenness_params_for(const Graph& g, std::optional<int> cutoff) {
  return BetweennessParams{
      cutoff,
      g.directed() ? PairConvention::ordered_pairs : PairConvention::unordered_pairs};
}

std::vector<double> k_betweenness(const Graph& g, const BetweennessParams& params,
                                  unsigned threads) {
  validate_params(g, params);
  const auto n = static_cast<NodeIndex>(g.node_count());
  std::vector<double> result(n, 0.0);
  const auto rows = topology_rows(g);

  if (threads <= 1 || n < 2) {
    BrandesScratch sc(n);
    for (NodeIndex s = 0; s < n; ++s) {
      accumulate_source(rows, s, params.cutoff, sc, result);
    }
  } else {
    // Per-source contribution vectors, reduced afterwards in source index
    // order: the floating-point operation sequence matches the sequential
    // path exactly, so any thread count yields bit-identical output.
    std::vector<std::vector<double>> contrib(n);
    std::atomic<NodeIndex> next{0};
    const unsigned worker_count = std::min<unsigned>(threads, n);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
      workers.emplace_back([&] {
        BrandesScratch sc(n);
        while (true) {
          const NodeIndex s = next.fetch_add(1);
          if (s >= n) break;
          contrib[s].assign(n, 0.0);
          accumulate_source(rows, s, params.cutoff, sc, contrib[s]);
        }
      });
    }
    for (auto& w : workers) w.join();
    for (NodeIndex s = 0; s < n; ++s) {
      for (NodeIndex v = 0; v < n; ++v) result[v] += contrib[s][v];
    }
  }

  if (params.convention == PairConvention::unordered_pairs) {
    for (auto& c : result) c /= 2.0;
  }
  return result;
}

std::vector<double> betweenness_oracle(const Graph& g, const BetweennessParams& params) {
  validate_params(g, params);
  const auto n = static_cast<int>(g.node_count());
  if (n > 12) {
    throw SizeError("betweenness oracle is exhaustive and limited to 12 nodes, got " +
                    std::to_string(n));
  }
  const auto rows = topology_rows(g);
  const int depth_limit =
      params.cutoff ? std::min(*params.cutoff, n - 1) : n - 1;

  std::vector<double> result(n, 0.0);
  std::vector<int> best(n);
  std::vector<double> path_count(n);
  std::vector<std::vector<double>> through(n, std::vector<double>(n));
  std::vector<char> on_path(n);
  std::vector<NodeIndex> path;

  for (int source = 0; source < n; ++source) {
    std::fill(best.begin(), best.end(), n + 1);
    std::fill(path_count.begin(), path_count.end(), 0.0);
    for (auto& row : through) std::fill(row.begin(), row.end(), 0.0);
    std::fill(on_path.begin(), on_path.end(), 0);

    path.clear();
    path.push_back(static_cast<NodeIndex>(source));
    on_path[source] = 1;

    // Depth-first over all simple paths of length <= depth_limit.
    auto dfs = [&](auto&& self, NodeIndex v, int depth) -> void {
      for (const NodeIndex w : rows[v]) {
        if (on_path[w]) continue;
        const int d = depth + 1;
        if (d < best[w]) {
          best[w] = d;
          path_count[w] = 1.0;
          std::fill(through[w].begin(), through[w].end(), 0.0);
          for (std::size_t k = 1; k < path.size(); ++k) through[w][path[k]] += 1.0;
        } else if (d == best[w]) {
          path_count[w] += 1.0;
          for (std::size_t k = 1; k < path.size(); ++k) through[w][path[k]] += 1.0;
        }
        if (d < depth_limit) {
          on_path[w] = 1;
          path.push_back(w);
          self(self, w, d);
          path.pop_back();
          on_path[w] = 0;
        }
      }
    };
    if (depth_limit >= 1) dfs(dfs, static_cast<NodeIndex>(source), 0);

    for (int target = 0; target < n; ++target) {
      if (target == source || best[target] > depth_limit) continue;
      for (int i = 0; i < n; ++i) {
        if (through[target][i] > 0.0) {
          result[i] += through[target][i] / path_count[target];
        }
      }
    }
  }

  if (params.convention == PairConvention::unordered_pairs) {
    for (auto& c : result) c /= 2.0;
  }
  return result;
}

OracleCheckResult run_oracle_check(const OracleCheckOptions& opts) {
  if (opts.trials < 1) throw ValidationError("oracle check needs at least one trial");
  if (opts.max_nodes < 2 || opts.max_nodes > 12) {
    throw ValidationError("oracle check max nodes must be in [2,12]");
  }
  if (!(opts.edge_probability >= 0.0 && opts.edge_probability <= 1.0)) {
    throw ValidationError("edge probability must be in [0,1]");
  }

  std::mt19937_64 rng(opts.seed);
  const std::optional<int> cutoffs[] = {1, 2, 3, std::nullopt};

  OracleCheckResult res;
  res.trials = opts.trials;
  for (int t = 0; t < opts.trials; ++t) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_nodes - 1));
    const bool directed = (t % 2) == 1;
    const auto g = fixtures::random_gnp(n, opts.edge_probability, rng(), directed);
    for (const auto& cutoff : cutoffs) {
      const auto params = betweenness_params_for(g, cutoff);
      const auto fast = k_betweenness(g, params);
      const auto slow = betweenness_oracle(g, params);
      for (std::size_t i = 0; i < fast.size(); ++i) {
        res.max_deviation = std::max(res.max_deviation, std::abs(fast[i] - slow[i]));
        ++res.comparisons;
      }
    }
  }
  res.passed = res.max_deviation <= 1e-9;
  return res;
}

}  // namespace netdiv
