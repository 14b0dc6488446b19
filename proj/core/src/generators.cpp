#include "netdiv/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "netdiv/betweenness.hpp"
#include "netdiv/errors.hpp"

namespace netdiv::fixtures {

namespace {

std::vector<std::string> numbered_labels(int n, const char* prefix = "n") {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void require(bool ok, const char* message) {
  if (!ok) throw ValidationError(message);
}

// Uniform draw in [0,1) from the top 53 bits of a 64-bit word.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph fig1() {
  std::vector<std::string> labels{"A", "B", "C", "D", "E"};
  std::vector<Edge> edges{
      {0, 2, 1.0},  // A-C
      {0, 3, 1.0},  // A-D
      {2, 1, 1.0},  // C-B
      {3, 1, 1.0},  // D-B
      {1, 4, 1.0},  // B-E
  };
  return Graph(std::move(labels), /*directed=*/false, std::move(edges));
}

Graph star(int n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int leaf = 1; leaf < n; ++leaf) {
    edges.push_back(Edge{0, static_cast<NodeIndex>(leaf), 1.0});
  }
  return Graph(numbered_labels(n), /*directed=*/false, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 2, "complete graph requires n >= 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back(Edge{static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), 1.0});
    }
  }
  return Graph(numbered_labels(n), /*directed=*/false, std::move(edges));
}

Graph ring(int n) {
  require(n >= 3, "ring requires n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    edges.push_back(
        Edge{static_cast<NodeIndex>(i), static_cast<NodeIndex>((i + 1) % n), 1.0});
  }
  return Graph(numbered_labels(n), /*directed=*/false, std::move(edges));
}

Graph random_gnp(int n, double p, std::uint64_t seed, bool directed) {
  require(n >= 2, "random graph requires n >= 2");
  require(p >= 0.0 && p <= 1.0, "edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (directed) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (unit_draw(rng) < p) {
          edges.push_back(Edge{static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), 1.0});
        }
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (unit_draw(rng) < p) {
          edges.push_back(Edge{static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), 1.0});
        }
      }
    }
  }
  return Graph(numbered_labels(n), directed, std::move(edges));
}

BrokerSpecialistFixture broker_specialist(int n, std::uint64_t seed) {
  require(n >= 6, "broker-specialist fixture requires n >= 6");
  const int hubs = std::max(2, n / 5);
  const int specialists = n - hubs;

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int h = 0; h < hubs; ++h) labels.push_back("h" + std::to_string(h));
  for (int s = 0; s < specialists; ++s) labels.push_back("s" + std::to_string(s));

  std::vector<Edge> edges;
  if (hubs == 2) {
    edges.push_back(Edge{0, 1, 1.0});
  } else {
    for (int h = 0; h < hubs; ++h) {
      edges.push_back(
          Edge{static_cast<NodeIndex>(h), static_cast<NodeIndex>((h + 1) % hubs), 1.0});
    }
  }
  for (int s = 0; s < specialists; ++s) {
    const auto node = static_cast<NodeIndex>(hubs + s);
    edges.push_back(Edge{node, static_cast<NodeIndex>(s % hubs), 1.0});
    edges.push_back(Edge{node, node, 4.0});  // strong reflexive tie
  }

  BrokerSpecialistFixture fixture{
      Graph(std::move(labels), /*directed=*/false, std::move(edges)), {}};

  const auto params = betweenness_params_for(fixture.graph, 3);
  const auto centrality = k_betweenness(fixture.graph, params);
  std::mt19937_64 rng(seed);
  for (NodeIndex i = 0; i < fixture.graph.node_count(); ++i) {
    const double noise = 2.0 * unit_draw(rng) - 1.0;
    fixture.performance.values[fixture.graph.label(i)] = 5.0 + 2.0 * centrality[i] + noise;
  }
  return fixture;
}

}  // namespace netdiv::fixtures
