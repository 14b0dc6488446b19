#pragma once

#include <cstdint>

#include "netdiv/graph.hpp"
#include "netdiv/stats.hpp"

namespace netdiv::fixtures {

// The five-node exemplar: A-C, A-D, C-B, D-B, B-E, weight 1, undirected.
// A brokers the only structural hole (C,D); B holds exclusive access to E.
Graph fig1();

// n nodes total, node n0 is the hub. n >= 2.
Graph star(int n);

// All pairs tied, n >= 2.
Graph complete_graph(int n);

// Cycle of n nodes, n >= 3.
Graph ring(int n);

// G(n,p) with edges drawn from a seeded Mersenne twister: unordered pairs
// for undirected graphs, ordered pairs otherwise. Same parameters always
// produce the same graph. n >= 2, p in [0,1].
Graph random_gnp(int n, double p, std::uint64_t seed, bool directed);

struct BrokerSpecialistFixture {
  Graph graph;
  PerformanceVector performance;
};

// Mixed population: hub nodes in a ring, each brokering a group of
// specialists that carry a strong self-loop (weight 4 against a weight-1
// tie to their hub). Performance is planted as
//     perf(i) = 5 + 2 * C_B(i) + u_i,  u_i uniform in [-1,1),
// with C_B the 3-betweenness of the generated graph, so betweenness
// correlates with performance by construction. n >= 6.
BrokerSpecialistFixture broker_specialist(int n, std::uint64_t seed);

}  // namespace netdiv::fixtures
