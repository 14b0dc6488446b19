#pragma once

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "netdiv/edge_list.hpp"
#include "netdiv/graph.hpp"

namespace testsupport {

inline constexpr const char* kFig1Csv = "A,C,1\nA,D,1\nC,B,1\nD,B,1\nB,E,1\n";
inline constexpr const char* kFig1PlusCdCsv = "A,C,1\nA,D,1\nC,B,1\nD,B,1\nB,E,1\nC,D,1\n";

inline netdiv::Graph load(const std::string& text, bool directed = false) {
  return netdiv::load_edge_list(std::string_view(text), directed);
}

// Independent all-pairs distance oracle (Floyd-Warshall over the self-loop
// free topology); the library uses per-source BFS instead.
inline std::vector<std::vector<int>> distance_matrix(const netdiv::Graph& g) {
  const int n = static_cast<int>(g.node_count());
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (const auto& [j, w] : g.adjacency(static_cast<netdiv::NodeIndex>(i))) {
      if (static_cast<int>(j) != i) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (auto& v : row) {
      if (v >= inf) v = -1;  // unreachable
    }
  }
  return d;
}

// Independent evaluation of the normalized entropy with explicit p values
// and base-2 logarithms; the base cancels in the ratio.
inline double entropy_base2(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double h = 0.0;
  for (double w : weights) {
    const double p = w / total;
    h -= p * std::log2(p);
  }
  return h / std::log2(static_cast<double>(weights.size()));
}

struct CliResult {
  std::string output;
  int exit_code{-1};
};

// Runs a shell command and captures stdout (or stderr when redirected by the
// caller); exit_code is the process exit status.
inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace testsupport
