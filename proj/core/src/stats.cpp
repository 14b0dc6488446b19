#include "netdiv/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "netdiv/errors.hpp"

namespace netdiv {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

const char* to_string(PearsonStatus s) {
  switch (s) {
    case PearsonStatus::ok:
      return "ok";
    case PearsonStatus::insufficient_pairs:
      return "insufficient-pairs";
    case PearsonStatus::zero_variance:
      return "zero-variance";
  }
  return "unknown";
}

PearsonResult pearson(std::span<const std::optional<double>> xs,
                      std::span<const std::optional<double>> ys) {
  if (xs.size() != ys.size()) {
    throw ValidationError("pearson: sequences differ in length");
  }

  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] && ys[i]) pairs.emplace_back(*xs[i], *ys[i]);
  }

  PearsonResult res;
  res.n_used = static_cast<int>(pairs.size());
  if (pairs.size() < 2) {
    res.status = PearsonStatus::insufficient_pairs;
    return res;
  }

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : pairs) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(pairs.size());
  mean_y /= static_cast<double>(pairs.size());

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    const double dx = x - mean_x;
    const double dy = y - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    res.status = PearsonStatus::zero_variance;
    return res;
  }
  res.status = PearsonStatus::ok;
  res.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  return res;
}

NetworkSummary summarize(const Graph& g, std::optional<int> cutoff) {
  if (cutoff && *cutoff < 1) {
    throw ValidationError("summary cutoff must be >= 1");
  }
  const auto n = static_cast<NodeIndex>(g.node_count());

  NetworkSummary summary;
  summary.n = n;

  double degree_sum = 0.0;
  double share_sum = 0.0;
  std::size_t share_count = 0;
  for (NodeIndex i = 0; i < n; ++i) {
    degree_sum += g.out_degree(i);
    const double total = g.out_weight_total(i, /*include_self=*/true);
    if (total > 0.0) {
      share_sum += g.self_weight(i) / total;
      ++share_count;
    }
  }
  summary.mean_out_degree = n > 0 ? degree_sum / n : 0.0;
  if (share_count > 0) summary.mean_self_weight_share = share_sum / share_count;

  // BFS from every source over the self-loop-free topology, truncated at the
  // cutoff depth.
  std::vector<std::vector<NodeIndex>> rows(n);
  for (NodeIndex i = 0; i < n; ++i) {
    for (const auto& [j, w] : g.adjacency(i)) {
      if (j != i) rows[i].push_back(j);
    }
  }
  std::vector<int> dist(n);
  std::vector<NodeIndex> queue;
  queue.reserve(n);
  double distance_sum = 0.0;
  std::size_t reached_pairs = 0;
  int max_distance = 0;
  bool all_reached = n >= 2;
  for (NodeIndex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    std::size_t head = 0;
    std::size_t reached = 0;
    while (head < queue.size()) {
      const NodeIndex v = queue[head++];
      if (cutoff && dist[v] == *cutoff) continue;
      for (const NodeIndex w : rows[v]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
        distance_sum += dist[w];
        max_distance = std::max(max_distance, dist[w]);
        ++reached;
      }
    }
    reached_pairs += reached;
    if (reached + 1 < n) all_reached = false;
  }

  if (reached_pairs > 0) {
    summary.mean_geodesic_distance = distance_sum / static_cast<double>(reached_pairs);
    if (all_reached) summary.diameter_capped = max_distance;
  }
  return summary;
}

PerformanceVector load_performance_csv(std::string_view text) {
  PerformanceVector perf;
  std::size_t line_no = 0;
  bool header_window = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto trimmed = strip(line);
    if (trimmed.empty()) continue;
    if (header_window) {
      header_window = false;
      if (trimmed == "node,value") continue;
    }

    auto comma = trimmed.find(',');
    if (comma == std::string_view::npos ||
        trimmed.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected node,value", line_no);
    }
    auto node = std::string(strip(trimmed.substr(0, comma)));
    auto value_field = strip(trimmed.substr(comma + 1));
    if (node.empty()) throw ParseError("empty node label", line_no);
    if (value_field.empty()) throw ParseError("empty value field", line_no);

    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(value_field.data(), value_field.data() + value_field.size(), value);
    if (ec != std::errc{} || ptr != value_field.data() + value_field.size() ||
        !std::isfinite(value)) {
      throw ParseError("invalid value '" + std::string(value_field) + "'", line_no);
    }
    auto [it, inserted] = perf.values.emplace(std::move(node), value);
    if (!inserted) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate performance row for node " + it->first);
    }
  }
  return perf;
}

PerformanceVector load_performance_csv(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_performance_csv(std::string_view(buffer.view()));
}

PerformanceVector load_performance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path);
  }
  return load_performance_csv(in);
}

std::vector<MetricCorrelation> correlate_report(const MetricReport& report,
                                                const PerformanceVector& perf) {
  for (const auto& [node, value] : perf.values) {
    const bool known = std::any_of(report.rows.begin(), report.rows.end(),
                                   [&](const NodeMetrics& row) { return row.node == node; });
    if (!known) {
      throw ValidationError("performance vector references unknown node: " + node);
    }
  }

  std::vector<std::optional<double>> ys;
  ys.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    auto it = perf.values.find(row.node);
    ys.push_back(it == perf.values.end() ? std::nullopt : std::optional<double>(it->second));
  }

  auto column = [&](auto&& get) {
    std::vector<std::optional<double>> xs;
    xs.reserve(report.rows.size());
    for (const auto& row : report.rows) xs.push_back(get(row));
    return xs;
  };

  std::vector<MetricCorrelation> table;
  table.push_back({"entropy", pearson(column([](const NodeMetrics& r) { return r.entropy; }), ys)});
  table.push_back({"k_betweenness",
                   pearson(column([](const NodeMetrics& r) {
                             return std::optional<double>(r.k_betweenness);
                           }),
                           ys)});
  table.push_back(
      {"constraint", pearson(column([](const NodeMetrics& r) { return r.constraint; }), ys)});
  table.push_back(
      {"clustering", pearson(column([](const NodeMetrics& r) { return r.clustering; }), ys)});
  return table;
}

}  // namespace netdiv
