#include "netdiv/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

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

double parse_weight(std::string_view field, std::size_t line) {
  field = strip(field);
  if (field.empty()) {
    throw ParseError("empty weight field", line);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("invalid weight '" + std::string(field) + "'", line);
  }
  if (!std::isfinite(value)) {
    throw ParseError("weight must be finite", line);
  }
  if (value < 0.0) {
    throw ValidationError("line " + std::to_string(line) + ": negative weight " +
                          std::string(field));
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

Graph load_edge_list(std::string_view text, bool directed) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeIndex> index;
  auto intern = [&](std::string_view raw, std::size_t line) -> NodeIndex {
    auto label = std::string(strip(raw));
    if (label.empty()) {
      throw ParseError("empty node label", line);
    }
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    const auto idx = static_cast<NodeIndex>(labels.size());
    labels.push_back(label);
    index.emplace(std::move(label), idx);
    return idx;
  };

  // Aggregated ordered-pair weights, keyed deterministically.
  std::map<std::pair<NodeIndex, NodeIndex>, double> acc;

  std::size_t line_no = 0;
  std::size_t data_rows = 0;
  bool header_window = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto trimmed = strip(line);
    if (trimmed.empty()) continue;
    if (header_window) {
      header_window = false;
      if (trimmed == "src,dst,weight" || trimmed == "src,dst") continue;
    }

    auto fields = split_fields(trimmed);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("expected src,dst[,weight], got " +
                           std::to_string(fields.size()) + " fields",
                       line_no);
    }
    const NodeIndex src = intern(fields[0], line_no);
    const NodeIndex dst = intern(fields[1], line_no);
    const double w = fields.size() == 3 ? parse_weight(fields[2], line_no) : 1.0;
    acc[{src, dst}] += w;
    ++data_rows;
  }

  if (data_rows == 0) {
    throw ValidationError("empty edge list input");
  }

  std::vector<Edge> edges;
  if (directed) {
    for (const auto& [key, w] : acc) {
      if (w > 0.0) edges.push_back(Edge{key.first, key.second, w});
    }
  } else {
    // Mirrored rows describe the same undirected tie; take the larger
    // aggregate rather than summing the two directions.
    std::map<std::pair<NodeIndex, NodeIndex>, double> merged;
    for (const auto& [key, w] : acc) {
      auto canon = key.first <= key.second ? key : std::make_pair(key.second, key.first);
      auto [it, inserted] = merged.emplace(canon, w);
      if (!inserted) it->second = std::max(it->second, w);
    }
    for (const auto& [key, w] : merged) {
      if (w > 0.0) edges.push_back(Edge{key.first, key.second, w});
    }
  }

  return Graph(std::move(labels), directed, std::move(edges));
}

Graph load_edge_list(std::istream& in, bool directed) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_edge_list(std::string_view(buffer.view()), directed);
}

Graph load_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path);
  }
  return load_edge_list(in, directed);
}

std::string serialize_edge_list(const Graph& g) {
  std::vector<std::tuple<std::string, std::string, double>> rows;
  rows.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::string a = g.label(e.src);
    std::string b = g.label(e.dst);
    if (!g.directed() && b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b), e.weight);
  }
  std::sort(rows.begin(), rows.end());

  std::string out = "src,dst,weight\n";
  char buf[32];
  for (const auto& [a, b, w] : rows) {
    out += a;
    out += ',';
    out += b;
    out += ',';
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    out.append(buf, ptr);
    out += '\n';
  }
  return out;
}

}  // namespace netdiv
