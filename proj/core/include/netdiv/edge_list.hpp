#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "netdiv/graph.hpp"

namespace netdiv {

// Edge-list CSV: one `src,dst,weight` row per line, weight optional
// (default 1), an optional `src,dst,weight` header, LF or CRLF endings.
// Fields are taken verbatim (no quoting), so labels cannot contain commas.
// Duplicate rows for the same ordered pair are summed; zero-weight ties are
// dropped after summing. For undirected input each row contributes to both
// orientations; when both (a,b) and (b,a) rows appear, the larger of the two
// aggregates wins, so mirrored exports of the same edge are not double
// counted. Negative weights raise ValidationError; structural problems raise
// ParseError with the line number; input without any data row raises
// ValidationError.
Graph load_edge_list(std::istream& in, bool directed);
Graph load_edge_list(std::string_view text, bool directed);
Graph load_edge_list_file(const std::string& path, bool directed);

// Inverse of load_edge_list: `src,dst,weight` header, one row per canonical
// tie, rows sorted by (src,dst) label (undirected ties oriented so the
// lexicographically smaller label comes first), weights printed in shortest
// round-trip form. load(serialize(g)) reproduces g bit-exactly.
std::string serialize_edge_list(const Graph& g);

}  // namespace netdiv
