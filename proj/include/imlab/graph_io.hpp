#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "imlab/graph.hpp"

namespace imlab {

// graph6 short form (n <= 62), one graph per line, optional ">>graph6<<"
// prefix. Bit k of the upper-triangle stream encodes adjacency (i,j) in
// column-major order: (0,1), (0,2), (1,2), (0,3), ...
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace imlab
