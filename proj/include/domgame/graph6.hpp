#pragma once

#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

// graph6 interchange format: one printable ASCII line per graph, six
// upper-triangle adjacency bits per byte, cells ordered column by column.
// Parsing accepts the optional ">>graph6<<" header and the three-byte
// long size form (needed for n = 63, 64); writing emits the single-byte
// size form and therefore requires n <= 62.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace domgame
