#pragma once

#include <string>
#include <string_view>

#include "pcube/graph.hpp"

namespace pcube {

// graph6 text codec: six-bit printable encoding of the upper adjacency
// triangle in column order, vertex count prefixed as N(n). Reading
// tolerates an optional ">>graph6<<" header; writing never emits one.
// Throws ParseError on malformed input (bad length field, character out
// of range, nonzero trailing padding bits).

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace pcube
