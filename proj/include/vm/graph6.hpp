#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// Standard printable graph6: N(n) then the upper triangle in column-major
// order, 6 bits per character, characters 63..126. No header line. Labels are
// not part of the format (a JSON sidecar carries them when needed).
std::string to_graph6(const Graph& g);

// Accepts exactly one encoded graph; trailing '\n' / '\r' are tolerated.
// Throws ParseError (with byte offset) on malformed input and CapacityError
// on orders beyond kMaxVertices.
Graph from_graph6(std::string_view text);

// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace vm
