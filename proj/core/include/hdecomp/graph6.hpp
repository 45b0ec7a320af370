#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hdecomp/graph.hpp"

namespace hdecomp {

/// Decode one graph6 line (no trailing newline). Throws ParseError naming the
/// offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encode with the minimal-length order prefix.
std::string emit_graph6(const Graph& g);

/// Reads one graph per line; blank lines and lines starting with '#' are
/// skipped, as is an optional ">>graph6<<" header. Error offsets are relative
/// to the line, and the message carries the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace hdecomp
