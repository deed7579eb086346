#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pathfactor/graph.hpp"

namespace pathfactor {

// Edge-list text format:
//   UTF-8 text; lines beginning '#' are comments; blank lines ignored.
//   First significant line: "n <count>".
//   Each following significant line: "<u> <v>" with 0 <= u,v < n, u != v.
//   Duplicate pairs (in either order) are errors.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

Graph read_graph(std::istream& in);
Graph read_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);  // throws std::runtime_error if unreadable

std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace pathfactor
