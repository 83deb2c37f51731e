#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soltes/graph.hpp"

namespace soltes {

/// Parsed edge-list file. Beyond the graph itself the format may carry
/// `c <id>` lines marking cycle vertices and a `# construct: <selector>`
/// comment recording how the graph was built.
struct EdgeListData {
    Graph graph;
    std::vector<Vertex> cycle_marks;
    std::string construct_selector;
};

/// Reads the text edge-list format:
///   p <V> <E>
///   c <id>        (optional role lines)
///   e <u> <v>     (one per edge, 0-indexed)
/// Lines starting with `#` are comments. Throws std::invalid_argument on
/// malformed input or when the header counts disagree with the body.
EdgeListData read_edge_list(std::istream& in);

EdgeListData load_edge_list(const std::string& path);

/// Writes the byte-stable form: header, sorted `c` lines, then edges
/// sorted with u < v, LF line endings, no trailing whitespace.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const Vertex> cycle_marks = {},
                     std::string_view construct_selector = {});

std::string to_edge_list_string(const Graph& g,
                                std::span<const Vertex> cycle_marks = {},
                                std::string_view construct_selector = {});

void save_edge_list(const std::string& path, const Graph& g,
                    std::span<const Vertex> cycle_marks = {},
                    std::string_view construct_selector = {});

}  // namespace soltes
