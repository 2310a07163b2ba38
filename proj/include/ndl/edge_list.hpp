#pragma once

#include <string>
#include <string_view>

#include "ndl/graph.hpp"

namespace ndl {

// Edge-list interchange format:
//   n m
//   u v        (m lines, 0 <= u,v < n, u != v)
// Lines starting with '#' and blank lines are skipped on input.
// Output lists each edge once with u < v, lexicographically sorted, every
// line terminated by '\n'.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace ndl
