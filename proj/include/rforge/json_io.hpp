#pragma once

#include <string>

#include "rforge/graph.hpp"
#include "rforge/three_graph.hpp"

namespace rforge {

// On-disk formats, canonically sorted so equal objects serialize identically:
//   graph    {"n": int, "edges": [[u,v], ...]}          u < v, lex order
//   3-graph  {"n": int, "triples": [[u,v,w], ...]}      u < v < w, lex order
// Parse errors surface as DomainError with the underlying byte offset.

std::string to_json(const Graph& g);
std::string to_json(const ThreeGraph& h);

Graph graph_from_json(const std::string& text);
ThreeGraph three_graph_from_json(const std::string& text);

Graph load_graph(const std::string& path);
ThreeGraph load_three_graph(const std::string& path);
void save_json(const std::string& path, const std::string& payload);
std::string read_file(const std::string& path);

} // namespace rforge
