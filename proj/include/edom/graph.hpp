#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edom/errors.hpp"

namespace edom {

// Undirected graph with string vertex ids and sorted adjacency lists.
// No self-loops, adjacency symmetric.
struct Graph {
  std::vector<std::string> ids;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(ids.size()); }
  std::size_t edge_count() const;

  // -1 when the id is unknown.
  int index_of(const std::string& id) const;

  bool adjacent(int u, int v) const;

 private:
  friend Graph make_graph(std::vector<std::string> ids,
                          const std::vector<std::pair<int, int>>& edges);
  std::unordered_map<std::string, int> index_;
};

// Builds a graph from vertex ids and an edge list (indices into ids).
// Rejects self-loops, out-of-range endpoints and duplicate ids; parallel
// edges are merged.
Graph make_graph(std::vector<std::string> ids,
                 const std::vector<std::pair<int, int>>& edges);

// Graph file: `p <n> <m>` header, then `e <u> <v>` lines with 1-based
// vertex indices.  Optional `v <index> <id>` lines attach ids (default ids
// are "1".."n"); non-numeric `e` endpoints are looked up as ids.  `#` and
// `c` start comment lines.
Graph parse_graph(const std::string& text);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

// Component index per vertex, numbered in order of first appearance.
std::vector<int> connected_components(const Graph& g);

// Subgraph induced by the given vertex indices; ids are preserved.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace edom
