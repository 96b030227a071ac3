#ifndef NRWALK_GRAPH_HPP
#define NRWALK_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrwalk/numeric.hpp"

namespace nrw {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Loops and parallel edges are
// rejected at construction; adjacency lists are kept sorted so neighbour
// iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const;

  // Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

struct DegreeStats {
  int min_degree = 0;        // delta
  int max_degree = 0;
  Rational average_degree;   // 2|E| / n, exact
};

DegreeStats degree_stats(const Graph& g);

// Girth of the graph: length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

// --- edge-list text format ----------------------------------------------
//
// One edge per line as "u v"; blank lines and lines starting with '#' are
// skipped. An optional first line "n <count>" fixes the vertex count, which
// otherwise becomes max vertex id + 1.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace nrw

#endif
