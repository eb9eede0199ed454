#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tref/vertex_set.hpp"

namespace tref {

using Edge = std::pair<Vertex, Vertex>;  // always first < second
using Permutation = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on loops, out-of-range endpoints or n > kMaxVertices.
  // Parallel edges are collapsed.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbours(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }

  // Subgraph induced on `part`, re-indexed in ascending original order.
  Graph induced(VertexSet part) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

// Parses the edge-list format: optional first non-comment line "n <count>",
// then "u v" lines. Blank lines and '#' comments are ignored.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string to_edge_list(const Graph& g);

// Connected components of g - removed, each sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet removed);

inline constexpr int kDefaultAutomorphismBound = 10;

// Full automorphism group by degree-pruned permutation search. Throws
// SizeError when g has more than `max_vertices` vertices.
std::vector<Permutation> automorphisms(const Graph& g,
                                       int max_vertices = kDefaultAutomorphismBound);

VertexSet apply(const Permutation& p, VertexSet s);

struct Torso {
  Graph graph;
  std::vector<Vertex> index_map;  // torso vertex i is original vertex index_map[i]
};

// Induced subgraph on `part` plus a clique on every adhesion set.
Torso torso(const Graph& g, VertexSet part, const std::vector<VertexSet>& adhesions);

// Small builders used by the CLI fixtures and the test-suites.
namespace graphs {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
// Disjoint union with a vertex offset for the second graph.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_edges(const Graph& g, const std::vector<Edge>& extra, int new_order = -1);
}  // namespace graphs

}  // namespace tref
