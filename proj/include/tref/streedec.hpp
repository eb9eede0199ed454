#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tref/tangles.hpp"

namespace tref {

using TreeEdge = std::pair<int, int>;

// A tree with oriented separations on its directed edges. alpha[e] is the
// label of (edges[e].first, edges[e].second); the reverse direction carries
// its inverse.
struct STree {
  int node_count = 0;
  std::vector<TreeEdge> edges;
  std::vector<OrientedSep> alpha;

  int add_node() { return node_count++; }
  void add_edge(int from, int to, const OrientedSep& s) {
    edges.emplace_back(from, to);
    alpha.push_back(s);
  }

  // alpha(from, other end of e).
  OrientedSep directed(int e, int from) const {
    return edges[e].first == from ? alpha[e] : alpha[e].inverse();
  }
  // Per node: (neighbour, edge index), in edge order.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
  // {alpha(t', t)} without repetitions.
  std::vector<OrientedSep> in_star(int t) const;
  std::vector<int> leaves() const;
  // alpha(w, u) for every leaf w with neighbour u.
  std::vector<OrientedSep> leaf_separations() const;
};

// Throws StructureError unless st is a tree with at least one edge.
void check_tree_shape(const STree& st);

struct TreeDecomposition {
  std::vector<VertexSet> parts;
  std::vector<TreeEdge> edges;
};

// Throws ValidationError unless td is a tree-decomposition of g.
void validate_treedec(const Graph& g, const TreeDecomposition& td);

// Per tree edge (a, b): (union of parts on a's side, union on b's side).
std::vector<OrientedSep> induced_separations(const TreeDecomposition& td);
int adhesion(const TreeDecomposition& td);
std::vector<VertexSet> adhesion_sets(const TreeDecomposition& td, int node);

// Parts are the regions of the consistent orientations of the nested set.
// Throws NestednessError on a crossing pair, ArgumentError on a degenerate
// member.
TreeDecomposition treedec_from_nested_set(const Graph& g, std::span<const OrientedSep> nested);

// Part of node t is the intersection of the B-sides of its in-star.
TreeDecomposition treedec_from_stree(const Graph& g, const STree& st);
// The S-tree of the induced separations. Requires at least one edge.
STree stree_from_treedec(const TreeDecomposition& td);

struct StarReport {
  bool valid = true;
  std::vector<int> bad_nodes;
};
// Every node's in-star lies in f. A star consisting only of the degenerate
// separation counts as forced.
StarReport validate_stree_over(const STree& st, const AvoidanceFamily& f, const Graph& g);

// Unique sink of the edge orientation induced by o. Throws StructureError
// when there is none, or more than one.
int locate(const Orientation& o, const STree& st, const SepSystem& sys);
int locate(const Orientation& o, const TreeDecomposition& td, const SepSystem& sys);

// Removes duplicate sibling branches and prunes every non-leaf occurrence of
// a protected separation. Throws ArgumentError if a protected separation is
// not a leaf separation afterwards.
STree make_irredundant(const STree& st, std::span<const OrientedSep> protected_leaves);
bool is_irredundant(const STree& st);

// Does f force every trivial separation of sys?
bool is_standard(const AvoidanceFamily& f, const SepSystem& sys);

// An S-tree over f if one exists. Throws ContractError when f is not
// standard, ArgumentError for families that are not sets of stars.
std::optional<STree> find_stree_over(const SepSystem& sys, const AvoidanceFamily& f,
                                     long long max_nodes = kDefaultMaxNodes);

struct Width {
  int value = 0;
  bool infinite = false;
  static Width inf() { return {0, true}; }
  friend bool operator==(const Width&, const Width&) = default;
};
std::string to_string(const Width& w);

// Least k - 1 such that the induced S-tree validates over T_k*.
Width branch_width(const Graph& g, const TreeDecomposition& td);
// Largest k admitting an f-tangle, equivalently least k - 1 admitting an
// S_k-tree over the star family.
int width_over_family(const Graph& g, FamilyKind kind = FamilyKind::kTangleStars);

bool is_refinement(const TreeDecomposition& fine, const TreeDecomposition& coarse);

}  // namespace tref
