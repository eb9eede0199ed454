#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tref/streedec.hpp"

namespace tref {

// Least-order separation x with lower <= x <= upper, canonical among ties.
// Throws ContractError unless lower <= upper.
OrientedSep min_order_between(const Graph& g, const OrientedSep& lower, const OrientedSep& upper);

enum class PairTieBreak { kCanonical, kKeepFirst };

struct UncrossedPair {
  OrientedSep u1;
  OrientedSep u2;
};
// u1 is a least-order separation between x1 and x1 ^ x2*, u2 = x2 ^ u1*.
// With kKeepFirst, x1 itself is kept whenever it has least order.
// Throws InvariantViolation when a postcondition fails; linkedness is checked
// against sys.
UncrossedPair uncross_pair(const OrientedSep& x1, const OrientedSep& x2, const SepSystem& sys,
                           PairTieBreak tie = PairTieBreak::kCanonical);

// Turns xs into u's so that rs plus the u's form a star, each u_j pointing
// below x_j and linked to it. rs must be a star of efficient distinguishers of
// phi; every x_j must lie in all of phi.
std::vector<OrientedSep> uncross_star(std::span<const OrientedSep> rs,
                                      std::span<const OrientedSep> xs,
                                      std::span<const Tangle> phi, const SepSystem& sys);

// Shifts st onto s along the leaf separation r and validates the result
// over f plus {s*}.
STree shift_stree(const STree& st, const OrientedSep& r, const OrientedSep& s,
                  const AvoidanceFamily& f, const SepSystem& sys);

using PartResult = std::variant<Tangle, STree>;

// Either a tangle avoiding f plus the singletons {s*}, or an S-tree over that
// family in which every s of sigma is a leaf separation.
PartResult refine_part(const SepSystem& sys, const AvoidanceFamily& f,
                       std::span<const OrientedSep> sigma, std::span<const Tangle> phi,
                       long long max_nodes = kDefaultMaxNodes);

// S-tree over T_k* plus {x*} with x as a leaf separation, for a maximal
// inessential x* of o. Throws ArgumentError for trivial x.
STree iness_tree(const SepSystem& sys, const Tangle& o, const OrientedSep& x_back,
                 std::span<const Tangle> phi, long long max_nodes = kDefaultMaxNodes);

struct Decomposition {
  std::vector<Tangle> tangles;
  std::vector<OrientedSep> skeleton_seps;
  TreeDecomposition skeleton;
  STree tree;  // node_count 1 and no edges for a single part
  std::vector<int> origin;  // skeleton node each tree node refines
  TreeDecomposition td;
  std::vector<int> part_tangle;              // tangle index or -1, per part of td
  std::vector<std::optional<int>> torso_width;  // inessential parts only
};

// Distinguishes all f-tangles of order k by a canonical nested set, then
// splits every inessential part into parts of torso width below k.
Decomposition refine_all(const Graph& g, int k, FamilyKind kind = FamilyKind::kTangleStars,
                         long long max_nodes = kDefaultMaxNodes);

// Cuts every essential part of d down along the maximal inessential
// separations of its tangle.
Decomposition refine_essential(const Graph& g, int k, const Decomposition& d,
                               long long max_nodes = kDefaultMaxNodes);

// Vertices v with some (A, B) in sys, nested with every maximal inessential
// separation of o and with rs, lying below one of them and with v in A \ B.
VertexSet inessentially_separated(const SepSystem& sys, const Tangle& o,
                                  std::span<const Tangle> phi, std::span<const OrientedSep> rs);
// Same with the maximal elements of o and no nestedness with rs.
VertexSet well_separated(const SepSystem& sys, const Tangle& o);

struct VertexStatus {
  bool inessentially_separated = false;
  bool well_separated = false;
};
VertexStatus vertex_status(const SepSystem& sys, const Tangle& o, std::span<const Tangle> phi,
                           std::span<const OrientedSep> rs, Vertex v);

}  // namespace tref
