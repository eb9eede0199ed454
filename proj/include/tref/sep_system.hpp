#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tref/graph.hpp"
#include "tref/separation.hpp"

namespace tref {

// Index of an oriented separation inside a SepSystem: 2*separation + flag,
// flag 0 being the canonical orientation. The inverse of id is id ^ 1.
using SepId = int;

inline constexpr int kMaxComponentsPerSeparator = 20;

// All separations of a graph of order < k, canonically ordered by
// (order, smaller side mask, larger side mask). Immutable after construction.
class SepSystem {
 public:
  SepSystem(Graph g, int k);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(seps_.size()); }  // unordered
  int oriented_count() const { return 2 * size(); }

  // Canonical orientation of separation i.
  const OrientedSep& separation(int i) const { return seps_[i]; }
  const OrientedSep& oriented(SepId id) const { return oriented_[id]; }
  static SepId inverse(SepId id) { return id ^ 1; }
  static int separation_of(SepId id) { return id >> 1; }
  int order(SepId id) const { return orders_[id >> 1]; }

  std::optional<SepId> find(const OrientedSep& s) const;
  bool contains(const OrientedSep& s) const { return find(s).has_value(); }
  // Throws MembershipError when s is not in the system.
  SepId id_of(const OrientedSep& s) const;

  bool leq(SepId x, SepId y) const { return tref::leq(oriented_[x], oriented_[y]); }

  // True iff the A-sides of the given oriented separations jointly cover
  // every vertex and every edge of the graph.
  bool covers(std::span<const SepId> ids) const;
  bool covers(SepId x) const { return covers(std::span<const SepId>(&x, 1)); }
  bool covers(SepId x, SepId y) const;
  bool covers(SepId x, SepId y, SepId z) const;
  // Same test for arbitrary (not necessarily member) separations.
  bool covers_sides(std::span<const OrientedSep> seps) const;

  // The separation V,V if present.
  std::optional<SepId> degenerate_id() const { return degenerate_; }

 private:
  Graph graph_;
  int k_;
  std::vector<OrientedSep> seps_;
  std::vector<OrientedSep> oriented_;
  std::vector<int> orders_;
  std::unordered_map<OrientedSep, SepId, OrientedSepHash> index_;
  int edge_words_ = 0;
  std::vector<std::uint64_t> inner_edges_;  // oriented_count x edge_words_
  std::vector<std::uint64_t> all_edges_;
  std::optional<SepId> degenerate_;
};

// True iff the A-sides jointly cover every vertex and edge of g.
bool covers_sides(const Graph& g, std::span<const OrientedSep> seps);

// Throws ContractError for k < 1, SizeError when a separator leaves more than
// kMaxComponentsPerSeparator components.
SepSystem make_system(const Graph& g, int k);

// Every separation of g, of any order.
SepSystem make_universe(const Graph& g);

struct SepFlags {
  bool small = false;
  bool cosmall = false;
  bool trivial = false;
  bool cotrivial = false;
  bool degenerate = false;
};

// Throws MembershipError when x is not in sys.
SepFlags classify(const OrientedSep& x, const SepSystem& sys);
bool is_trivial(const OrientedSep& x, const SepSystem& sys);

// The shifting map onto s for leaf r: x ≥ r goes to x ∨ s, its inverse to
// (x ∨ s)*. Throws DomainError on r* or when x has no orientation ≥ r.
OrientedSep shift_sep(const OrientedSep& x, const OrientedSep& r, const OrientedSep& s);

// s emulates r in sys: r ≤ s and s ∨ t ∈ sys for every t ≥ r other than r*.
bool emulates(const OrientedSep& s, const OrientedSep& r, const SepSystem& sys);

// s is linked to r: |x ∨ s| ≤ |x| for every x ≥ r in sys. Requires r ≤ s.
bool linked_to(const OrientedSep& s, const OrientedSep& r, const SepSystem& sys);

}  // namespace tref
