#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tref/graph.hpp"

namespace tref {

// An oriented separation (A,B) of a graph: A ∪ B = V and no edge joins
// A∖B to B∖A. It points towards B and away from A.
struct OrientedSep {
  VertexSet a;
  VertexSet b;

  int order() const { return (a & b).size(); }
  VertexSet separator() const { return a & b; }
  OrientedSep inverse() const { return {b, a}; }
  bool degenerate() const { return a == b; }
  // s ≤ s*; for graphs exactly the separations of the form (A,V).
  bool small() const { return a.subset_of(b); }

  friend bool operator==(const OrientedSep&, const OrientedSep&) = default;
};

// Partial order: (A,B) ≤ (C,D) iff A ⊆ C and B ⊇ D.
inline bool leq(const OrientedSep& x, const OrientedSep& y) {
  return x.a.subset_of(y.a) && y.b.subset_of(x.b);
}
inline bool less(const OrientedSep& x, const OrientedSep& y) { return x != y && leq(x, y); }

// Corner separations.
inline OrientedSep join(const OrientedSep& x, const OrientedSep& y) {
  return {x.a | y.a, x.b & y.b};
}
inline OrientedSep meet(const OrientedSep& x, const OrientedSep& y) {
  return {x.a & y.a, x.b | y.b};
}

struct Corners {
  OrientedSep join;
  OrientedSep meet;
};
inline Corners corner(const OrientedSep& x, const OrientedSep& y) { return {join(x, y), meet(x, y)}; }

inline bool nested(const OrientedSep& x, const OrientedSep& y) {
  OrientedSep xi = x.inverse();
  return leq(x, y) || leq(x, y.inverse()) || leq(xi, y) || leq(xi, y.inverse());
}

// Non-degenerate members pointing pairwise away from each other: r ≤ s* for
// distinct r, s.
bool is_star(std::span<const OrientedSep> seps);

// Checks the covering and no-cross-edge conditions against g.
bool is_separation_of(const Graph& g, const OrientedSep& s);

// Total order used for canonical tie-breaks between oriented separations:
// order first, then A-mask, then B-mask.
inline std::strong_ordering canonical_compare(const OrientedSep& x, const OrientedSep& y) {
  if (auto c = x.order() <=> y.order(); c != 0) return c;
  if (auto c = x.a <=> y.a; c != 0) return c;
  return x.b <=> y.b;
}
struct CanonicalLess {
  bool operator()(const OrientedSep& x, const OrientedSep& y) const {
    return canonical_compare(x, y) < 0;
  }
};

// Orientation of a separation whose A-mask is the numerically smaller one.
inline OrientedSep canonical_orientation(const OrientedSep& s) {
  return s.a <= s.b ? s : s.inverse();
}

std::string to_string(const OrientedSep& s);

struct OrientedSepHash {
  size_t operator()(const OrientedSep& s) const {
    return std::hash<std::uint64_t>()(s.a.bits() * 0x9E3779B97F4A7C15ULL ^ s.b.bits());
  }
};

}  // namespace tref
