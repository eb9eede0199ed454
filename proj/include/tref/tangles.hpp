#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "tref/sep_system.hpp"

namespace tref {

// One chosen orientation per separation of a SepSystem. ids()[i] is either
// 2i or 2i+1.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<SepId> ids) : ids_(std::move(ids)) {}

  const std::vector<SepId>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  SepId choice(int sep) const { return ids_[sep]; }
  bool contains(SepId id) const { return ids_[id >> 1] == id; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation& a, const Orientation& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<SepId> ids_;
};

enum class FamilyKind { kTangleTriples, kTangleStars, kProfileTriples, kBlockOracle, kCustom };

const char* family_name(FamilyKind kind);

// A set F of forbidden subsets, described by a kind plus extra forbidden
// singletons. With `closure` set, {z} is forbidden whenever e <= z for some
// extra singleton e.
struct AvoidanceFamily {
  FamilyKind kind = FamilyKind::kTangleStars;
  std::vector<OrientedSep> extra_singletons;
  bool closure = false;
  std::vector<VertexSet> blocks;  // kBlockOracle
  std::function<bool(std::span<const OrientedSep>)> custom;  // kCustom

  static AvoidanceFamily of(FamilyKind kind) {
    AvoidanceFamily f;
    f.kind = kind;
    return f;
  }
  AvoidanceFamily with_singletons(std::vector<OrientedSep> extra, bool upward_closed) const;
  bool star_family() const {
    return kind == FamilyKind::kTangleStars || kind == FamilyKind::kBlockOracle;
  }
};

// Block family for sys: kBlockOracle over the k-blocks of sys.graph().
AvoidanceFamily block_family(const SepSystem& sys);

// True iff {z} is forbidden by the extra singletons of f.
bool forbids_singleton(const AvoidanceFamily& f, const OrientedSep& z);

bool family_contains(const AvoidanceFamily& f, std::span<const OrientedSep> subset,
                     const Graph& g);
inline bool family_contains(const AvoidanceFamily& f, std::span<const OrientedSep> subset,
                            const SepSystem& sys) {
  return family_contains(f, subset, sys.graph());
}

struct Consistency {
  bool consistent = false;
  bool regular = false;
};
Consistency is_consistent(const Orientation& o, const SepSystem& sys);

// Literal check: consistent and no member of f (up to size 3, plus block
// stars) inside o.
bool avoids(const Orientation& o, const AvoidanceFamily& f, const SepSystem& sys);

struct Tangle {
  Orientation orientation;
  int k = 0;

  bool contains(SepId id) const { return orientation.contains(id); }
  friend bool operator==(const Tangle&, const Tangle&) = default;
};

inline constexpr long long kDefaultMaxNodes = 10'000'000;

// All consistent f-avoiding orientations of sys, in canonical order.
// Throws SizeError past max_nodes search nodes.
std::vector<Tangle> enumerate_tangles(const SepSystem& sys, const AvoidanceFamily& f,
                                      long long max_nodes = kDefaultMaxNodes);

// Maximal (<k)-inseparable vertex sets of size >= k.
std::vector<VertexSet> enumerate_blocks(const Graph& g, int k);
std::vector<VertexSet> enumerate_blocks(const SepSystem& sys);
// Orients every separation towards the side containing the block.
Orientation block_orientation(VertexSet block, const SepSystem& sys);

struct Kappa {
  int order = 0;
  std::vector<int> distinguishers;  // separation indices of that order
};
// Throws ArgumentError when p1 and p2 coincide.
Kappa kappa(const Tangle& p1, const Tangle& p2, const SepSystem& sys);

// Separation indices distinguishing some pair of phi efficiently, ascending.
std::vector<int> essential_seps(std::span<const Tangle> phi, const SepSystem& sys);
// Oriented ids lying in every tangle of phi.
std::vector<SepId> inessential(std::span<const Tangle> phi, const SepSystem& sys);
// Maximal elements of inessential(phi); o must be in phi.
std::vector<SepId> maximal_inessential(const Tangle& o, std::span<const Tangle> phi,
                                       const SepSystem& sys);
// Maximal elements of o.
std::vector<SepId> maximal_elements(const Tangle& o, const SepSystem& sys);

}  // namespace tref
