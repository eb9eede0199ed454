#pragma once

#include <span>
#include <vector>

#include "tref/tangles.hpp"

namespace tref {

// A pairwise nested set of phi-essential separations of sys distinguishing
// every pair of phi efficiently. Pairs are settled one kappa level at a time;
// at each round the candidates nested with everything chosen so far are
// scored by the size of their smaller private side, and all top-scoring ones
// that stay nested are added. Throws InvariantViolation when a level cannot be
// settled.
std::vector<OrientedSep> build_distinguishing_set(const SepSystem& sys,
                                                  std::span<const Tangle> phi);

// Every pair of phi is distinguished by a member of order kappa(pair).
bool distinguishes_efficiently(std::span<const OrientedSep> seps, std::span<const Tangle> phi,
                               const SepSystem& sys);

bool pairwise_nested(std::span<const OrientedSep> seps);

// Fixed setwise by every automorphism of g.
bool is_canonical(std::span<const OrientedSep> seps, const Graph& g,
                  int max_vertices = kDefaultAutomorphismBound);

}  // namespace tref
