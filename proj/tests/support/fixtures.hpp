#pragma once

#include <vector>

#include "tref/streedec.hpp"

namespace tref::fixtures {

// Three K5 blobs A, B, C on 0-4, 5-9, 10-14. x_A = 0, x_B = 5, x_C = 10 are
// joined to the apex v = 15.
inline constexpr Vertex kApex = 15;
inline constexpr Vertex kX[3] = {0, 5, 10};

inline Graph apex_cliques() {
  std::vector<Edge> edges;
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) edges.emplace_back(5 * b + i, 5 * b + j);
    edges.emplace_back(kX[b], kApex);
  }
  return Graph(16, edges);
}

inline VertexSet blob(int b) { return VertexSet::range(5 * b + 5) - VertexSet::range(5 * b); }

// Blob parts each take one foreign x, so the middle torso gains the
// triangle on the x's.
inline TreeDecomposition apex_bad() {
  TreeDecomposition td;
  td.parts.push_back({kX[0], kX[1], kX[2], kApex});
  for (int b = 0; b < 3; ++b) {
    VertexSet p = blob(b);
    p.insert(kX[(b + 1) % 3]);
    td.parts.push_back(p);
    td.edges.emplace_back(0, b + 1);
  }
  return td;
}

// Two K5 on 0-4 and 3-7 sharing {3, 4}.
inline Graph overlap_cliques() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      edges.emplace_back(i, j);
      if (!(i == 0 && j == 1)) edges.emplace_back(i + 3, j + 3);
    }
  return Graph(8, edges);
}

// Two K4 on 0-3 and 2-5 sharing {2, 3}, with paths 0-6-...-11 and
// 5-12-...-17 hanging off the private vertices 0 and 5.
inline constexpr int kPathLength = 6;

inline Graph overlap_paths() {
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      edges.emplace_back(i, j);
      if (!(i == 0 && j == 1)) edges.emplace_back(i + 2, j + 2);
    }
  Vertex prev = 0;
  for (int i = 0; i < kPathLength; ++i) {
    edges.emplace_back(std::min(prev, 6 + i), std::max(prev, 6 + i));
    prev = 6 + i;
  }
  prev = 5;
  for (int i = 0; i < kPathLength; ++i) {
    edges.emplace_back(prev, 12 + i);
    prev = 12 + i;
  }
  return Graph(18, edges);
}

inline VertexSet path_interiors() { return VertexSet::range(18) - VertexSet::range(6); }

}  // namespace tref::fixtures
