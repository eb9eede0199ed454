#include "tref/separation.hpp"

namespace tref {

bool is_star(std::span<const OrientedSep> seps) {
  for (const auto& s : seps)
    if (s.degenerate()) return false;
  for (size_t i = 0; i < seps.size(); ++i)
    for (size_t j = 0; j < seps.size(); ++j)
      if (i != j && seps[i] != seps[j] && !leq(seps[i], seps[j].inverse())) return false;
  return true;
}

bool is_separation_of(const Graph& g, const OrientedSep& s) {
  if ((s.a | s.b) != g.vertices()) return false;
  VertexSet only_a = s.a - s.b;
  VertexSet only_b = s.b - s.a;
  bool ok = true;
  only_a.for_each([&](Vertex v) { ok = ok && !g.neighbours(v).intersects(only_b); });
  return ok;
}

namespace {
std::string set_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}
}  // namespace

std::string to_string(const OrientedSep& s) {
  return "(" + set_string(s.a) + "," + set_string(s.b) + ")";
}

}  // namespace tref
