#include "tref/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tref/errors.hpp"

namespace tref {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ValidationError("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
    if (u == v) throw ValidationError("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

Graph Graph::induced(VertexSet part) const {
  std::vector<int> index(n_, -1);
  int m = 0;
  part.for_each([&](Vertex v) { index[v] = m++; });
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return Graph(m, es);
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph load_graph(std::string_view text) {
  int declared = -1;
  bool seen_content = false;
  int max_index = -1;
  std::vector<std::pair<Edge, int>> edges;  // edge + line number
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected two fields");
    if (toks[0] == "n") {
      if (seen_content) throw ParseError(line_no, "'n' header must come first");
      long long c;
      if (!parse_int(toks[1], c) || c < 0) throw ParseError(line_no, "bad vertex count");
      if (c > kMaxVertices) throw ValidationError("declared vertex count exceeds 64");
      declared = static_cast<int>(c);
      seen_content = true;
      continue;
    }
    long long u, v;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v) || u < 0 || v < 0)
      throw ParseError(line_no, "expected two nonnegative integers");
    if (u >= kMaxVertices || v >= kMaxVertices)
      throw ValidationError("vertex index exceeds 63 on line " + std::to_string(line_no));
    if (u == v) throw ValidationError("loop edge at vertex " + std::to_string(u) +
                                      " on line " + std::to_string(line_no));
    seen_content = true;
    edges.push_back({{static_cast<int>(u), static_cast<int>(v)}, line_no});
    max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));
    if (end == text.size()) break;
  }
  int n = declared >= 0 ? declared : max_index + 1;
  std::vector<Edge> es;
  for (auto& [e, ln] : edges) {
    if (e.first >= n || e.second >= n)
      throw ValidationError("edge on line " + std::to_string(ln) +
                            " exceeds declared vertex count");
    es.push_back(e);
  }
  return Graph(n, es);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices() - removed;
  while (!left.empty()) {
    VertexSet comp{};
    VertexSet frontier{};
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next{};
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      frontier = (next & left) - comp;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

VertexSet apply(const Permutation& p, VertexSet s) {
  VertexSet out;
  s.for_each([&](Vertex v) { out.insert(p[v]); });
  return out;
}

std::vector<Permutation> automorphisms(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw SizeError("automorphism search limited to " + std::to_string(max_vertices) +
                    " vertices, graph has " + std::to_string(n));
  std::vector<Permutation> out;
  Permutation image(n, -1);
  VertexSet used;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used.contains(w) || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used.insert(w);
      self(self, v + 1);
      used.erase(w);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Torso torso(const Graph& g, VertexSet part, const std::vector<VertexSet>& adhesions) {
  if (!part.subset_of(g.vertices())) throw ValidationError("torso part outside the graph");
  std::vector<int> index(g.order(), -1);
  Torso t;
  part.for_each([&](Vertex v) {
    index[v] = static_cast<int>(t.index_map.size());
    t.index_map.push_back(v);
  });
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
  for (VertexSet adh : adhesions) {
    if (!adh.subset_of(part)) throw ValidationError("adhesion set not contained in part");
    auto ms = adh.members();
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j) es.emplace_back(index[ms[i]], index[ms[j]]);
  }
  t.graph = Graph(static_cast<int>(t.index_map.size()), es);
  return t;
}

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), es);
}

Graph with_edges(const Graph& g, const std::vector<Edge>& extra, int new_order) {
  std::vector<Edge> es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(new_order < 0 ? g.order() : new_order, es);
}

}  // namespace graphs

}  // namespace tref
