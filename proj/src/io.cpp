#include "tref/io.hpp"

#include <sstream>

namespace tref {

namespace {

std::string set_label(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string dot_graph(const TreeDecomposition& td, const std::vector<std::string>& extra) {
  std::ostringstream os;
  os << "graph td {\n  node [shape=box];\n";
  for (size_t t = 0; t < td.parts.size(); ++t) {
    os << "  n" << t << " [label=\"" << t << ": " << set_label(td.parts[t]);
    if (!extra.empty() && !extra[t].empty()) os << "\\n" << extra[t];
    os << "\"];\n";
  }
  for (auto [a, b] : td.edges)
    os << "  n" << a << " -- n" << b << " [label=\"" << set_label(td.parts[a] & td.parts[b])
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

nlohmann::json to_json(VertexSet s) { return s.members(); }

nlohmann::json to_json(const OrientedSep& s) { return {{"A", to_json(s.a)}, {"B", to_json(s.b)}}; }

nlohmann::json to_json(std::span<const OrientedSep> seps) {
  auto out = nlohmann::json::array();
  for (const auto& s : seps) out.push_back(to_json(s));
  return out;
}

nlohmann::json to_json(const TreeDecomposition& td) {
  auto nodes = nlohmann::json::array();
  for (size_t t = 0; t < td.parts.size(); ++t)
    nodes.push_back({{"id", t}, {"part", to_json(td.parts[t])}});
  auto edges = nlohmann::json::array();
  for (auto [a, b] : td.edges)
    edges.push_back({{"a", a}, {"b", b}, {"adhesion", to_json(td.parts[a] & td.parts[b])}});
  return {{"nodes", nodes}, {"edges", edges}};
}

nlohmann::json to_json(const Tangle& t, const SepSystem& sys) {
  std::vector<OrientedSep> tops;
  for (SepId id : maximal_elements(t, sys)) tops.push_back(sys.oriented(id));
  return {{"k", t.k}, {"maximal", to_json(tops)}};
}

nlohmann::json report_json(const Decomposition& d, const SepSystem& sys) {
  auto tangles = nlohmann::json::array();
  for (size_t i = 0; i < d.tangles.size(); ++i) {
    auto j = to_json(d.tangles[i], sys);
    j["id"] = i;
    for (size_t t = 0; t < d.part_tangle.size(); ++t)
      if (d.part_tangle[t] == static_cast<int>(i)) j["part"] = t;
    tangles.push_back(j);
  }
  auto parts = nlohmann::json::array();
  for (size_t t = 0; t < d.td.parts.size(); ++t) {
    nlohmann::json p = {{"id", t}, {"part", to_json(d.td.parts[t])}};
    if (t < d.origin.size()) p["skeleton_part"] = d.origin[t];
    if (d.part_tangle[t] >= 0) {
      p["classification"] = "essential";
      p["tangle"] = d.part_tangle[t];
    } else {
      p["classification"] = "inessential";
      auto star = d.tree.edges.empty() ? std::vector<OrientedSep>{}
                                       : d.tree.in_star(static_cast<int>(t));
      p["star"] = to_json(star);
      p["torso_width"] = *d.torso_width[t];
    }
    parts.push_back(p);
  }
  return {{"k", sys.k()},
          {"tangles", tangles},
          {"skeleton", {{"separations", to_json(d.skeleton_seps)}, {"decomposition", to_json(d.skeleton)}}},
          {"decomposition", to_json(d.td)},
          {"parts", parts}};
}

std::string to_dot(const TreeDecomposition& td) { return dot_graph(td, {}); }

std::string to_dot(const Decomposition& d) {
  std::vector<std::string> extra;
  for (size_t t = 0; t < d.td.parts.size(); ++t)
    extra.push_back(d.part_tangle[t] >= 0 ? "tangle " + std::to_string(d.part_tangle[t])
                                          : "width " + std::to_string(*d.torso_width[t]));
  return dot_graph(d.td, extra);
}

}  // namespace tref
