#include "tref/streedec.hpp"

#include <algorithm>
#include <set>

#include "tref/errors.hpp"

namespace tref {

std::vector<std::vector<std::pair<int, int>>> STree::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(node_count);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [a, b] = edges[e];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  return adj;
}

std::vector<OrientedSep> STree::in_star(int t) const {
  std::vector<OrientedSep> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [a, b] = edges[e];
    if (a != t && b != t) continue;
    OrientedSep s = b == t ? alpha[e] : alpha[e].inverse();
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<int> STree::leaves() const {
  std::vector<int> degree(node_count, 0);
  for (auto [a, b] : edges) ++degree[a], ++degree[b];
  std::vector<int> out;
  for (int t = 0; t < node_count; ++t)
    if (degree[t] == 1) out.push_back(t);
  return out;
}

std::vector<OrientedSep> STree::leaf_separations() const {
  auto adj = adjacency();
  std::vector<OrientedSep> out;
  for (int w : leaves()) out.push_back(directed(adj[w][0].second, w));
  return out;
}

namespace {

bool is_tree(int n, const std::vector<TreeEdge>& edges) {
  if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

// Nodes reachable from `start` without stepping onto `blocked`.
std::vector<char> side_of(int n, const std::vector<std::vector<std::pair<int, int>>>& adj,
                          int start, int blocked) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (auto [u, e] : adj[t])
      if (u != blocked && !seen[u]) seen[u] = 1, stack.push_back(u);
  }
  return seen;
}

std::vector<std::vector<std::pair<int, int>>> td_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::pair<int, int>>> adj(td.parts.size());
  for (int e = 0; e < static_cast<int>(td.edges.size()); ++e) {
    auto [a, b] = td.edges[e];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  return adj;
}

}  // namespace

void check_tree_shape(const STree& st) {
  if (st.edges.empty()) throw StructureError("S-tree needs at least one edge");
  if (st.alpha.size() != st.edges.size()) throw StructureError("alpha does not match edges");
  if (!is_tree(st.node_count, st.edges)) throw StructureError("S-tree is not a tree");
}

void validate_treedec(const Graph& g, const TreeDecomposition& td) {
  const int n = static_cast<int>(td.parts.size());
  if (!is_tree(n, td.edges)) throw ValidationError("decomposition tree is not a tree");
  VertexSet all;
  for (VertexSet p : td.parts) all |= p;
  if (all != g.vertices()) throw ValidationError("parts do not cover the vertex set");
  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (VertexSet p : td.parts) inside = inside || (p.contains(u) && p.contains(v));
    if (!inside)
      throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " lies in no part");
  }
  auto adj = td_adjacency(td);
  for (Vertex v = 0; v < g.order(); ++v) {
    int holders = 0, start = -1;
    for (int t = 0; t < n; ++t)
      if (td.parts[t].contains(v)) ++holders, start = t;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (auto [u, e] : adj[t])
        if (!seen[u] && td.parts[u].contains(v)) seen[u] = 1, ++reached, stack.push_back(u);
    }
    if (reached != holders)
      throw ValidationError("parts containing vertex " + std::to_string(v) +
                            " are not connected");
  }
}

std::vector<OrientedSep> induced_separations(const TreeDecomposition& td) {
  const int n = static_cast<int>(td.parts.size());
  auto adj = td_adjacency(td);
  std::vector<OrientedSep> out;
  for (auto [a, b] : td.edges) {
    auto side = side_of(n, adj, a, b);
    VertexSet left, right;
    for (int t = 0; t < n; ++t) (side[t] ? left : right) |= td.parts[t];
    out.push_back({left, right});
  }
  return out;
}

int adhesion(const TreeDecomposition& td) {
  int out = 0;
  for (auto [a, b] : td.edges) out = std::max(out, (td.parts[a] & td.parts[b]).size());
  return out;
}

std::vector<VertexSet> adhesion_sets(const TreeDecomposition& td, int node) {
  std::vector<VertexSet> out;
  for (auto [a, b] : td.edges) {
    if (a == node) out.push_back(td.parts[a] & td.parts[b]);
    if (b == node) out.push_back(td.parts[a] & td.parts[b]);
  }
  return out;
}

namespace {

// x is strictly below both orientations of another member.
bool trivial_among(const OrientedSep& x, const std::vector<OrientedSep>& seps) {
  for (const auto& t : seps) {
    if (t == x || t == x.inverse()) continue;
    if (less(x, t) && less(x, t.inverse())) return true;
  }
  return false;
}

void consistent_orientations(const std::vector<OrientedSep>& seps, size_t i,
                             std::vector<OrientedSep>& chosen,
                             std::vector<std::vector<OrientedSep>>& out) {
  if (i == seps.size()) {
    out.push_back(chosen);
    return;
  }
  for (const OrientedSep& y : {seps[i], seps[i].inverse()}) {
    bool ok = true;
    for (const auto& x : chosen)
      ok = ok && !leq(x.inverse(), y) && !leq(y.inverse(), x);
    if (!ok) continue;
    chosen.push_back(y);
    consistent_orientations(seps, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

TreeDecomposition treedec_from_nested_set(const Graph& g, std::span<const OrientedSep> nested_set) {
  std::vector<OrientedSep> seps;
  for (const auto& s : nested_set) {
    if (s.degenerate()) throw ArgumentError("degenerate separation in nested set");
    OrientedSep c = canonical_orientation(s);
    if (std::find(seps.begin(), seps.end(), c) == seps.end()) seps.push_back(c);
  }
  std::sort(seps.begin(), seps.end(), CanonicalLess{});
  for (size_t i = 0; i < seps.size(); ++i)
    for (size_t j = i + 1; j < seps.size(); ++j)
      if (!nested(seps[i], seps[j]))
        throw NestednessError(to_string(seps[i]) + " crosses " + to_string(seps[j]));

  std::vector<OrientedSep> core, trivial;
  for (const auto& s : seps) {
    if (trivial_among(s, seps))
      trivial.push_back(s);
    else if (trivial_among(s.inverse(), seps))
      trivial.push_back(s.inverse());
    else
      core.push_back(s);
  }

  TreeDecomposition td;
  std::vector<std::vector<OrientedSep>> regions;
  std::vector<OrientedSep> chosen;
  consistent_orientations(core, 0, chosen, regions);
  for (const auto& o : regions) {
    VertexSet part = g.vertices();
    for (const auto& s : o) part &= s.b;
    td.parts.push_back(part);
  }
  for (size_t i = 0; i < regions.size(); ++i)
    for (size_t j = i + 1; j < regions.size(); ++j) {
      int diff = 0;
      for (size_t l = 0; l < core.size(); ++l) diff += regions[i][l] != regions[j][l];
      if (diff == 1) td.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (!is_tree(static_cast<int>(td.parts.size()), td.edges))
    throw StructureError("consistent orientations of the nested set do not form a tree");

  // x = (A, V) sits below some separator; hang A off a part containing it.
  for (const auto& x : trivial) {
    int host = -1;
    for (int t = 0; t < static_cast<int>(td.parts.size()) && host < 0; ++t)
      if (x.a.subset_of(td.parts[t])) host = t;
    if (host < 0) throw StructureError("no part contains the small side " + to_string(x));
    td.parts.push_back(x.a);
    td.edges.emplace_back(static_cast<int>(td.parts.size()) - 1, host);
  }
  return td;
}

TreeDecomposition treedec_from_stree(const Graph& g, const STree& st) {
  TreeDecomposition td;
  for (int t = 0; t < st.node_count; ++t) {
    VertexSet part = g.vertices();
    for (const auto& s : st.in_star(t)) part &= s.b;
    td.parts.push_back(part);
  }
  td.edges = st.edges;
  return td;
}

STree stree_from_treedec(const TreeDecomposition& td) {
  if (td.edges.empty()) throw StructureError("decomposition has a single part");
  STree st;
  st.node_count = static_cast<int>(td.parts.size());
  st.edges = td.edges;
  st.alpha = induced_separations(td);
  return st;
}

StarReport validate_stree_over(const STree& st, const AvoidanceFamily& f, const Graph& g) {
  StarReport report;
  for (int t = 0; t < st.node_count; ++t) {
    auto star = st.in_star(t);
    bool forced = star.size() == 1 && star[0].degenerate();
    if (!forced && !family_contains(f, star, g)) {
      report.valid = false;
      report.bad_nodes.push_back(t);
    }
  }
  return report;
}

int locate(const Orientation& o, const STree& st, const SepSystem& sys) {
  std::vector<int> out_degree(st.node_count, 0);
  for (int e = 0; e < static_cast<int>(st.edges.size()); ++e) {
    auto id = sys.find(st.alpha[e]);
    if (!id) throw StructureError(to_string(st.alpha[e]) + " is not in the system");
    ++out_degree[o.contains(*id) ? st.edges[e].first : st.edges[e].second];
  }
  int sink = -1;
  for (int t = 0; t < st.node_count; ++t) {
    if (out_degree[t] != 0) continue;
    if (sink >= 0) throw StructureError("orientation has more than one sink");
    sink = t;
  }
  if (sink < 0) throw StructureError("orientation has no sink");
  return sink;
}

int locate(const Orientation& o, const TreeDecomposition& td, const SepSystem& sys) {
  if (td.edges.empty()) return 0;
  return locate(o, stree_from_treedec(td), sys);
}

namespace {

STree restrict_to(const STree& st, const std::vector<char>& keep) {
  std::vector<int> index(st.node_count, -1);
  STree out;
  for (int t = 0; t < st.node_count; ++t)
    if (keep[t]) index[t] = out.add_node();
  for (int e = 0; e < static_cast<int>(st.edges.size()); ++e) {
    auto [a, b] = st.edges[e];
    if (keep[a] && keep[b]) out.add_edge(index[a], index[b], st.alpha[e]);
  }
  return out;
}

bool has_protected_leaf(const STree& st, const std::vector<char>& nodes,
                        std::span<const OrientedSep> protected_leaves) {
  auto adj = st.adjacency();
  for (int w = 0; w < st.node_count; ++w) {
    if (!nodes[w] || adj[w].size() != 1) continue;
    OrientedSep s = st.directed(adj[w][0].second, w);
    if (std::find(protected_leaves.begin(), protected_leaves.end(), s) != protected_leaves.end())
      return true;
  }
  return false;
}

// Deletes one branch of a duplicate sibling pair. False when there is none.
bool drop_duplicate_branch(STree& st, std::span<const OrientedSep> protected_leaves) {
  auto adj = st.adjacency();
  for (int t = 0; t < st.node_count; ++t)
    for (size_t i = 0; i < adj[t].size(); ++i)
      for (size_t j = i + 1; j < adj[t].size(); ++j) {
        auto [n1, e1] = adj[t][i];
        auto [n2, e2] = adj[t][j];
        if (st.directed(e1, t) != st.directed(e2, t)) continue;
        auto s1 = side_of(st.node_count, adj, n1, t);
        auto s2 = side_of(st.node_count, adj, n2, t);
        bool p1 = has_protected_leaf(st, s1, protected_leaves);
        bool p2 = has_protected_leaf(st, s2, protected_leaves);
        const auto& drop = (p2 && !p1) ? s1 : s2;
        std::vector<char> keep(st.node_count);
        for (int u = 0; u < st.node_count; ++u) keep[u] = !drop[u];
        st = restrict_to(st, keep);
        return true;
      }
  return false;
}

// Cuts the far side of a non-leaf edge labelled x down to a single leaf.
bool prune_inner_occurrence(STree& st, const OrientedSep& x) {
  auto adj = st.adjacency();
  for (int e = 0; e < static_cast<int>(st.edges.size()); ++e)
    for (int from : {st.edges[e].first, st.edges[e].second}) {
      if (st.directed(e, from) != x || adj[from].size() <= 1) continue;
      int to = from == st.edges[e].first ? st.edges[e].second : st.edges[e].first;
      auto drop = side_of(st.node_count, adj, from, to);
      std::vector<char> keep(st.node_count);
      for (int u = 0; u < st.node_count; ++u) keep[u] = !drop[u];
      keep[from] = 1;
      st = restrict_to(st, keep);
      return true;
    }
  return false;
}

}  // namespace

STree make_irredundant(const STree& input, std::span<const OrientedSep> protected_leaves) {
  check_tree_shape(input);
  STree st = input;
  for (const auto& x : protected_leaves) {
    auto ls = st.leaf_separations();
    if (std::find(ls.begin(), ls.end(), x) == ls.end())
      throw ArgumentError(to_string(x) + " is not a leaf separation");
  }
  while (drop_duplicate_branch(st, protected_leaves)) {
  }
  for (const auto& x : protected_leaves)
    while (prune_inner_occurrence(st, x)) {
    }
  while (drop_duplicate_branch(st, protected_leaves)) {
  }
  for (const auto& x : protected_leaves) {
    int count = 0;
    for (int e = 0; e < static_cast<int>(st.edges.size()); ++e)
      count += (st.alpha[e] == x) + (st.alpha[e].inverse() == x);
    auto ls = st.leaf_separations();
    if (count != 1 || std::find(ls.begin(), ls.end(), x) == ls.end())
      throw ArgumentError(to_string(x) + " does not end up at a unique leaf");
  }
  return st;
}

bool is_irredundant(const STree& st) {
  auto adj = st.adjacency();
  for (int t = 0; t < st.node_count; ++t)
    for (size_t i = 0; i < adj[t].size(); ++i)
      for (size_t j = i + 1; j < adj[t].size(); ++j)
        if (st.directed(adj[t][i].second, t) == st.directed(adj[t][j].second, t)) return false;
  return true;
}

bool is_standard(const AvoidanceFamily& f, const SepSystem& sys) {
  for (SepId r = 0; r < sys.oriented_count(); ++r) {
    const OrientedSep& s = sys.oriented(r);
    if (s.degenerate() || !is_trivial(s, sys)) continue;
    OrientedSep inv[1] = {s.inverse()};
    if (!family_contains(f, inv, sys)) return false;
  }
  return true;
}

namespace {

constexpr int kMaxTreeNodes = 1'000'000;

// Least fixed point of R(y): some star sigma in f contains y and R(z*) holds
// for every other z in sigma. A tree exists iff R(y) and R(y*) for some y.
class TreeSearch {
 public:
  TreeSearch(const SepSystem& sys, const AvoidanceFamily& f, long long max_nodes)
      : sys_(sys), f_(f), max_nodes_(max_nodes), m_(sys.oriented_count()),
        all_(sys.graph().vertices()), reached_(m_, 0), witness_(m_), compat_(m_) {
    for (SepId y = 0; y < m_; ++y)
      for (SepId z = 0; z < m_; ++z)
        if (SepSystem::separation_of(z) != SepSystem::separation_of(y) &&
            !sys.oriented(z).degenerate() && sys.leq(z, SepSystem::inverse(y)))
          compat_[y].push_back(z);
  }

  std::optional<STree> run() {
    for (bool changed = true; changed;) {
      changed = false;
      for (SepId y = 0; y < m_; ++y) {
        if (reached_[y]) continue;
        if (++attempts_ > max_nodes_)
          throw SizeError("tree search exceeded " + std::to_string(max_nodes_) + " steps");
        if (!attempt(y)) continue;
        reached_[y] = 1;
        changed = true;
        if (reached_[SepSystem::inverse(y)]) return assemble(std::min(y, SepSystem::inverse(y)));
      }
    }
    return std::nullopt;
  }

 private:
  bool in_family(std::initializer_list<SepId> ids) const {
    if (f_.kind == FamilyKind::kTangleStars) {
      auto it = ids.begin();
      if (ids.size() == 2) return sys_.covers(it[0], it[1]);
      return sys_.covers(it[0], it[1], it[2]);
    }
    std::vector<OrientedSep> star;
    for (SepId id : ids) star.push_back(sys_.oriented(id));
    return family_contains(f_, star, sys_);
  }

  bool attempt(SepId y) {
    const OrientedSep& sy = sys_.oriented(y);
    OrientedSep one[1] = {sy};
    if (sy.degenerate() || family_contains(f_, one, sys_)) {
      witness_[y] = {y};
      return true;
    }
    std::vector<SepId> avail;
    for (SepId z : compat_[y])
      if (reached_[SepSystem::inverse(z)]) avail.push_back(z);
    for (SepId z : avail)
      if (in_family({y, z})) {
        witness_[y] = {y, z};
        return true;
      }
    const VertexSet need = all_ - sy.a;
    for (size_t i = 0; i < avail.size(); ++i) {
      const VertexSet ai = sys_.oriented(avail[i]).a;
      for (size_t j = i + 1; j < avail.size(); ++j) {
        if (f_.kind == FamilyKind::kTangleStars &&
            !need.subset_of(ai | sys_.oriented(avail[j]).a))
          continue;
        if (!sys_.leq(avail[i], SepSystem::inverse(avail[j]))) continue;
        if (in_family({y, avail[i], avail[j]})) {
          witness_[y] = {y, avail[i], avail[j]};
          return true;
        }
      }
    }
    return false;
  }

  int build(SepId y, STree& st) const {
    if (st.node_count >= kMaxTreeNodes) throw SizeError("S-tree unfolding too large");
    const int node = st.add_node();
    for (SepId z : witness_[y]) {
      if (z == y) continue;
      const int child = build(SepSystem::inverse(z), st);
      st.add_edge(child, node, sys_.oriented(z));
    }
    return node;
  }

  STree assemble(SepId y) const {
    STree st;
    const int a = build(y, st);
    const int b = build(SepSystem::inverse(y), st);
    st.add_edge(b, a, sys_.oriented(y));
    return st;
  }

  const SepSystem& sys_;
  const AvoidanceFamily& f_;
  long long max_nodes_;
  long long attempts_ = 0;
  int m_;
  VertexSet all_;
  std::vector<char> reached_;
  std::vector<std::vector<SepId>> witness_;
  std::vector<std::vector<SepId>> compat_;
};

}  // namespace

std::optional<STree> find_stree_over(const SepSystem& sys, const AvoidanceFamily& f,
                                     long long max_nodes) {
  if (f.kind == FamilyKind::kTangleTriples || f.kind == FamilyKind::kProfileTriples)
    throw ArgumentError(std::string("tree search needs a family of stars, got ") +
                        family_name(f.kind));
  if (!is_standard(f, sys)) throw ContractError("family does not force every trivial separation");
  return TreeSearch(sys, f, max_nodes).run();
}

std::string to_string(const Width& w) { return w.infinite ? "inf" : std::to_string(w.value); }

Width branch_width(const Graph& g, const TreeDecomposition& td) {
  if (td.edges.empty()) return Width::inf();
  STree st = stree_from_treedec(td);
  int max_order = 0;
  for (const auto& s : st.alpha) max_order = std::max(max_order, s.order());
  const AvoidanceFamily stars = AvoidanceFamily::of(FamilyKind::kTangleStars);
  for (int k = max_order + 1; k <= g.order() + 1; ++k)
    if (validate_stree_over(st, stars, g).valid) return {k - 1, false};
  return Width::inf();
}

int width_over_family(const Graph& g, FamilyKind kind) {
  for (int k = 1; k <= g.order() + 1; ++k) {
    SepSystem sys = make_system(g, k);
    AvoidanceFamily f = kind == FamilyKind::kBlockOracle
                            ? block_family(sys)
                            : AvoidanceFamily::of(FamilyKind::kTangleStars);
    if (find_stree_over(sys, f)) return k - 1;
  }
  return g.order();
}

bool is_refinement(const TreeDecomposition& fine, const TreeDecomposition& coarse) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> have;
  for (const auto& s : induced_separations(fine)) {
    OrientedSep c = canonical_orientation(s);
    have.emplace(c.a.bits(), c.b.bits());
  }
  for (const auto& s : induced_separations(coarse)) {
    OrientedSep c = canonical_orientation(s);
    if (!have.count({c.a.bits(), c.b.bits()})) return false;
  }
  return true;
}

}  // namespace tref
