#include "tref/refine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tref/distinguish.hpp"
#include "tref/errors.hpp"

namespace tref {

namespace {

template <typename Fn>
void for_each_combination(const std::vector<Vertex>& pool, int size, Fn&& fn) {
  VertexSet cur;
  auto rec = [&](auto&& self, size_t start, int left) -> void {
    if (left == 0) {
      fn(cur);
      return;
    }
    for (size_t i = start; i + left <= pool.size(); ++i) {
      cur.insert(pool[i]);
      self(self, i + 1, left - 1);
      cur.erase(pool[i]);
    }
  };
  rec(rec, 0, size);
}

[[noreturn]] void broken(const std::string& where, const std::string& what) {
  throw InvariantViolation(where + ": " + what);
}

std::vector<OrientedSep> seps_of(std::span<const SepId> ids, const SepSystem& sys) {
  std::vector<OrientedSep> out;
  for (SepId id : ids) out.push_back(sys.oriented(id));
  return out;
}

bool efficient_distinguisher(SepId id, std::span<const Tangle> phi, const SepSystem& sys) {
  for (size_t i = 0; i < phi.size(); ++i)
    for (size_t j = 0; j < phi.size(); ++j)
      if (phi[i].contains(id) && phi[j].contains(SepSystem::inverse(id)) &&
          kappa(phi[i], phi[j], sys).order == sys.order(id))
        return true;
  return false;
}

int occurrences(const STree& st, const OrientedSep& s) {
  int n = 0;
  for (const auto& a : st.alpha) n += (a == s) + (a.inverse() == s);
  return n;
}

bool is_leaf_separation(const STree& st, const OrientedSep& s) {
  auto ls = st.leaf_separations();
  return std::find(ls.begin(), ls.end(), s) != ls.end();
}

// The leaf w with alpha(w, neighbour) = s.
int leaf_with(const STree& st, const OrientedSep& s) {
  auto adj = st.adjacency();
  int found = -1;
  for (int w : st.leaves())
    if (st.directed(adj[w][0].second, w) == s) {
      if (found >= 0) broken("leaf_with", to_string(s) + " sits at two leaves");
      found = w;
    }
  if (found < 0) broken("leaf_with", to_string(s) + " is not a leaf separation");
  return found;
}

// Adds sub to st with its leaf `leaf` identified with node `target` of st.
void graft(STree& st, const STree& sub, int leaf, int target) {
  std::vector<int> map(sub.node_count);
  for (int t = 0; t < sub.node_count; ++t) map[t] = t == leaf ? target : st.add_node();
  for (size_t e = 0; e < sub.edges.size(); ++e)
    st.add_edge(map[sub.edges[e].first], map[sub.edges[e].second], sub.alpha[e]);
}

}  // namespace

OrientedSep min_order_between(const Graph& g, const OrientedSep& lower, const OrientedSep& upper) {
  if (!leq(lower, upper))
    throw ContractError(to_string(lower) + " is not below " + to_string(upper));
  const VertexSet forced = lower.a & upper.b;
  const VertexSet a_side = upper.a - upper.b;
  const VertexSet b_side = lower.b - lower.a;
  const std::vector<Vertex> pool = ((upper.a & lower.b) - forced).members();
  for (int extra = 0; extra <= static_cast<int>(pool.size()); ++extra) {
    std::optional<OrientedSep> best;
    for_each_combination(pool, extra, [&](VertexSet chosen) {
      const VertexSet z = forced | chosen;
      VertexSet a = z;
      for (const auto& c : components(g, z)) {
        if (c.subset_of(b_side)) continue;
        if (!c.subset_of(a_side)) return;
        a |= c;
      }
      OrientedSep cand{a, z | (g.vertices() - a)};
      if (!best || CanonicalLess{}(cand, *best)) best = cand;
    });
    if (best) return *best;
  }
  broken("min_order_between", "upper bound is not a separation of g");
}

UncrossedPair uncross_pair(const OrientedSep& x1, const OrientedSep& x2, const SepSystem& sys,
                           PairTieBreak tie) {
  OrientedSep u1 = min_order_between(sys.graph(), meet(x1, x2.inverse()), x1);
  if (tie == PairTieBreak::kKeepFirst && u1.order() == x1.order()) u1 = x1;
  const OrientedSep u2 = meet(x2, u1.inverse());
  const std::string where = "uncross_pair";
  if (u1.order() > x1.order() || u2.order() > x2.order()) broken(where, "order increased");
  if (meet(x1, u2.inverse()) != u1) broken(where, "u1 differs from x1 ^ u2*");
  if (!leq(u1, u2.inverse())) broken(where, "u1, u2 is not a star");
  if ((x1.a | x2.a) != (u1.a | u2.a)) broken(where, "small sides lost a vertex");
  if (!linked_to(u1.inverse(), x1.inverse(), sys)) broken(where, "u1 not linked to x1");
  if (!linked_to(u2.inverse(), x2.inverse(), sys)) broken(where, "u2 not linked to x2");
  return {u1, u2};
}

std::vector<OrientedSep> uncross_star(std::span<const OrientedSep> rs,
                                      std::span<const OrientedSep> xs,
                                      std::span<const Tangle> phi, const SepSystem& sys) {
  if (!is_star(rs)) throw ContractError("rs is not a star");
  for (const auto& r : rs) {
    auto id = sys.find(r);
    if (!id || !efficient_distinguisher(*id, phi, sys))
      throw ContractError(to_string(r) + " distinguishes no pair efficiently");
  }
  for (const auto& x : xs) {
    auto id = sys.find(x);
    if (!id) throw ContractError(to_string(x) + " is not in the system");
    for (const auto& p : phi)
      if (!p.contains(*id)) throw ContractError(to_string(x) + " is not in every tangle");
  }

  const size_t m = xs.size();
  std::vector<OrientedSep> y(xs.begin(), xs.end());
  y.insert(y.end(), rs.begin(), rs.end());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < y.size(); ++j) {
      if (j >= m) {
        auto p = uncross_pair(y[j], y[i], sys, PairTieBreak::kKeepFirst);
        if (p.u1 != y[j]) broken("uncross_star", "distinguisher " + to_string(y[j]) + " moved");
        y[i] = p.u2;
      } else {
        auto p = uncross_pair(y[i], y[j], sys);
        y[i] = p.u1;
        y[j] = p.u2;
      }
    }
  std::vector<OrientedSep> us(y.begin(), y.begin() + static_cast<long>(m));

  const std::string where = "uncross_star";
  if (!is_star(y)) broken(where, "result is not a star");
  VertexSet before, after;
  for (const auto& r : rs) before |= r.a;
  after = before;
  for (size_t j = 0; j < m; ++j) {
    if (us[j].order() > xs[j].order()) broken(where, "order increased");
    if (!linked_to(us[j].inverse(), xs[j].inverse(), sys)) broken(where, "u not linked to x");
    OrientedSep low = xs[j];
    for (const auto& r : rs) low = meet(low, r.inverse());
    for (size_t l = 0; l < m; ++l)
      if (l != j) low = meet(low, xs[l].inverse());
    if (!leq(low, us[j]) || !leq(us[j], xs[j])) broken(where, "u outside its interval");
    before |= xs[j].a;
    after |= us[j].a;
  }
  if (before != after) broken(where, "small sides lost a vertex");
  return us;
}

STree shift_stree(const STree& st, const OrientedSep& r, const OrientedSep& s,
                  const AvoidanceFamily& f, const SepSystem& sys) {
  check_tree_shape(st);
  if (occurrences(st, r) != 1 || !is_leaf_separation(st, r))
    throw ContractError(to_string(r) + " is not a unique leaf separation");
  if (r.degenerate() || is_trivial(r, sys))
    throw ContractError(to_string(r) + " is trivial or degenerate");
  if (!is_irredundant(st)) throw ContractError("tree is redundant");
  if (!emulates(s, r, sys))
    throw ContractError(to_string(s) + " does not emulate " + to_string(r));
  STree out = st;
  for (auto& a : out.alpha)
    a = a == r.inverse() ? shift_sep(r, r, s).inverse() : shift_sep(a, r, s);
  auto report = validate_stree_over(out, f.with_singletons({s.inverse()}, false), sys.graph());
  if (!report.valid)
    broken("shift_stree", "shifted tree has " + std::to_string(report.bad_nodes.size()) +
                              " stars outside the family");
  return out;
}

PartResult refine_part(const SepSystem& sys, const AvoidanceFamily& f,
                       std::span<const OrientedSep> sigma, std::span<const Tangle> phi,
                       long long max_nodes) {
  if (sigma.empty()) throw ContractError("sigma is empty");
  if (!is_star(sigma)) throw ContractError("sigma is not a star");
  std::vector<const Tangle*> far(sigma.size(), nullptr);
  std::vector<OrientedSep> backs;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i].degenerate()) throw ContractError("sigma contains the degenerate separation");
    const SepId id = sys.id_of(sigma[i]);
    for (const auto& p : phi)
      for (const auto& q : phi)
        if (!far[i] && p.contains(id) && q.contains(SepSystem::inverse(id)) &&
            kappa(p, q, sys).order == sys.order(id))
          far[i] = &q;
    if (!far[i]) throw ContractError(to_string(sigma[i]) + " distinguishes no pair efficiently");
    backs.push_back(sigma[i].inverse());
  }

  const AvoidanceFamily closed = f.with_singletons(backs, true);
  auto tangles = enumerate_tangles(sys, closed, max_nodes);
  if (!tangles.empty()) return tangles.front();
  auto found = find_stree_over(sys, closed, max_nodes);
  if (!found) broken("refine_part", "neither a tangle nor a tree over the closed family");

  const std::string where = "refine_part";
  STree st = *found;
  std::vector<OrientedSep> placed;
  for (size_t i = sigma.size(); i-- > 0;) {
    st = make_irredundant(st, placed);
    const int t = locate(far[i]->orientation, st, sys);
    auto star = st.in_star(t);
    if (st.adjacency()[t].size() != 1 || star.size() != 1 || !leq(backs[i], star[0]))
      broken(where, "far tangle of " + to_string(sigma[i]) + " is not at a forbidden leaf");
    const OrientedSep x = star[0].inverse();
    for (SepId r = 0; r < sys.oriented_count(); ++r)
      if (leq(x, sys.oriented(r)) && meet(sigma[i], sys.oriented(r)).order() < sigma[i].order())
        broken(where, to_string(sigma[i]) + " is not efficient above " + to_string(x));
    if (!emulates(sigma[i], x, sys))
      broken(where, to_string(sigma[i]) + " does not emulate " + to_string(x));
    placed.push_back(x);
    st = make_irredundant(st, placed);
    placed.pop_back();
    st = shift_stree(st, x, sigma[i], closed, sys);
    placed.push_back(sigma[i]);
  }
  auto report = validate_stree_over(st, f.with_singletons(backs, false), sys.graph());
  if (!report.valid) broken(where, "tree is not over f plus the singletons {s*}");
  for (const auto& s : sigma)
    if (!is_leaf_separation(st, s)) broken(where, to_string(s) + " is not a leaf separation");
  return st;
}

STree iness_tree(const SepSystem& sys, const Tangle& o, const OrientedSep& x_back,
                 std::span<const Tangle> phi, long long max_nodes) {
  const SepId id = sys.id_of(x_back);
  if (is_trivial(x_back, sys)) throw ArgumentError(to_string(x_back) + " is trivial");
  auto mi = maximal_inessential(o, phi, sys);
  if (std::find(mi.begin(), mi.end(), id) == mi.end())
    throw ContractError(to_string(x_back) + " is not maximal inessential");
  const OrientedSep x = x_back.inverse();

  const std::string where = "iness_tree";
  const AvoidanceFamily stars = AvoidanceFamily::of(FamilyKind::kTangleStars);
  const AvoidanceFamily closed = stars.with_singletons({x_back}, true);
  const AvoidanceFamily plain = stars.with_singletons({x_back}, false);
  auto found = find_stree_over(sys, closed, max_nodes);
  if (!found) broken(where, "no tree over the closed family");
  STree st = make_irredundant(*found, {});
  for (;;) {
    auto report = validate_stree_over(st, plain, sys.graph());
    if (report.valid) break;
    std::optional<OrientedSep> r;
    for (int t : report.bad_nodes) {
      auto star = st.in_star(t);
      if (star.size() == 1 && less(x_back, star[0]) && emulates(x, star[0].inverse(), sys)) {
        r = star[0].inverse();
        break;
      }
    }
    if (!r) broken(where, "offending leaf cannot be shifted onto " + to_string(x));
    const OrientedSep keep[1] = {*r};
    st = shift_stree(make_irredundant(st, keep), *r, x, closed, sys);
  }
  const int t = locate(o.orientation, st, sys);
  auto star = st.in_star(t);
  if (star.size() != 1 || star[0] != x_back) broken(where, to_string(x) + " is not o's leaf");
  const OrientedSep keep[1] = {x};
  return make_irredundant(st, keep);
}

namespace {

AvoidanceFamily tree_family(FamilyKind kind, const SepSystem& sys) {
  switch (kind) {
    case FamilyKind::kTangleStars:
    case FamilyKind::kTangleTriples:
      return AvoidanceFamily::of(FamilyKind::kTangleStars);
    case FamilyKind::kBlockOracle:
      return block_family(sys);
    default:
      throw ArgumentError(std::string("no refinement over ") + family_name(kind));
  }
}

AvoidanceFamily tangle_family(FamilyKind kind, const SepSystem& sys) {
  if (kind == FamilyKind::kTangleTriples) return AvoidanceFamily::of(kind);
  return tree_family(kind, sys);
}

int locate_any(const Tangle& o, const STree& st, const SepSystem& sys) {
  return st.edges.empty() ? 0 : locate(o.orientation, st, sys);
}

// Fills td, part_tangle and torso_width from d.tree and checks the result.
void finish(Decomposition& d, const SepSystem& sys, const std::string& where) {
  const Graph& g = sys.graph();
  const int k = sys.k();
  if (d.tree.edges.empty()) {
    d.td = {{g.vertices()}, {}};
  } else {
    check_tree_shape(d.tree);
    d.td = treedec_from_stree(g, d.tree);
  }
  std::set<OrientedSep, CanonicalLess> labels;
  for (const auto& a : d.tree.alpha) {
    if (!sys.contains(a)) broken(where, to_string(a) + " has order at least k");
    labels.insert(canonical_orientation(a));
  }
  std::vector<OrientedSep> distinct(labels.begin(), labels.end());
  if (!pairwise_nested(distinct)) broken(where, "separations cross");
  try {
    validate_treedec(g, d.td);
  } catch (const ValidationError& e) {
    broken(where, e.what());
  }
  if (adhesion(d.td) >= k) broken(where, "adhesion at least k");
  if (!is_refinement(d.td, d.skeleton)) broken(where, "does not refine the skeleton");

  d.part_tangle.assign(d.td.parts.size(), -1);
  for (size_t i = 0; i < d.tangles.size(); ++i) {
    const int t = locate_any(d.tangles[i], d.tree, sys);
    if (d.part_tangle[t] >= 0) broken(where, "two tangles share a part");
    d.part_tangle[t] = static_cast<int>(i);
  }
  d.torso_width.assign(d.td.parts.size(), std::nullopt);
  for (size_t t = 0; t < d.td.parts.size(); ++t) {
    if (d.part_tangle[t] >= 0) continue;
    Torso tor = torso(g, d.td.parts[t], adhesion_sets(d.td, static_cast<int>(t)));
    const int w = tor.graph.order() == 0 ? 0 : width_over_family(tor.graph);
    if (w >= k) broken(where, "inessential part " + std::to_string(t) + " has torso width " +
                                  std::to_string(w));
    d.torso_width[t] = w;
  }
}

}  // namespace

Decomposition refine_all(const Graph& g, int k, FamilyKind kind, long long max_nodes) {
  if (k < 3) throw ContractError("refinement needs k >= 3");
  const SepSystem sys(g, k);
  const AvoidanceFamily f = tree_family(kind, sys);
  const std::string where = "refine_all";

  Decomposition d;
  d.tangles = enumerate_tangles(sys, tangle_family(kind, sys), max_nodes);
  d.skeleton_seps = build_distinguishing_set(sys, d.tangles);
  if (d.skeleton_seps.empty()) {
    d.skeleton = {{g.vertices()}, {}};
  } else {
    d.skeleton = treedec_from_nested_set(g, d.skeleton_seps);
  }

  if (d.tangles.empty()) {
    auto found = find_stree_over(sys, f, max_nodes);
    if (!found) broken(where, "no tangle and no tree");
    d.tree = make_irredundant(*found, {});
    d.origin.assign(d.tree.node_count, 0);
    finish(d, sys, where);
    return d;
  }

  STree skel;
  skel.node_count = static_cast<int>(d.skeleton.parts.size());
  if (!d.skeleton.edges.empty()) skel = stree_from_treedec(d.skeleton);
  std::vector<int> holder(skel.node_count, -1);
  for (size_t i = 0; i < d.tangles.size(); ++i) {
    const int t = locate_any(d.tangles[i], skel, sys);
    if (holder[t] >= 0) broken(where, "skeleton leaves two tangles in one part");
    holder[t] = static_cast<int>(i);
  }

  // attach[t][s] is the node that takes over t's end of the skeleton edge
  // whose label towards t is s.
  STree out;
  std::vector<std::map<OrientedSep, int, CanonicalLess>> attach(skel.node_count);
  std::vector<int> node_of(skel.node_count, -1);
  for (int t = 0; t < skel.node_count; ++t)
    if (holder[t] >= 0) {
      node_of[t] = out.add_node();
      d.origin.push_back(t);
    }
  for (int t = 0; t < skel.node_count; ++t) {
    if (holder[t] >= 0) continue;
    const auto sigma = skel.in_star(t);
    auto part = refine_part(sys, f, sigma, d.tangles, max_nodes);
    if (std::holds_alternative<Tangle>(part)) broken(where, "tangle found in an inessential part");
    const STree& sub = std::get<STree>(part);
    std::vector<int> map(sub.node_count, -2);
    for (const auto& s : sigma) map[leaf_with(sub, s)] = -1;
    for (int u = 0; u < sub.node_count; ++u)
      if (map[u] == -2) {
        map[u] = out.add_node();
        d.origin.push_back(t);
      }
    auto adj = sub.adjacency();
    for (const auto& s : sigma) {
      const int w = leaf_with(sub, s);
      const int u = adj[w][0].first;
      if (map[u] < 0) broken(where, "two leaves of sigma are adjacent");
      attach[t][s] = map[u];
    }
    for (size_t e = 0; e < sub.edges.size(); ++e) {
      auto [a, b] = sub.edges[e];
      if (map[a] >= 0 && map[b] >= 0) out.add_edge(map[a], map[b], sub.alpha[e]);
    }
  }
  for (size_t e = 0; e < skel.edges.size(); ++e) {
    auto [a, b] = skel.edges[e];
    const OrientedSep& s = skel.alpha[e];
    const int from = holder[a] >= 0 ? node_of[a] : attach[a].at(s.inverse());
    const int to = holder[b] >= 0 ? node_of[b] : attach[b].at(s);
    out.add_edge(from, to, s);
  }
  d.tree = std::move(out);
  finish(d, sys, where);
  return d;
}

Decomposition refine_essential(const Graph& g, int k, const Decomposition& d,
                               long long max_nodes) {
  const SepSystem sys(g, k);
  const std::string where = "refine_essential";
  Decomposition out = d;
  const AvoidanceFamily stars = AvoidanceFamily::of(FamilyKind::kTangleStars);
  std::vector<std::vector<OrientedSep>> rs_of;
  for (const auto& o : d.tangles) {
    const int t = locate_any(o, d.tree, sys);
    auto rs = d.tree.edges.empty() ? std::vector<OrientedSep>{} : d.tree.in_star(t);
    auto xs = seps_of(maximal_inessential(o, d.tangles, sys), sys);
    auto us = uncross_star(rs, xs, d.tangles, sys);
    std::set<OrientedSep, CanonicalLess> seen;
    for (size_t j = 0; j < us.size(); ++j) {
      const OrientedSep& u_back = us[j];
      if (is_trivial(xs[j], sys)) {
        if (!is_trivial(u_back, sys)) broken(where, "u below a trivial x is not trivial");
        continue;
      }
      if (u_back.small() || !seen.insert(u_back).second) continue;
      if (!emulates(u_back.inverse(), xs[j].inverse(), sys))
        broken(where, to_string(u_back.inverse()) + " is linked but does not emulate");
      STree sub = iness_tree(sys, o, xs[j], d.tangles, max_nodes);
      sub = shift_stree(sub, xs[j].inverse(), u_back.inverse(),
                        stars.with_singletons({xs[j]}, false), sys);
      graft(out.tree, sub, leaf_with(sub, u_back.inverse()), t);
      out.origin.resize(out.tree.node_count, d.origin[t]);
    }
    rs_of.push_back(std::move(rs));
  }
  finish(out, sys, where);
  if (!is_refinement(out.td, d.td)) broken(where, "does not refine the input");
  for (size_t i = 0; i < out.tangles.size(); ++i) {
    const int t = locate_any(out.tangles[i], out.tree, sys);
    VertexSet bad = inessentially_separated(sys, out.tangles[i], out.tangles, rs_of[i]) &
                    out.td.parts[t];
    if (!bad.empty())
      broken(where, "part of tangle " + std::to_string(i) + " keeps inessentially separated " +
                        "vertices " + to_string(OrientedSep{bad, bad}));
  }
  return out;
}

namespace {

VertexSet separated_below(const SepSystem& sys, const std::vector<OrientedSep>& tops,
                          std::span<const OrientedSep> also_nested) {
  VertexSet out;
  for (SepId id = 0; id < sys.oriented_count(); ++id) {
    const OrientedSep& s = sys.oriented(id);
    if ((s.a - s.b).subset_of(out)) continue;
    if (std::none_of(tops.begin(), tops.end(), [&](const auto& m) { return leq(s, m); }))
      continue;
    auto nested_with = [&](const OrientedSep& m) { return nested(s, m); };
    if (std::all_of(tops.begin(), tops.end(), nested_with) &&
        std::all_of(also_nested.begin(), also_nested.end(), nested_with))
      out |= s.a - s.b;
  }
  return out;
}

}  // namespace

VertexSet inessentially_separated(const SepSystem& sys, const Tangle& o,
                                  std::span<const Tangle> phi, std::span<const OrientedSep> rs) {
  return separated_below(sys, seps_of(maximal_inessential(o, phi, sys), sys), rs);
}

VertexSet well_separated(const SepSystem& sys, const Tangle& o) {
  return separated_below(sys, seps_of(maximal_elements(o, sys), sys), {});
}

VertexStatus vertex_status(const SepSystem& sys, const Tangle& o, std::span<const Tangle> phi,
                           std::span<const OrientedSep> rs, Vertex v) {
  if (v < 0 || v >= sys.graph().order()) throw ArgumentError("no vertex " + std::to_string(v));
  return {inessentially_separated(sys, o, phi, rs).contains(v), well_separated(sys, o).contains(v)};
}

}  // namespace tref
