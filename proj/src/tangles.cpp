#include "tref/tangles.hpp"

#include <algorithm>

#include "tref/errors.hpp"

namespace tref {

const char* family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kTangleTriples: return "tangle-triples";
    case FamilyKind::kTangleStars: return "tangle-stars";
    case FamilyKind::kProfileTriples: return "profile";
    case FamilyKind::kBlockOracle: return "block";
    case FamilyKind::kCustom: return "custom";
  }
  return "?";
}

AvoidanceFamily AvoidanceFamily::with_singletons(std::vector<OrientedSep> extra,
                                                 bool upward_closed) const {
  AvoidanceFamily f = *this;
  f.extra_singletons.insert(f.extra_singletons.end(), extra.begin(), extra.end());
  f.closure = f.closure || upward_closed;
  return f;
}

AvoidanceFamily block_family(const SepSystem& sys) {
  AvoidanceFamily f = AvoidanceFamily::of(FamilyKind::kBlockOracle);
  f.blocks = enumerate_blocks(sys);
  return f;
}

bool forbids_singleton(const AvoidanceFamily& f, const OrientedSep& z) {
  for (const auto& e : f.extra_singletons)
    if (f.closure ? leq(e, z) : e == z) return true;
  return false;
}

namespace {

std::vector<OrientedSep> unique_members(std::span<const OrientedSep> subset) {
  std::vector<OrientedSep> out;
  for (const auto& s : subset)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

bool same_set(std::vector<OrientedSep> a, const std::vector<OrientedSep>& b) {
  a = unique_members(a);
  if (a.size() != b.size()) return false;
  for (const auto& s : a)
    if (std::find(b.begin(), b.end(), s) == b.end()) return false;
  return true;
}

bool profile_pattern(const std::vector<OrientedSep>& u) {
  for (const auto& r : u)
    for (const auto& s : u)
      if (same_set({r, s, meet(r.inverse(), s.inverse())}, u)) return true;
  return false;
}

bool block_extends(VertexSet block, const std::vector<OrientedSep>& star) {
  for (const auto& s : star)
    if (!block.subset_of(s.b)) return false;
  return true;
}

}  // namespace

bool family_contains(const AvoidanceFamily& f, std::span<const OrientedSep> subset,
                     const Graph& g) {
  std::vector<OrientedSep> u = unique_members(subset);
  if (u.size() == 1 && forbids_singleton(f, u[0])) return true;
  switch (f.kind) {
    case FamilyKind::kTangleTriples:
      return u.size() <= 3 && covers_sides(g, u);
    case FamilyKind::kTangleStars:
      return u.size() <= 3 && is_star(u) && covers_sides(g, u);
    case FamilyKind::kProfileTriples:
      return !u.empty() && u.size() <= 3 && profile_pattern(u);
    case FamilyKind::kBlockOracle:
      if (!is_star(u)) return false;
      for (VertexSet b : f.blocks)
        if (block_extends(b, u)) return false;
      return true;
    case FamilyKind::kCustom:
      return f.custom && f.custom(u);
  }
  return false;
}

Consistency is_consistent(const Orientation& o, const SepSystem& sys) {
  Consistency c{true, true};
  const auto& ids = o.ids();
  for (size_t i = 0; i < ids.size(); ++i) {
    SepId x = ids[i];
    if (sys.leq(SepSystem::inverse(x), x)) c.regular = false;
    for (size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      if (sys.leq(SepSystem::inverse(x), ids[j])) c.consistent = c.regular = false;
    }
  }
  if (c.regular && !c.consistent) throw InvariantViolation("regular orientation not consistent");
  return c;
}

bool avoids(const Orientation& o, const AvoidanceFamily& f, const SepSystem& sys) {
  if (!is_consistent(o, sys).consistent) return false;
  std::vector<OrientedSep> members;
  for (SepId id : o.ids()) members.push_back(sys.oriented(id));
  if (f.star_family())
    for (const auto& m : members)
      if (m.degenerate()) return false;
  if (f.kind == FamilyKind::kBlockOracle) {
    for (const auto& m : members)
      if (forbids_singleton(f, m)) return false;
    for (VertexSet b : f.blocks)
      if (block_orientation(b, sys) == o) return true;
    return false;
  }
  const size_t m = members.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j)
      for (size_t l = j; l < m; ++l) {
        OrientedSep trio[3] = {members[i], members[j], members[l]};
        if (family_contains(f, trio, sys)) return false;
      }
  return true;
}

namespace {

class TangleSearch {
 public:
  TangleSearch(const SepSystem& sys, const AvoidanceFamily& f, long long max_nodes)
      : sys_(sys), f_(f), max_nodes_(max_nodes), all_(sys.graph().vertices()) {
    single_banned_.resize(sys.oriented_count());
    for (SepId id = 0; id < sys.oriented_count(); ++id) {
      const OrientedSep& z = sys.oriented(id);
      single_banned_[id] = forbids_singleton(f, z) || (f.star_family() && z.degenerate());
    }
    banned_.assign(sys.oriented_count(), 0);
  }

  std::vector<Tangle> run() {
    frontiers_.emplace_back();
    dfs(0);
    return std::move(out_);
  }

 private:
  void dfs(int i) {
    if (++nodes_ > max_nodes_)
      throw SizeError("tangle search exceeded " + std::to_string(max_nodes_) + " nodes");
    if (i == sys_.size()) {
      out_.push_back({Orientation(chosen_), sys_.k()});
      return;
    }
    for (int flag = 0; flag < 2; ++flag) {
      const SepId y = 2 * i + flag;
      if (single_banned_[y] || banned_[y] > 0 || !consistent_with(y)) continue;
      std::vector<SepId> new_bans;
      if (!avoidance_ok(y, i, new_bans)) continue;
      for (SepId b : new_bans) ++banned_[b];
      chosen_.push_back(y);
      dfs(i + 1);
      chosen_.pop_back();
      if (f_.kind == FamilyKind::kTangleTriples) frontiers_.pop_back();
      for (SepId b : new_bans) --banned_[b];
    }
  }

  bool consistent_with(SepId y) const {
    const SepId yi = SepSystem::inverse(y);
    for (SepId x : chosen_)
      if (sys_.leq(SepSystem::inverse(x), y) || sys_.leq(yi, x)) return false;
    return true;
  }

  bool avoidance_ok(SepId y, int depth, std::vector<SepId>& new_bans) {
    switch (f_.kind) {
      case FamilyKind::kTangleTriples: return triples_ok(y);
      case FamilyKind::kTangleStars: return stars_ok(y);
      case FamilyKind::kProfileTriples: return profile_ok(y, depth, new_bans);
      case FamilyKind::kCustom: return custom_ok(y);
      case FamilyKind::kBlockOracle: break;
    }
    return true;
  }

  // Only the inclusion-maximal A-sides matter for covering triples.
  bool triples_ok(SepId y) {
    const auto& front = frontiers_.back();
    const VertexSet ay = sys_.oriented(y).a;
    for (SepId f : front)
      if (ay.subset_of(sys_.oriented(f).a)) {
        frontiers_.push_back(front);
        return true;
      }
    if (sys_.covers(y)) return false;
    for (size_t i = 0; i < front.size(); ++i) {
      if (sys_.covers(y, front[i])) return false;
      for (size_t j = i + 1; j < front.size(); ++j)
        if (sys_.covers(y, front[i], front[j])) return false;
    }
    std::vector<SepId> next;
    for (SepId f : front)
      if (!sys_.oriented(f).a.subset_of(ay)) next.push_back(f);
    next.push_back(y);
    frontiers_.push_back(std::move(next));
    return true;
  }

  bool stars_ok(SepId y) {
    if (sys_.covers(y)) return false;
    const SepId yi = SepSystem::inverse(y);
    const VertexSet need = all_ - sys_.oriented(y).a;
    std::vector<SepId> cand;
    for (SepId x : chosen_)
      if (!sys_.oriented(x).degenerate() && sys_.leq(x, yi)) cand.push_back(x);
    for (size_t i = 0; i < cand.size(); ++i) {
      if (sys_.covers(y, cand[i])) return false;
      const VertexSet ai = sys_.oriented(cand[i]).a;
      for (size_t j = i + 1; j < cand.size(); ++j) {
        if (!need.subset_of(ai | sys_.oriented(cand[j]).a)) continue;
        if (sys_.leq(cand[i], SepSystem::inverse(cand[j])) && sys_.covers(y, cand[i], cand[j]))
          return false;
      }
    }
    return true;
  }

  // {r, s, r* ∧ s*}: y as r (or s) against every chosen s; corners not yet
  // decided are banned so they are caught when their turn comes.
  bool profile_ok(SepId y, int depth, std::vector<SepId>& new_bans) {
    const OrientedSep yi = sys_.oriented(y).inverse();
    auto check = [&](SepId x) {
      auto t = sys_.find(meet(yi, sys_.oriented(x).inverse()));
      if (!t) return true;
      // Both ids of a degenerate separation name the same oriented separation.
      if (*t == y || *t == x || sys_.oriented(*t).degenerate()) return false;
      const int ts = SepSystem::separation_of(*t);
      if (ts < depth) return chosen_[ts] != *t;
      if (ts > depth) new_bans.push_back(*t);
      return true;
    };
    if (!check(y)) return false;
    for (SepId x : chosen_)
      if (!check(x)) return false;
    return true;
  }

  bool custom_ok(SepId y) {
    const OrientedSep sy = sys_.oriented(y);
    OrientedSep one[1] = {sy};
    if (family_contains(f_, one, sys_)) return false;
    for (size_t i = 0; i < chosen_.size(); ++i) {
      OrientedSep two[2] = {sy, sys_.oriented(chosen_[i])};
      if (family_contains(f_, two, sys_)) return false;
      for (size_t j = i + 1; j < chosen_.size(); ++j) {
        OrientedSep three[3] = {sy, sys_.oriented(chosen_[i]), sys_.oriented(chosen_[j])};
        if (family_contains(f_, three, sys_)) return false;
      }
    }
    return true;
  }

  const SepSystem& sys_;
  const AvoidanceFamily& f_;
  long long max_nodes_;
  long long nodes_ = 0;
  VertexSet all_;
  std::vector<char> single_banned_;
  std::vector<int> banned_;
  std::vector<SepId> chosen_;
  std::vector<std::vector<SepId>> frontiers_;
  std::vector<Tangle> out_;
};

std::vector<Tangle> block_tangles(const SepSystem& sys, const AvoidanceFamily& f) {
  std::vector<Tangle> out;
  for (VertexSet b : f.blocks) {
    Orientation o = block_orientation(b, sys);
    bool ok = is_consistent(o, sys).consistent;
    for (SepId id : o.ids()) ok = ok && !forbids_singleton(f, sys.oriented(id));
    if (ok) out.push_back({std::move(o), sys.k()});
  }
  std::sort(out.begin(), out.end(),
            [](const Tangle& a, const Tangle& b) { return a.orientation < b.orientation; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Tangle> enumerate_tangles(const SepSystem& sys, const AvoidanceFamily& f,
                                      long long max_nodes) {
  if (f.kind == FamilyKind::kBlockOracle) return block_tangles(sys, f);
  return TangleSearch(sys, f, max_nodes).run();
}

namespace {

// Bron-Kerbosch with pivoting over mask adjacency.
void maximal_cliques(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = (p | x).first();
  int best = -1;
  (p | x).for_each([&](Vertex u) {
    int c = (p & adj[u]).size();
    if (c > best) best = c, pivot = u;
  });
  (p - adj[pivot]).for_each([&](Vertex v) {
    VertexSet rv = r;
    rv.insert(v);
    maximal_cliques(adj, rv, p & adj[v], x & adj[v], out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace

std::vector<VertexSet> enumerate_blocks(const SepSystem& sys) {
  const Graph& g = sys.graph();
  const int n = g.order();
  std::vector<VertexSet> insep(n, g.vertices());
  for (int v = 0; v < n; ++v) insep[v].erase(v);
  for (int i = 0; i < sys.size(); ++i) {
    const OrientedSep& s = sys.separation(i);
    VertexSet left = s.a - s.b, right = s.b - s.a;
    left.for_each([&](Vertex u) { insep[u] = insep[u] - right; });
    right.for_each([&](Vertex u) { insep[u] = insep[u] - left; });
  }
  std::vector<VertexSet> cliques;
  maximal_cliques(insep, VertexSet{}, g.vertices(), VertexSet{}, cliques);
  std::vector<VertexSet> out;
  for (VertexSet c : cliques)
    if (c.size() >= sys.k()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_blocks(const Graph& g, int k) {
  return enumerate_blocks(make_system(g, k));
}

Orientation block_orientation(VertexSet block, const SepSystem& sys) {
  std::vector<SepId> ids(sys.size());
  for (int i = 0; i < sys.size(); ++i)
    ids[i] = block.subset_of(sys.separation(i).b) ? 2 * i : 2 * i + 1;
  return Orientation(std::move(ids));
}

Kappa kappa(const Tangle& p1, const Tangle& p2, const SepSystem& sys) {
  Kappa out{-1, {}};
  for (int i = 0; i < sys.size(); ++i) {
    if (p1.orientation.choice(i) == p2.orientation.choice(i)) continue;
    const int ord = sys.order(2 * i);
    if (out.order < 0 || ord < out.order) out = {ord, {}};
    if (ord == out.order) out.distinguishers.push_back(i);
  }
  if (out.order < 0) throw ArgumentError("kappa of a tangle with itself");
  return out;
}

std::vector<int> essential_seps(std::span<const Tangle> phi, const SepSystem& sys) {
  std::vector<char> mark(sys.size(), 0);
  for (size_t i = 0; i < phi.size(); ++i)
    for (size_t j = i + 1; j < phi.size(); ++j)
      for (int s : kappa(phi[i], phi[j], sys).distinguishers) mark[s] = 1;
  std::vector<int> out;
  for (int i = 0; i < sys.size(); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

std::vector<SepId> inessential(std::span<const Tangle> phi, const SepSystem& sys) {
  std::vector<SepId> out;
  if (phi.empty()) return out;
  for (int i = 0; i < sys.size(); ++i) {
    SepId id = phi[0].orientation.choice(i);
    bool all = true;
    for (const auto& t : phi) all = all && t.contains(id);
    if (all) out.push_back(id);
  }
  return out;
}

namespace {
std::vector<SepId> maximal_of(const std::vector<SepId>& ids, const SepSystem& sys) {
  std::vector<SepId> out;
  for (SepId x : ids) {
    bool dominated = false;
    for (SepId y : ids)
      if (y != x && sys.leq(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(x);
  }
  return out;
}
}  // namespace

std::vector<SepId> maximal_inessential(const Tangle& o, std::span<const Tangle> phi,
                                       const SepSystem& sys) {
  if (std::find(phi.begin(), phi.end(), o) == phi.end())
    throw ArgumentError("tangle is not a member of phi");
  return maximal_of(inessential(phi, sys), sys);
}

std::vector<SepId> maximal_elements(const Tangle& o, const SepSystem& sys) {
  return maximal_of(o.orientation.ids(), sys);
}

}  // namespace tref
