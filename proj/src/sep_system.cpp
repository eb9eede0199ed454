#include "tref/sep_system.hpp"

#include <algorithm>

#include "tref/errors.hpp"

namespace tref {

namespace {

constexpr long long kMaxSeparatorCandidates = 1LL << 22;

long long binomial_sum(int n, int r) {
  long long total = 0, c = 1;
  for (int i = 0; i <= std::min(n, r); ++i) {
    total += c;
    if (total > kMaxSeparatorCandidates) return total;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

template <typename Fn>
void for_each_subset_up_to(int n, int max_size, Fn&& fn) {
  VertexSet cur;
  auto rec = [&](auto&& self, int start, int size) -> void {
    fn(cur);
    if (size == max_size) return;
    for (int v = start; v < n; ++v) {
      cur.insert(v);
      self(self, v + 1, size + 1);
      cur.erase(v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

SepSystem::SepSystem(Graph g, int k) : graph_(std::move(g)), k_(k) {
  if (k < 1) throw ContractError("separation system needs k >= 1");
  const int n = graph_.order();
  if (binomial_sum(n, k - 1) > kMaxSeparatorCandidates)
    throw SizeError("too many separator candidates for n=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
  const VertexSet all = graph_.vertices();
  std::vector<OrientedSep> found;
  for_each_subset_up_to(n, k - 1, [&](VertexSet x) {
    auto comps = components(graph_, x);
    if (static_cast<int>(comps.size()) > kMaxComponentsPerSeparator)
      throw SizeError("separator " + to_string(OrientedSep{x, x}) + " leaves " +
                      std::to_string(comps.size()) + " components");
    const std::uint32_t c = static_cast<std::uint32_t>(comps.size());
    // Subsets containing the last component give the other orientation of a
    // subset that omits it, so only half need emitting.
    const std::uint32_t limit = c == 0 ? 1 : (1u << (c - 1));
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      VertexSet a = x;
      for (std::uint32_t i = 0; i < c; ++i)
        if (mask >> i & 1u) a |= comps[i];
      VertexSet b = x | (all - a);
      found.push_back(canonical_orientation({a, b}));
    }
  });
  std::sort(found.begin(), found.end(), CanonicalLess{});
  found.erase(std::unique(found.begin(), found.end()), found.end());
  seps_ = std::move(found);

  oriented_.reserve(2 * seps_.size());
  for (const auto& s : seps_) {
    oriented_.push_back(s);
    oriented_.push_back(s.inverse());
    orders_.push_back(s.order());
  }
  for (SepId id = 0; id < oriented_count(); ++id) {
    index_.emplace(oriented_[id], id);
    if (oriented_[id].degenerate() && !degenerate_) degenerate_ = id;
  }

  const int m = graph_.edge_count();
  edge_words_ = std::max(1, (m + 63) / 64);
  all_edges_.assign(edge_words_, 0);
  for (int e = 0; e < m; ++e) all_edges_[e / 64] |= std::uint64_t{1} << (e % 64);
  inner_edges_.assign(static_cast<size_t>(oriented_count()) * edge_words_, 0);
  for (SepId id = 0; id < oriented_count(); ++id) {
    VertexSet a = oriented_[id].a;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = graph_.edges()[e];
      if (a.contains(u) && a.contains(v))
        inner_edges_[static_cast<size_t>(id) * edge_words_ + e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
}

std::optional<SepId> SepSystem::find(const OrientedSep& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SepId SepSystem::id_of(const OrientedSep& s) const {
  auto id = find(s);
  if (!id) throw MembershipError(to_string(s) + " is not in S_" + std::to_string(k_));
  return *id;
}

bool SepSystem::covers(std::span<const SepId> ids) const {
  VertexSet vs;
  for (SepId id : ids) vs |= oriented_[id].a;
  if (vs != graph_.vertices()) return false;
  for (int w = 0; w < edge_words_; ++w) {
    std::uint64_t acc = 0;
    for (SepId id : ids) acc |= inner_edges_[static_cast<size_t>(id) * edge_words_ + w];
    if (acc != all_edges_[w]) return false;
  }
  return true;
}

bool SepSystem::covers(SepId x, SepId y) const {
  if ((oriented_[x].a | oriented_[y].a) != graph_.vertices()) return false;
  const std::uint64_t* ex = &inner_edges_[static_cast<size_t>(x) * edge_words_];
  const std::uint64_t* ey = &inner_edges_[static_cast<size_t>(y) * edge_words_];
  for (int w = 0; w < edge_words_; ++w)
    if ((ex[w] | ey[w]) != all_edges_[w]) return false;
  return true;
}

bool SepSystem::covers(SepId x, SepId y, SepId z) const {
  if ((oriented_[x].a | oriented_[y].a | oriented_[z].a) != graph_.vertices()) return false;
  const std::uint64_t* ex = &inner_edges_[static_cast<size_t>(x) * edge_words_];
  const std::uint64_t* ey = &inner_edges_[static_cast<size_t>(y) * edge_words_];
  const std::uint64_t* ez = &inner_edges_[static_cast<size_t>(z) * edge_words_];
  for (int w = 0; w < edge_words_; ++w)
    if ((ex[w] | ey[w] | ez[w]) != all_edges_[w]) return false;
  return true;
}

bool SepSystem::covers_sides(std::span<const OrientedSep> seps) const {
  return tref::covers_sides(graph_, seps);
}

bool covers_sides(const Graph& g, std::span<const OrientedSep> seps) {
  VertexSet vs;
  for (const auto& s : seps) vs |= s.a;
  if (vs != g.vertices()) return false;
  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& s : seps) inside = inside || (s.a.contains(u) && s.a.contains(v));
    if (!inside) return false;
  }
  return true;
}

SepSystem make_system(const Graph& g, int k) { return SepSystem(g, k); }

SepSystem make_universe(const Graph& g) { return SepSystem(g, g.order() + 1); }

bool is_trivial(const OrientedSep& x, const SepSystem& sys) {
  const OrientedSep xi = x.inverse();
  for (int i = 0; i < sys.size(); ++i) {
    const OrientedSep& s = sys.separation(i);
    if (s == x || s == xi) continue;
    if (less(x, s) && less(x, s.inverse())) return true;
  }
  return false;
}

SepFlags classify(const OrientedSep& x, const SepSystem& sys) {
  sys.id_of(x);
  SepFlags f;
  f.degenerate = x.degenerate();
  f.small = leq(x, x.inverse());
  f.cosmall = leq(x.inverse(), x);
  f.trivial = is_trivial(x, sys);
  f.cotrivial = is_trivial(x.inverse(), sys);
  return f;
}

OrientedSep shift_sep(const OrientedSep& x, const OrientedSep& r, const OrientedSep& s) {
  if (x == r.inverse() && x != r)
    throw DomainError(to_string(x) + " is the inverse of the shifted leaf separation");
  if (leq(r, x)) return join(x, s);
  if (leq(r, x.inverse())) return join(x.inverse(), s).inverse();
  throw DomainError(to_string(x) + " has no orientation above " + to_string(r));
}

bool emulates(const OrientedSep& s, const OrientedSep& r, const SepSystem& sys) {
  if (!leq(r, s)) return false;
  const OrientedSep ri = r.inverse();
  for (SepId t = 0; t < sys.oriented_count(); ++t) {
    const OrientedSep& ts = sys.oriented(t);
    if (ts == ri || !leq(r, ts)) continue;
    if (!sys.contains(join(s, ts))) return false;
  }
  return true;
}

bool linked_to(const OrientedSep& s, const OrientedSep& r, const SepSystem& sys) {
  if (!leq(r, s)) throw ContractError("linked_to needs r <= s");
  for (SepId x = 0; x < sys.oriented_count(); ++x) {
    const OrientedSep& xs = sys.oriented(x);
    if (leq(r, xs) && join(xs, s).order() > xs.order()) return false;
  }
  return true;
}

}  // namespace tref
