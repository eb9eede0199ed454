#include "tref/distinguish.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tref/errors.hpp"

namespace tref {

namespace {

struct Pair {
  int i, j, kappa;
  std::vector<int> distinguishers;
};

bool settled(const Pair& p, std::span<const Tangle> phi, const std::vector<int>& chosen,
             const SepSystem& sys) {
  for (int s : chosen)
    if (sys.order(2 * s) == p.kappa &&
        phi[p.i].orientation.choice(s) != phi[p.j].orientation.choice(s))
      return true;
  return false;
}

int score(const OrientedSep& s) { return std::min((s.a - s.b).size(), (s.b - s.a).size()); }

}  // namespace

std::vector<OrientedSep> build_distinguishing_set(const SepSystem& sys,
                                                  std::span<const Tangle> phi) {
  for (size_t i = 0; i < phi.size(); ++i)
    for (size_t j = i + 1; j < phi.size(); ++j)
      if (phi[i] == phi[j]) throw ArgumentError("tangle listed twice");

  std::map<int, std::vector<Pair>> levels;
  for (int i = 0; i < static_cast<int>(phi.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(phi.size()); ++j) {
      Kappa kp = kappa(phi[i], phi[j], sys);
      levels[kp.order].push_back({i, j, kp.order, std::move(kp.distinguishers)});
    }

  std::vector<int> chosen;
  auto nested_with_chosen = [&](int s) {
    for (int c : chosen)
      if (!nested(sys.separation(c), sys.separation(s))) return false;
    return true;
  };
  for (auto& [order, pairs] : levels) {
    for (;;) {
      std::set<int> candidates;
      bool open = false;
      for (const auto& p : pairs) {
        if (settled(p, phi, chosen, sys)) continue;
        open = true;
        for (int s : p.distinguishers)
          if (nested_with_chosen(s)) candidates.insert(s);
      }
      if (!open) break;
      if (candidates.empty())
        throw InvariantViolation("no nested efficient distinguisher left at order " +
                                 std::to_string(order));
      int best = -1;
      for (int s : candidates) best = std::max(best, score(sys.separation(s)));
      for (int s : candidates)
        if (score(sys.separation(s)) == best && nested_with_chosen(s)) chosen.push_back(s);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<OrientedSep> out;
  for (int s : chosen) out.push_back(sys.separation(s));
  return out;
}

bool distinguishes_efficiently(std::span<const OrientedSep> seps, std::span<const Tangle> phi,
                               const SepSystem& sys) {
  std::vector<int> ids;
  for (const auto& s : seps) ids.push_back(SepSystem::separation_of(sys.id_of(s)));
  for (int i = 0; i < static_cast<int>(phi.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(phi.size()); ++j) {
      Pair p{i, j, kappa(phi[i], phi[j], sys).order, {}};
      if (!settled(p, phi, ids, sys)) return false;
    }
  return true;
}

bool pairwise_nested(std::span<const OrientedSep> seps) {
  for (size_t i = 0; i < seps.size(); ++i)
    for (size_t j = i + 1; j < seps.size(); ++j)
      if (!nested(seps[i], seps[j])) return false;
  return true;
}

bool is_canonical(std::span<const OrientedSep> seps, const Graph& g, int max_vertices) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> base;
  for (const auto& s : seps) {
    OrientedSep c = canonical_orientation(s);
    base.emplace(c.a.bits(), c.b.bits());
  }
  for (const auto& p : automorphisms(g, max_vertices))
    for (const auto& s : seps) {
      OrientedSep c = canonical_orientation({apply(p, s.a), apply(p, s.b)});
      if (!base.count({c.a.bits(), c.b.bits()})) return false;
    }
  return true;
}

}  // namespace tref
