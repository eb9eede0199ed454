#include "tref/check.hpp"

#include <random>

#include "tref/distinguish.hpp"
#include "tref/errors.hpp"
#include "tref/refine.hpp"

namespace tref {

namespace {

constexpr long long kExhaustivePairs = 1'000'000;
constexpr int kSamples = 100'000;

// Calls fn(x, y, z) on all triples when few enough, else on kSamples random ones.
template <typename Fn>
void for_triples(const SepSystem& sys, std::mt19937_64& rng, Fn&& fn) {
  const long long m = sys.oriented_count();
  if (m * m * m <= kExhaustivePairs) {
    for (SepId x = 0; x < m; ++x)
      for (SepId y = 0; y < m; ++y)
        for (SepId z = 0; z < m; ++z) fn(sys.oriented(x), sys.oriented(y), sys.oriented(z));
    return;
  }
  std::uniform_int_distribution<SepId> pick(0, static_cast<SepId>(m - 1));
  for (int i = 0; i < kSamples; ++i)
    fn(sys.oriented(pick(rng)), sys.oriented(pick(rng)), sys.oriented(pick(rng)));
}

struct Suite {
  std::vector<CheckResult> results;

  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    CheckResult r{name, CheckStatus::kPass, ""};
    try {
      r.detail = fn();
      if (r.detail.rfind("skip", 0) == 0) r.status = CheckStatus::kSkip;
      else if (!r.detail.empty() && r.detail.rfind("ok", 0) != 0) r.status = CheckStatus::kFail;
    } catch (const Error& e) {
      r.status = CheckStatus::kFail;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_checks(const Graph& g, int k, std::uint64_t seed,
                                    long long max_nodes) {
  Suite suite;
  std::mt19937_64 rng(seed);
  const SepSystem sys(g, k);
  const auto stars = AvoidanceFamily::of(FamilyKind::kTangleStars);

  suite.run("system", [&]() -> std::string {
    for (int i = 0; i < sys.size(); ++i) {
      const auto& s = sys.separation(i);
      if (!is_separation_of(g, s) || s.order() >= k) return to_string(s) + " does not belong";
      if (sys.id_of(s.inverse()) != 2 * i + 1) return to_string(s) + " lacks its inverse";
    }
    return "ok: " + std::to_string(sys.size()) + " separations";
  });

  std::vector<Tangle> tangles;
  suite.run("duality", [&]() -> std::string {
    tangles = enumerate_tangles(sys, stars, max_nodes);
    auto tree = find_stree_over(sys, stars, max_nodes);
    if (tangles.empty() == !tree) return "tangle and tree both present or both absent";
    if (tree && !validate_stree_over(*tree, stars, g).valid) return "tree does not validate";
    return tree ? "ok: tree" : "ok: " + std::to_string(tangles.size()) + " tangles";
  });

  suite.run("triples-vs-stars", [&]() -> std::string {
    auto triples = enumerate_tangles(sys, AvoidanceFamily::of(FamilyKind::kTangleTriples), max_nodes);
    return triples == tangles ? "ok" : "T_k and T_k* tangles differ";
  });

  suite.run("tangles-are-profiles", [&]() -> std::string {
    const auto profiles = AvoidanceFamily::of(FamilyKind::kProfileTriples);
    for (const auto& t : tangles) {
      auto c = is_consistent(t.orientation, sys);
      if (!c.consistent || !c.regular) return "tangle not regular";
      if (!avoids(t.orientation, profiles, sys)) return "tangle is not a profile";
    }
    return "ok";
  });

  suite.run("lattice", [&]() -> std::string {
    std::string bad;
    for_triples(sys, rng, [&](const OrientedSep& x, const OrientedSep& y, const OrientedSep& z) {
      if (!bad.empty()) return;
      if (join(x, y).order() + meet(x, y).order() != x.order() + y.order())
        bad = "submodular equality fails";
      else if (join(x, y).inverse() != meet(x.inverse(), y.inverse()))
        bad = "De Morgan fails";
      else if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
        bad = "distributivity fails";
      else if (leq(x, y) && !leq(y.inverse(), x.inverse()))
        bad = "involution not antitone";
      if (!bad.empty()) bad += " at " + to_string(x) + ", " + to_string(y) + ", " + to_string(z);
    });
    return bad.empty() ? "ok" : bad;
  });

  suite.run("distinguishing-set", [&]() -> std::string {
    auto n = build_distinguishing_set(sys, tangles);
    if (!pairwise_nested(n)) return "not nested";
    if (!distinguishes_efficiently(n, tangles, sys)) return "not efficient";
    if (g.order() > kMaxCanonicalCheck) return "ok (canonicity skipped)";
    return is_canonical(n, g, kMaxCanonicalCheck) ? "ok" : "not canonical";
  });

  if (k < 3) {
    suite.run("refine", [] { return std::string("skipped: needs k >= 3"); });
    return suite.results;
  }
  suite.run("refine", [&]() -> std::string {
    auto d = refine_all(g, k, FamilyKind::kTangleStars, max_nodes);
    auto e = refine_essential(g, k, d, max_nodes);
    return "ok: " + std::to_string(d.td.parts.size()) + " parts, " +
           std::to_string(e.td.parts.size()) + " after shrinking";
  });
  return suite.results;
}

}  // namespace tref
