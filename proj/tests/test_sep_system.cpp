#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "tref/errors.hpp"

using namespace tref;

namespace {

std::set<oracle::SepKey> oriented_keys(const SepSystem& sys) {
  std::set<oracle::SepKey> out;
  for (SepId i = 0; i < sys.oriented_count(); ++i) out.insert(oracle::key(sys.oriented(i)));
  return out;
}

}  // namespace

TEST_SUITE("sepsys") {
  TEST_CASE("make_system on P3 and K3") {
    const Graph p3 = graphs::path(3);
    const VertexSet v = p3.vertices();
    SepSystem s = make_system(p3, 2);
    CHECK(s.size() == 5);
    for (const OrientedSep& x : {OrientedSep{{}, v}, OrientedSep{{0}, v}, OrientedSep{{1}, v},
                                 OrientedSep{{2}, v}, OrientedSep{{0, 1}, {1, 2}}})
      CHECK(s.contains(x));

    const Graph k3 = graphs::complete(3);
    SepSystem t = make_system(k3, 3);
    CHECK(t.contains({{}, k3.vertices()}));
    for (Vertex a = 0; a < 3; ++a) {
      CHECK(t.contains({{a}, k3.vertices()}));
      for (Vertex b = a + 1; b < 3; ++b) CHECK(t.contains({{a, b}, k3.vertices()}));
    }
    for (int i = 0; i < t.size(); ++i) {
      const auto& x = t.separation(i);
      CHECK(((x.a - x.b).empty() || (x.b - x.a).empty()));
    }
  }

  TEST_CASE("make_system with k = 1 holds the order-0 separations") {
    const Graph g = graphs::disjoint_union(graphs::path(2), graphs::complete(3));
    SepSystem s = make_system(g, 1);
    CHECK(s.size() == 2);  // (empty, V) and one split of the two components
    for (int i = 0; i < s.size(); ++i) CHECK(s.separation(i).order() == 0);
  }

  TEST_CASE("make_system agrees with the naive enumeration") {
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : testgen::all_graphs(n))
        for (int k = 1; k <= n + 1; ++k)
          CHECK(oriented_keys(make_system(g, k)) == oracle::separation_keys(g, k));
  }

  TEST_CASE("degenerate separation appears only when n < k") {
    const Graph k3 = graphs::complete(3);
    CHECK_FALSE(make_system(k3, 3).degenerate_id());
    auto d = make_system(k3, 4).degenerate_id();
    REQUIRE(d);
    CHECK(make_system(k3, 4).oriented(*d).degenerate());
  }

  TEST_CASE("classify") {
    const Graph p3 = graphs::path(3);
    SepSystem s = make_system(p3, 2);
    // ({0}, V) lies below ({0,1},{1,2}) but not below its inverse, so only
    // separations inside the separator {1} are trivial.
    auto f = classify({{0}, p3.vertices()}, s);
    CHECK(f.small);
    CHECK_FALSE(f.trivial);
    auto h = classify({{1}, p3.vertices()}, s);
    CHECK(h.small);
    CHECK(h.trivial);
    CHECK(classify({{}, p3.vertices()}, s).trivial);
    auto g = classify({{0, 1}, {1, 2}}, s);
    CHECK_FALSE(g.small);
    CHECK_FALSE(g.trivial);
    SepSystem u = make_universe(p3);
    CHECK(classify({p3.vertices(), p3.vertices()}, u).degenerate);
    CHECK_THROWS_AS(classify({{0, 2}, {0, 1, 2}}, s), MembershipError);
  }

  TEST_CASE("classify properties") {
    for (const Graph& g : testgen::all_graphs(4)) {
      SepSystem s = make_universe(g);
      for (SepId id = 0; id < s.oriented_count(); ++id) {
        const auto& x = s.oriented(id);
        auto f = classify(x, s);
        if (f.trivial) CHECK(f.small);
        if (!f.degenerate) CHECK_FALSE((f.trivial && f.cotrivial));
        // In a graph, trivial means A lies inside the separator of a witness.
        bool witnessed = false;
        for (int i = 0; i < s.size(); ++i) {
          const auto& w = s.separation(i);
          if (w == x || w == x.inverse()) continue;
          witnessed = witnessed || (x.a.subset_of(w.a & w.b) && x.b == g.vertices());
        }
        CHECK(f.trivial == witnessed);
      }
    }
  }

  TEST_CASE("shift_sep") {
    const VertexSet v{0, 1, 2, 3};
    const OrientedSep r{{2}, v};
    const OrientedSep s{{1, 2}, v};
    CHECK(shift_sep(s, r, s) == s);
    CHECK(shift_sep(r, r, s) == s);
    const OrientedSep x{{1, 2, 3}, {3, 0, 1}};
    CHECK(shift_sep(x, r, s) == x);
    CHECK(shift_sep(x.inverse(), r, s) == x.inverse());
    CHECK_THROWS_AS(shift_sep(r.inverse(), r, s), DomainError);
    CHECK_THROWS_AS(shift_sep(OrientedSep{{0}, {0, 1, 3}}, r, s), DomainError);
  }

  TEST_CASE("emulates and linked_to") {
    const Graph g = graphs::cycle(5);
    SepSystem s = make_system(g, 3);
    for (SepId r = 0; r < s.oriented_count(); ++r) {
      const auto& rs = s.oriented(r);
      CHECK(linked_to(rs, rs, s));
      bool closed = true;
      for (SepId t = 0; t < s.oriented_count(); ++t)
        if (leq(rs, s.oriented(t)) && s.oriented(t) != rs.inverse())
          closed = closed && s.contains(join(s.oriented(t), rs));
      CHECK(emulates(rs, rs, s) == closed);
    }
    // linked implies emulates
    for (SepId r = 0; r < s.oriented_count(); ++r)
      for (SepId t = 0; t < s.oriented_count(); ++t) {
        const auto& rs = s.oriented(r);
        const auto& ts = s.oriented(t);
        if (!leq(rs, ts)) continue;
        if (linked_to(ts, rs, s)) CHECK(emulates(ts, rs, s));
      }
    CHECK_THROWS_AS(linked_to(s.oriented(0), s.oriented(0).inverse(), s), ContractError);
  }

  TEST_CASE("emulation fails when a join leaves S_k") {
    // On C6 with k = 3, s has order 2 and its join with some t >= r has order 3.
    const Graph g = graphs::cycle(6);
    SepSystem sys = make_system(g, 3);
    int found = 0;
    for (SepId r = 0; r < sys.oriented_count(); ++r)
      for (SepId s = 0; s < sys.oriented_count(); ++s) {
        const auto& rs = sys.oriented(r);
        const auto& ss = sys.oriented(s);
        if (!leq(rs, ss) || ss.order() != 2) continue;
        bool escapes = false;
        for (SepId t = 0; t < sys.oriented_count(); ++t)
          if (leq(rs, sys.oriented(t)) && sys.oriented(t) != rs.inverse() &&
              join(ss, sys.oriented(t)).order() >= 3)
            escapes = true;
        if (escapes) {
          CHECK_FALSE(emulates(ss, rs, sys));
          ++found;
        }
      }
    CHECK(found > 0);
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(make_system(Graph(40, {}), 12), SizeError);
    CHECK_THROWS_AS(make_system(Graph(25, {}), 2), SizeError);
  }
}
