#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "tref/errors.hpp"

using namespace tref;

namespace {

std::set<oracle::SepKey> unordered(const std::vector<OrientedSep>& seps) {
  std::set<oracle::SepKey> out;
  for (const auto& s : seps) out.insert(oracle::key(canonical_orientation(s)));
  return out;
}

STree edge_tree(const OrientedSep& s) {
  STree st;
  st.add_node();
  st.add_node();
  st.add_edge(0, 1, s);
  return st;
}

const auto kStars = AvoidanceFamily::of(FamilyKind::kTangleStars);

}  // namespace

TEST_SUITE("streedec") {
  TEST_CASE("validate_treedec") {
    const Graph p3 = graphs::path(3);
    CHECK_NOTHROW(validate_treedec(p3, {{{0, 1}, {1, 2}}, {{0, 1}}}));
    CHECK_THROWS_AS(validate_treedec(p3, {{{0, 1}, {2}}, {{0, 1}}}), ValidationError);
    CHECK_THROWS_AS(validate_treedec(p3, {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}}),
                    ValidationError);
    CHECK_THROWS_AS(validate_treedec(p3, {{{0, 1}, {1, 2}}, {}}), ValidationError);
  }

  TEST_CASE("induced separations") {
    TreeDecomposition p3{{{0, 1}, {1, 2}}, {{0, 1}}};
    CHECK(induced_separations(p3) == std::vector<OrientedSep>{{{0, 1}, {1, 2}}});
    CHECK(induced_separations({{{0, 1, 2}}, {}}).empty());

    const auto bad = fixtures::apex_bad();
    validate_treedec(fixtures::apex_cliques(), bad);
    std::set<VertexSet> separators;
    for (const auto& s : induced_separations(bad)) separators.insert(s.separator());
    CHECK(separators == std::set<VertexSet>{{0, 5}, {5, 10}, {0, 10}});
    CHECK(adhesion(bad) == 2);
  }

  TEST_CASE("treedec_from_nested_set") {
    const Graph p3 = graphs::path(3);
    const OrientedSep s{{0, 1}, {1, 2}};
    auto td = treedec_from_nested_set(p3, std::vector<OrientedSep>{s});
    CHECK(std::set<VertexSet>(td.parts.begin(), td.parts.end()) ==
          std::set<VertexSet>{{0, 1}, {1, 2}});
    auto whole = treedec_from_nested_set(p3, std::vector<OrientedSep>{});
    CHECK(whole.parts == std::vector<VertexSet>{p3.vertices()});

    const Graph g = fixtures::apex_cliques();
    std::vector<OrientedSep> apex;
    for (int b = 0; b < 3; ++b) {
      VertexSet a = fixtures::blob(b);
      a.insert(fixtures::kApex);
      apex.push_back({a, g.vertices() - fixtures::blob(b)});
    }
    auto four = treedec_from_nested_set(g, apex);
    validate_treedec(g, four);
    std::set<VertexSet> parts(four.parts.begin(), four.parts.end());
    CHECK(parts.size() == 4);
    CHECK(parts.count({fixtures::kApex}));
    for (int b = 0; b < 3; ++b) CHECK(parts.count(apex[b].a));

    const OrientedSep x{{0, 1, 2}, {2, 3, 0}}, y{{1, 2, 3}, {3, 0, 1}};
    CHECK_THROWS_AS(treedec_from_nested_set(graphs::cycle(4), std::vector<OrientedSep>{x, y}),
                    NestednessError);
  }

  TEST_CASE("nested sets round trip") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 150; ++round) {
      const int n = 3 + round % 5;
      const Graph g = testgen::random_connected_graph(n, 0.45, rng);
      auto all = oracle::separations(g, n);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<OrientedSep> chosen;
      for (const auto& s : all) {
        if (s.degenerate() || chosen.size() >= 6) continue;
        bool ok = true;
        for (const auto& c : chosen) ok = ok && nested(c, s);
        if (ok) chosen.push_back(s);
      }
      auto td = treedec_from_nested_set(g, chosen);
      validate_treedec(g, td);
      auto induced = unordered(induced_separations(td));
      for (const auto& s : chosen) CHECK(induced.count(oracle::key(canonical_orientation(s))));
    }
  }

  TEST_CASE("validate_stree_over") {
    const Graph p3 = graphs::path(3);
    const OrientedSep s{{0, 1}, {1, 2}};
    const auto both = kStars.with_singletons({s, s.inverse()}, false);
    CHECK(validate_stree_over(edge_tree(s), both, p3).valid);

    // On a three-node path the middle star misses the edge 12.
    const Graph p4 = graphs::path(4);
    STree st;
    for (int i = 0; i < 3; ++i) st.add_node();
    st.add_edge(0, 1, {{0, 1}, {1, 2, 3}});
    st.add_edge(1, 2, {{0, 1, 2}, {2, 3}});
    const auto leaves = kStars.with_singletons({{{1, 2, 3}, {0, 1}}, {{0, 1, 2}, {2, 3}}}, false);
    auto report = validate_stree_over(st, leaves, p4);
    CHECK_FALSE(report.valid);
    CHECK(report.bad_nodes == std::vector<int>{1});
  }

  TEST_CASE("locate") {
    const Graph p3 = graphs::path(3);
    SepSystem sys = make_system(p3, 2);
    const OrientedSep s{{0, 1}, {1, 2}};
    std::vector<SepId> ids;
    for (int i = 0; i < sys.size(); ++i) ids.push_back(2 * i);
    const SepId sid = sys.id_of(s);
    ids[sid >> 1] = sid;
    CHECK(locate(Orientation(ids), edge_tree(s), sys) == 1);

    // K4 with a pendant path: the tangle sits in the clique's part.
    const Graph g = graphs::with_edges(graphs::complete(4), {{3, 4}, {4, 5}}, 6);
    SepSystem gs = make_system(g, 3);
    auto ts = enumerate_tangles(gs, kStars);
    REQUIRE(ts.size() == 1);
    TreeDecomposition td{{{0, 1, 2, 3}, {3, 4}, {4, 5}}, {{0, 1}, {1, 2}}};
    CHECK(locate(ts[0].orientation, td, gs) == 0);

    // Two sinks.
    const Graph p4 = graphs::path(4);
    SepSystem ps = make_system(p4, 2);
    const OrientedSep r{{0, 1}, {1, 2, 3}}, t{{0, 1, 2}, {2, 3}};
    STree chain;
    for (int i = 0; i < 3; ++i) chain.add_node();
    chain.add_edge(0, 1, r);
    chain.add_edge(1, 2, t);
    std::vector<SepId> bad;
    for (int i = 0; i < ps.size(); ++i) bad.push_back(2 * i);
    bad[ps.id_of(r) >> 1] = ps.id_of(r.inverse());
    bad[ps.id_of(t) >> 1] = ps.id_of(t);
    CHECK_THROWS_AS(locate(Orientation(bad), chain, ps), StructureError);
  }

  TEST_CASE("make_irredundant") {
    const Graph c4 = graphs::cycle(4);
    SepSystem sys = make_system(c4, 3);
    auto tree = find_stree_over(sys, kStars);
    REQUIRE(tree);
    STree clean = make_irredundant(*tree, {});
    CHECK(is_irredundant(clean));
    STree again = make_irredundant(clean, {});
    CHECK(again.node_count == clean.node_count);
    CHECK(again.alpha == clean.alpha);

    // Duplicate a leaf branch.
    const VertexSet v = c4.vertices();
    STree dup;
    for (int i = 0; i < 4; ++i) dup.add_node();
    const OrientedSep x{{0, 1}, v};
    dup.add_edge(0, 1, x);
    dup.add_edge(2, 1, x);
    dup.add_edge(3, 1, {{2, 3}, v});
    CHECK_FALSE(is_irredundant(dup));
    STree fixed = make_irredundant(dup, {});
    CHECK(is_irredundant(fixed));
    CHECK(fixed.node_count == 3);
    auto ls = fixed.leaf_separations();
    CHECK(std::count(ls.begin(), ls.end(), x) == 1);

    // alpha preserves the order along every path.
    for (int e = 0; e < static_cast<int>(clean.edges.size()); ++e)
      for (int f = 0; f < static_cast<int>(clean.edges.size()); ++f) {
        if (e == f) continue;
        auto [a, b] = clean.edges[e];
        auto [c, d] = clean.edges[f];
        const OrientedSep &x = clean.alpha[e], &y = clean.alpha[f];
        if (b == c) CHECK(leq(x, y));
        if (a == d) CHECK(leq(y, x));
        if (a == c) CHECK(leq(x.inverse(), y));
        if (b == d) CHECK(leq(x, y.inverse()));
      }
  }

  TEST_CASE("find_stree_over") {
    CHECK(find_stree_over(make_system(graphs::cycle(4), 3), kStars));
    CHECK_FALSE(find_stree_over(make_system(graphs::complete(4), 3), kStars));
    SepSystem sys = make_system(graphs::cycle(5), 3);
    CHECK_THROWS_AS(find_stree_over(sys, AvoidanceFamily::of(FamilyKind::kTangleTriples)),
                    ArgumentError);
    AvoidanceFamily nothing = AvoidanceFamily::of(FamilyKind::kCustom);
    nothing.custom = [](std::span<const OrientedSep>) { return false; };
    CHECK_THROWS_AS(find_stree_over(sys, nothing), ContractError);
  }

  TEST_CASE("duality on small graphs") {
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : testgen::connected_graphs(n))
        for (int k = 1; k <= 4; ++k) {
          SepSystem sys = make_system(g, k);
          const bool tangle = !enumerate_tangles(sys, kStars).empty();
          auto tree = find_stree_over(sys, kStars);
          CHECK(tangle != tree.has_value());
          if (tree) CHECK(validate_stree_over(*tree, kStars, g).valid);
          if (tree) {
            auto td = treedec_from_stree(g, *tree);
            validate_treedec(g, td);
            CHECK(adhesion(td) < k);
          }
        }
  }

  TEST_CASE("width_over_family") {
    for (int n = 3; n <= 7; ++n) CHECK(width_over_family(graphs::cycle(n)) == 2);
    CHECK(width_over_family(graphs::complete(4)) == 3);
    CHECK(width_over_family(graphs::complete(5)) == 4);
    const auto bad = fixtures::apex_bad();
    Torso middle = torso(fixtures::apex_cliques(), bad.parts[0], adhesion_sets(bad, 0));
    CHECK(middle.graph == graphs::complete(4));
    CHECK(width_over_family(middle.graph) == 3);
    CHECK(oracle::branch_width(middle.graph) == 3);
  }

  TEST_CASE("width agrees with classical branch-width from 2 up") {
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : testgen::connected_graphs(n))
        CHECK(width_over_family(g) == std::max(2, oracle::branch_width(g)));
  }

  TEST_CASE("branch_width of a decomposition") {
    const Graph c5 = graphs::cycle(5);
    auto tree = find_stree_over(make_system(c5, 3), kStars);
    REQUIRE(tree);
    auto td = treedec_from_stree(c5, *tree);
    Width w = branch_width(c5, td);
    CHECK_FALSE(w.infinite);
    CHECK(w.value == 2);
    CHECK(to_string(Width::inf()) == "inf");
  }

  TEST_CASE("is_refinement") {
    auto bad = fixtures::apex_bad();
    CHECK(is_refinement(bad, bad));
    TreeDecomposition single{{fixtures::apex_cliques().vertices()}, {}};
    CHECK(is_refinement(bad, single));
    CHECK_FALSE(is_refinement(single, bad));
  }
}
