#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staruniv/isomorphism.hpp"
#include "testutil.hpp"

using namespace staruniv;

TEST_CASE("canonical keys identify isomorphic graphs") {
    Graph c5a = build_cycle(5);
    Graph c5b(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}); // relabeled C5
    CHECK(canonical_key(c5a) == canonical_key(c5b));
    CHECK(canonical_key(build_path(4)) != canonical_key(build_cycle(5)));
}

TEST_CASE("colors distinguish") {
    Graph p1 = build_path(1);
    CHECK(canonical_key(ColoredGraph(p1, {0, 1})) == canonical_key(ColoredGraph(p1, {1, 0})));
    CHECK(canonical_key(ColoredGraph(p1, {0, 1})) != canonical_key(ColoredGraph(p1, {0, 0})));
}

TEST_CASE("find_isomorphism produces a correct map") {
    testutil::Rng rng(42);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + rng.below(9);
        Graph g = testutil::random_graph(rng, n, 0.4);
        // random relabeling
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<Edge> edges;
        for (const auto& [u, v] : g.edges())
            edges.push_back({perm[u], perm[v]});
        Graph h(n, std::move(edges));
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        for (const auto& [u, v] : g.edges())
            CHECK(h.has_edge((*iso)[u], (*iso)[v]));
        CHECK(g.edge_count() == h.edge_count());
    }
}

TEST_CASE("non-isomorphic pairs are rejected") {
    CHECK_FALSE(find_isomorphism(build_path(3), build_path(2)).has_value());
    // same degree sequence, different graphs: C6 vs two triangles
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(find_isomorphism(build_cycle(6), two_triangles).has_value());
}

TEST_CASE("symmetric graphs canonicalize quickly") {
    // stars and cliques have factorial automorphism groups; twin pruning
    // keeps them tractable
    Graph star = build_complete_bipartite(1, 40);
    CHECK(canonical_key(star) == canonical_key(star));
    Graph k9 = build_clique(9);
    CHECK(canonical_key(k9).size() > 0);
}

TEST_CASE("enumerate_graphs counts") {
    CHECK(enumerate_graphs(1, false).size() == 1);
    CHECK(enumerate_graphs(2, false).size() == 2);
    CHECK(enumerate_graphs(3, false).size() == 4);
    CHECK(enumerate_graphs(4, false).size() == 11);
    CHECK(enumerate_graphs(5, false).size() == 34);
    CHECK(enumerate_graphs(4, true).size() == 6);
    CHECK(enumerate_graphs(5, true).size() == 21);
    CHECK(enumerate_graphs(6, true).size() == 112);
}
