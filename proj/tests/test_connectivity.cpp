#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "staruniv/connectivity.hpp"
#include "staruniv/longpath.hpp"
#include "staruniv/validate.hpp"
#include "testutil.hpp"

using namespace staruniv;

TEST_CASE("block tree shapes") {
    // two triangles sharing one vertex
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    BlockTree bt = block_tree(g);
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cutvertices == std::vector<int>({2}));

    BlockTree p3 = block_tree(build_path(3));
    CHECK(p3.blocks.size() == 3);
    CHECK(p3.cutvertices == std::vector<int>({1, 2}));

    BlockTree c5 = block_tree(build_cycle(5));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.cutvertices.empty());
}

TEST_CASE("every edge lies in exactly one block") {
    testutil::Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        Graph g = testutil::random_graph(rng, 1 + rng.below(12), 0.3);
        BlockTree bt = block_tree(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            int b = bt.edge_block[e];
            REQUIRE(b >= 0);
            auto [u, v] = g.edges()[e];
            CHECK(std::binary_search(bt.blocks[b].begin(), bt.blocks[b].end(), u));
            CHECK(std::binary_search(bt.blocks[b].begin(), bt.blocks[b].end(), v));
            // no other block contains both endpoints
            for (int b2 = 0; b2 < static_cast<int>(bt.blocks.size()); ++b2) {
                if (b2 == b)
                    continue;
                bool both =
                    std::binary_search(bt.blocks[b2].begin(), bt.blocks[b2].end(), u) &&
                    std::binary_search(bt.blocks[b2].begin(), bt.blocks[b2].end(), v);
                CHECK_FALSE(both);
            }
        }
        // isolated vertices form singleton blocks: vertex cover check
        std::set<int> covered;
        for (const auto& b : bt.blocks)
            covered.insert(b.begin(), b.end());
        CHECK(static_cast<int>(covered.size()) == g.vertex_count());
    }
}

TEST_CASE("independent paths: K4 and fixed families") {
    Graph k4 = build_clique(4);
    // frozen from the exhaustive family oracle
    CHECK(oracles::max_disjoint_paths(k4, 0, 3, 10) == 3);
    PathFamily fam = independent_paths(k4, 0, 3, 10);
    CHECK(fam.paths.size() == 3);
    CHECK(check_path_family(k4, fam).empty());

    Graph p5 = build_path(5);
    CHECK(independent_paths(p5, 0, 5, 10).paths.size() == 1);

    // poles of the N=5, p=2 pole gadget: exactly 5 disjoint paths
    std::vector<Edge> h1;
    for (int i = 0; i < 5; ++i) {
        h1.push_back({0, 2 + i});
        h1.push_back({1, 2 + i});
    }
    Graph gadget(7, std::move(h1));
    PathFamily five = independent_paths(gadget, 0, 1, 10);
    CHECK(five.paths.size() == 5);
    CHECK(check_path_family(gadget, five).empty());

    // cap respected
    CHECK(independent_paths(gadget, 0, 1, 2).paths.size() == 2);
    CHECK_THROWS_AS(independent_paths(k4, 1, 1, 5), precondition_error);
}

TEST_CASE("menger duality on random graphs") {
    testutil::Rng rng(77);
    int compared = 0;
    for (int it = 0; it < 60; ++it) {
        Graph g = testutil::random_graph(rng, 2 + rng.below(9), 0.35);
        for (int u = 0; u < g.vertex_count() && compared < 400; ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                if (g.has_edge(u, v))
                    continue;
                int flow = static_cast<int>(
                    independent_paths(g, u, v, g.vertex_count()).paths.size());
                CHECK(flow == oracles::min_vertex_separator(g, u, v));
                ++compared;
            }
    }
    CHECK(compared > 100);
}

TEST_CASE("long cycle basics") {
    // K5 has a path of length 4 = 2^2; any triangle suffices for n = 2
    // (K4's longest path has length 3, so it misses the hypothesis)
    auto tri = long_cycle(build_clique(5), 2);
    REQUIRE(tri.has_value());
    CHECK(check_cycle(build_clique(5), *tri, 2).empty());
    CHECK_THROWS_AS(long_cycle(build_clique(4), 2), precondition_error);

    auto ten = long_cycle(build_cycle(10), 3);
    REQUIRE(ten.has_value());
    CHECK(ten->size() == 10);
    CHECK(check_cycle(build_cycle(10), *ten, 3).empty());

    // 4x4 grid, n = 3: oracle says the longest cycle is long enough
    Graph grid = testutil::grid(4, 4);
    CHECK(oracles::longest_cycle_brute(grid) >= 3);
    auto cyc = long_cycle(grid, 3);
    REQUIRE(cyc.has_value());
    CHECK(check_cycle(grid, *cyc, 3).empty());
}

TEST_CASE("long cycle precondition reports") {
    CHECK_THROWS_WITH_AS(long_cycle(build_path(9), 3), "not 2-connected", precondition_error);
    try {
        long_cycle(build_cycle(5), 3); // no path of length 9
        FAIL("expected precondition_error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("no path") != std::string::npos);
    }
}

TEST_CASE("long cycle property on random biconnected hosts") {
    testutil::Rng rng(13);
    int runs = 0;
    for (int it = 0; it < 80 && runs < 40; ++it) {
        int n = 4 + rng.below(11);
        Graph g = testutil::random_biconnected_graph(rng, n, 0.25);
        for (int target = 2; target * target <= n - 1; ++target) {
            if (!find_path_at_least(g, target * target))
                continue;
            auto cyc = long_cycle(g, target);
            REQUIRE(cyc.has_value());
            CHECK(check_cycle(g, *cyc, target).empty());
            ++runs;
        }
    }
    CHECK(runs > 10);
}

TEST_CASE("longest path machinery") {
    CHECK(longest_path_length(build_path(7)) == 7);
    CHECK(longest_path_length(build_cycle(6)) == 5);
    Graph grid = testutil::grid(3, 3);
    CHECK(longest_path_length(grid) == oracles::longest_path_brute(grid));
    CHECK(path_free(build_path(4), 5));
    CHECK_FALSE(path_free(build_path(4), 4));
    auto w = find_path_at_least(testutil::grid(3, 4), 8);
    REQUIRE(w.has_value());
    CHECK(w->size() == 9);
    CHECK(is_valid_path(testutil::grid(3, 4), *w));
}
