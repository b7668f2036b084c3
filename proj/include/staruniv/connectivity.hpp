#pragma once

#include <optional>
#include <vector>

#include "staruniv/graph.hpp"

namespace staruniv {

// Block-cut structure: every host edge lies in exactly one block, isolated
// vertices form single-vertex blocks, and the incidence graph on cutvertices
// and blocks is a forest (a tree per component).
struct BlockTree {
    std::vector<int> cutvertices;               // sorted
    std::vector<std::vector<int>> blocks;       // vertex sets, sorted; blocks in lex order
    std::vector<std::pair<int, int>> tree_edges; // (cutvertex, block index)
    std::vector<int> edge_block;                 // per host edge index: its block

    bool is_cutvertex(int v) const;
    // Indices of blocks containing v.
    std::vector<int> blocks_of(int v) const;
};

BlockTree block_tree(const Graph& g);

// Internally disjoint u-v paths sharing exactly the endpoints.
struct PathFamily {
    int u = -1, v = -1;
    std::vector<std::vector<int>> paths;
};

std::vector<std::string> check_path_family(const Graph& host, const PathFamily& fam);

// Maximum family of internally disjoint u-v paths, capped at `limit`.
// Unit-capacity flow with vertex splitting; an u-v edge contributes the
// direct path. Deterministic path extraction.
PathFamily independent_paths(const Graph& g, int u, int v, int limit);

// Finite shadow of Lemma "2-connected with a path of length n^2 has a cycle
// of length >= n". Verifies both preconditions (throws precondition_error
// naming the failing one), then searches for such a cycle directly.
std::optional<std::vector<int>> long_cycle(const Graph& g, int n);

bool is_biconnected(const Graph& g); // connected, >= 3 vertices, no cutvertex

} // namespace staruniv
