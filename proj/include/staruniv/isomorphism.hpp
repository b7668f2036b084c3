#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staruniv/graph.hpp"

namespace staruniv {

// Canonical labeling of a colored graph via color refinement plus
// individualization backtracking. Intended for small graphs (tens of
// vertices). canonical_key encodes (n, colors, adjacency) under the
// canonical order; two colored graphs are isomorphic iff keys are equal.
struct CanonicalForm {
    std::string key;
    std::vector<int> to_canon; // original vertex -> canonical position
};

CanonicalForm canonical_form(const ColoredGraph& g);
CanonicalForm canonical_form(const Graph& g); // all colors 0

std::string canonical_key(const ColoredGraph& g);
std::string canonical_key(const Graph& g);

// Color-preserving isomorphism a -> b, if any.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b);
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// All graphs on exactly n vertices up to isomorphism, by augmentation with
// canonical dedup. connected_only keeps connected ones.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

} // namespace staruniv
