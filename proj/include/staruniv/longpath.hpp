#pragma once

#include <optional>
#include <vector>

#include "staruniv/graph.hpp"

namespace staruniv {

// Longest-path queries. Exact on forests (diameter) and on small graphs
// (subset DP); otherwise exhaustive DFS with a node budget that throws
// resource_error when inconclusive. Lengths count edges.

// Witness search: a path of length >= target, or nullopt when the search
// proved exhaustively that none exists.
std::optional<std::vector<int>> find_path_at_least(const Graph& g, int target);

// Exact longest path length.
int longest_path_length(const Graph& g);

// True iff no path of length `target` exists (exact).
bool path_free(const Graph& g, int target);

} // namespace staruniv
