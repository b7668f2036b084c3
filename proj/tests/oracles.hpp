#pragma once

#include <optional>
#include <vector>

#include "staruniv/graph.hpp"

// Independent oracles for derived expectations. Deliberately simple code,
// separate from the library's search implementations.
namespace oracles {

using staruniv::Graph;

// Minimum u-v vertex separator size (u, v non-adjacent) by subset
// enumeration over V - {u,v}.
int min_vertex_separator(const Graph& g, int u, int v);

// Maximum number of internally disjoint u-v paths by exhaustive search over
// path families.
int max_disjoint_paths(const Graph& g, int u, int v, int cap);

// Exact longest path length by plain recursive DFS (no pruning).
int longest_path_brute(const Graph& g);

// Exact longest cycle length by plain recursive DFS, 0 if acyclic.
int longest_cycle_brute(const Graph& g);

// Topological containment by independent recursive search: enumerate branch
// injections, then route edges greedily over all orders with backtracking.
bool topological_contains(const Graph& pattern, const Graph& host);

// Minor containment via partition growth, coded independently.
bool minor_contains(const Graph& pattern, const Graph& host);

} // namespace oracles
