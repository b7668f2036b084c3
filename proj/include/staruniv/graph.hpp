#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "staruniv/error.hpp"

namespace staruniv {

using Edge = std::pair<int, int>; // normalized: first < second

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; edge list kept sorted lexicographically with u < v,
// adjacency lists sorted ascending.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    // Index of edge {u,v} in edges(), -1 if absent.
    int edge_index(int u, int v) const;

    std::vector<std::vector<int>> components() const; // each sorted; sorted by first vertex
    bool is_connected() const;                        // vacuously true for n <= 1

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Graph together with a coloring into {0,1} (alpha = 2) or the non-negative
// integers (alpha = omega). alpha is derived: a coloring with values <= 1 is
// usable wherever a 2-coloring is required.
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(Graph graph, std::vector<int> colors);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& colors() const { return colors_; }
    int color(int v) const;
    bool two_colored() const; // all colors in {0,1}

    bool operator==(const ColoredGraph& other) const {
        return graph_ == other.graph_ && colors_ == other.colors_;
    }

private:
    Graph graph_;
    std::vector<int> colors_;
};

// Named constructions. Path/cycle arguments count edges (the paper's P_n, C_n).
Graph build_path(int n);
Graph build_cycle(int n); // n >= 3
Graph build_clique(int n);
Graph build_complete_bipartite(int n, int m);

// Replaces edge {u,v} by a path with `times` new inner vertices, ids appended
// after the existing ones in order. times = 0 is the identity.
Graph subdivide_edge(const Graph& g, int u, int v, int times);

// The star S_G(v): v plus its neighbors and exactly the edges between them.
// Relabeled with the centre at 0 and neighbors 1..deg(v) in ascending order.
Graph star_at(const Graph& g, int v);

// Path validity: non-empty, distinct vertices, consecutive pairs adjacent.
bool is_valid_path(const Graph& g, const std::vector<int>& path);

// X-path test: both endpoints in X, no inner vertex in X. Rejects trivial
// (single-vertex) paths.
bool is_x_path(const Graph& g, const std::vector<int>& path, const std::vector<int>& x);

// Induced subgraph on the given vertex set (sorted ascending internally);
// new vertex i corresponds to the i-th smallest listed vertex.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace staruniv
