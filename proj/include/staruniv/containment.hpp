#pragma once

#include <optional>
#include <vector>

#include "staruniv/graph.hpp"

namespace staruniv {

// Subdivided star T(p_1,...,p_k): k paths of the given lengths glued at a
// common centre. Leg lengths kept sorted ascending.
class StarPattern {
public:
    StarPattern() = default; // k = 0: the single-vertex star
    explicit StarPattern(std::vector<int> leg_lengths);
    static StarPattern simple(int k); // S_k: all legs length 1

    const std::vector<int>& legs() const { return legs_; }
    int leg_count() const { return static_cast<int>(legs_.size()); }
    int max_leg() const { return legs_.empty() ? 0 : legs_.back(); }
    int leg(int i) const { return legs_.at(i); }
    int vertex_count() const; // 1 + sum of leg lengths

    // Realization: centre 0, legs laid out consecutively in sorted order.
    Graph realize() const;

    bool operator==(const StarPattern&) const = default;

private:
    std::vector<int> legs_;
};

// Witness of T <= host: a centre plus legs of exactly the required lengths,
// pairwise sharing only the centre. legs[i] starts at the centre and has
// leg_lengths[i] further vertices.
struct StarWitness {
    int centre = -1;
    std::vector<std::vector<int>> legs;
};

// Injective adjacency-preserving map; vertex_map[p] = host vertex.
struct Embedding {
    std::vector<int> vertex_map;
};

// Vertex map plus one host path per pattern edge (indexed like
// pattern.edges()). Paths run from map[u] to map[v]; inner vertices avoid
// the image and each other.
struct TopologicalEmbedding {
    std::vector<int> vertex_map;
    std::vector<std::vector<int>> edge_paths;
};

// Disjoint connected branch sets, one per pattern vertex.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
};

// Specialized search for subdivided stars (pattern <= host as a subgraph,
// equivalent to topological containment for stars). Deterministic: smallest
// centre first, legs assigned longest-requirement-first.
std::optional<StarWitness> find_star(const StarPattern& pattern, const Graph& host);

// pattern <= host (subgraph relation), colored variant preserves colors.
std::optional<Embedding> find_subgraph(const Graph& pattern, const Graph& host);
std::optional<Embedding> find_subgraph(const ColoredGraph& pattern, const ColoredGraph& host);

// pattern (topological minor) host. The colored variant constrains branch
// vertices only; subdividing vertices are color-free.
std::optional<TopologicalEmbedding> find_topological(const Graph& pattern, const Graph& host);
std::optional<TopologicalEmbedding> find_topological(const ColoredGraph& pattern,
                                                     const ColoredGraph& host);

// pattern (minor) host via branch-set growth. Resource-guarded: intended for
// |V(pattern)| <= 6 and |V(host)| <= 16.
std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host);

} // namespace staruniv
