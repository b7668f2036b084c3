#pragma once

#include <map>
#include <optional>

#include "staruniv/containment.hpp"
#include "staruniv/graph.hpp"

namespace staruniv {

// G with every edge replaced by N independent length-2 paths. Base vertices
// keep their ids; the i-th inner vertex of base edge e (index into
// base.edges()) is subdivider(e, i).
struct BlownUpGraph {
    Graph base;
    int copies = 0;
    Graph graph;

    int subdivider(int edge_index, int i) const;
};

BlownUpGraph blowup(const Graph& g, int copies);

// Same vertex set; edge vw present iff v and w are joined by at least t
// internally disjoint paths.
Graph derive_gamma_star(const Graph& g, int t);

// Repeatedly replaces degree-2 vertices by an edge between their neighbors.
// Components that are bare cycles, and suppressions that would create a
// parallel edge, are structural errors naming the offending vertices.
Graph suppress_degree_two(const Graph& g);

struct SuppressionTrace {
    Graph graph;
    std::vector<int> kept_vertices;             // new id -> old id
    std::vector<std::vector<int>> edge_chains;  // per graph.edges(): suppressed old ids, in order
};

SuppressionTrace suppress_degree_two_traced(const Graph& g);

// Minor model pruned as in the corollary: tree branch sets, exactly one
// carrier edge between adjacent branch sets, none otherwise.
struct PrunedModel {
    MinorModel model;
    std::vector<Edge> carrier_edges; // host edges: branch-set trees + one edge per pattern edge
};

std::optional<PrunedModel> minimal_model(const Graph& pattern, const Graph& host);

// The Y-construction: suppress the pruned carrier down to a graph of minimum
// degree >= 3 that sits between pattern and host.
struct TopMinorWitness {
    Graph y;
    TopologicalEmbedding y_in_host;
    MinorModel pattern_in_y;
};

std::optional<TopMinorWitness> minor_to_topminor_witness(const Graph& pattern, const Graph& host);

} // namespace staruniv
