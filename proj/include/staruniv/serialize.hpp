#pragma once

#include <optional>
#include <string>

#include "staruniv/graph.hpp"

namespace staruniv {

// JSON schema: {"n": <int>, "edges": [[u,v],...], "colors": [<int>,...]?}
// with u < v and edges sorted lexicographically.
json graph_to_json(const Graph& g);
json graph_to_json(const ColoredGraph& g);

std::string encode_json(const Graph& g);
std::string encode_json(const ColoredGraph& g);

// DOT export: undirected graph, vertex labels = ids, color attribute c=<int>.
std::string encode_dot(const Graph& g);
std::string encode_dot(const ColoredGraph& g);

struct DecodedGraph {
    Graph graph;
    std::optional<std::vector<int>> colors;

    ColoredGraph colored() const {
        return ColoredGraph(graph, colors ? *colors : std::vector<int>(graph.vertex_count(), 0));
    }
};

// Strict decode of the JSON schema. Throws parse_error with a byte offset on
// malformed bytes, precondition_error on schema violations.
DecodedGraph decode(const std::string& bytes);
DecodedGraph graph_from_json(const json& j);

// Certificate documents. vertex maps serialize as arrays of [pattern, host]
// pairs, edge paths as {"edge": [u,v], "path": [...]} entries.
class StarPattern;
struct StarWitness;
struct Embedding;
struct TopologicalEmbedding;
struct MinorModel;

json star_witness_to_json(const StarWitness& w);
json embedding_to_json(const Embedding& e);
json topological_to_json(const TopologicalEmbedding& e, const std::vector<Edge>& pattern_edges);
json minor_model_to_json(const MinorModel& m);

StarWitness star_witness_from_json(const json& j);
Embedding embedding_from_json(const json& j, int pattern_size);
TopologicalEmbedding topological_from_json(const json& j, const std::vector<Edge>& pattern_edges,
                                           int pattern_size);
MinorModel minor_model_from_json(const json& j);

} // namespace staruniv
