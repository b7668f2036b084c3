#pragma once

#include <string>
#include <vector>

#include "staruniv/containment.hpp"
#include "staruniv/graph.hpp"

namespace staruniv {

// Certificate validators. These are straight-line checks of the definitions,
// independent of the search code paths, and report every violation found.
// An empty result means the certificate is valid.

std::vector<std::string> check_star_witness(const StarPattern& pattern, const Graph& host,
                                            const StarWitness& w);

std::vector<std::string> check_embedding(const Graph& pattern, const Graph& host,
                                         const Embedding& e);
std::vector<std::string> check_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                         const Embedding& e);

std::vector<std::string> check_topological(const Graph& pattern, const Graph& host,
                                           const TopologicalEmbedding& e);
// Colored: branch vertices must preserve colors, subdividing vertices free.
std::vector<std::string> check_topological(const ColoredGraph& pattern, const ColoredGraph& host,
                                           const TopologicalEmbedding& e);

std::vector<std::string> check_minor_model(const Graph& pattern, const Graph& host,
                                           const MinorModel& m);

// Extra obligations of pruned models: carrier edges are host edges inside
// the model, branch sets induce trees in the carrier, exactly one edge
// between adjacent branch sets and none between non-adjacent ones.
std::vector<std::string> check_pruned_model(const Graph& pattern, const Graph& host,
                                            const MinorModel& m,
                                            const std::vector<Edge>& carrier_edges);

struct PathFamily; // from connectivity.hpp
std::vector<std::string> check_cycle(const Graph& host, const std::vector<int>& cycle,
                                     int min_length);

} // namespace staruniv
