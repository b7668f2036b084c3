#pragma once

#include <map>
#include <optional>
#include <vector>

#include "staruniv/containment.hpp"
#include "staruniv/graph.hpp"

namespace staruniv {

// Demand-driven enumeration of (ray set, color) pairs, indices starting at 1.
// Requests append in arrival order; every pair eventually occurs.
class IncidenceEnumeration {
public:
    struct Entry {
        std::vector<int> rays; // sorted
        int color = 0;
    };

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& entry(int j) const; // 1-based

    // Index of the first entry with this pair, appending one if absent.
    int index_for(std::vector<int> rays, int color);

    // Raw append (duplicates allowed); used by seeded enumerations.
    int append(std::vector<int> rays, int color);

    // The enumeration shown in the construction's figure:
    // f(1)={0,1}, f(2)={0,2}, f(3)={0,1}, f(4)={1}, f(5)={0,1,2}, colors 0.
    static IncidenceEnumeration figure1();

private:
    std::vector<Entry> entries_;
    std::map<std::pair<std::vector<int>, int>, int> first_index_;
};

// Finite prefix of the degree-bounded universal graph: ray_count rays of
// edge-length ray_length, plus one attachment vertex per enumeration entry
// joined to the j-th vertex of each listed ray. In standard mode entries
// carry fewer than k rays; locally_finite mode lifts that bound.
struct SkFreePrefix {
    int k = 0;
    int ray_count = 0;
    int ray_length = 0;
    bool locally_finite = false;
    IncidenceEnumeration table;

    // Full-layout vertex ids. Rays carry ray_length + 1 vertices at
    // positions 1..ray_length+1.
    long long ray_vertex(int ray, int position) const;
    long long attachment_vertex(int j) const;
    long long vertex_count() const;

    // Full materialization (rays colored 0, attachments per table).
    ColoredGraph realize() const;
};

SkFreePrefix build_prefix(int k, int ray_count, int ray_length,
                          const IncidenceEnumeration* seed = nullptr,
                          bool locally_finite = false);

// Degree-preserving topological omega-embedding of a connected degree-bounded
// graph into the prefix, per the universal construction: vertex v lands on
// the attachment vertex indexed by its incident-edge set, edge e_i runs
// along ray i.
struct SkFreeEmbedding {
    TopologicalEmbedding embedding; // into full-layout ids of `prefix`
    SkFreePrefix prefix;            // possibly extended
    std::vector<int> consumed_index; // per pattern vertex: enumeration index j
};

SkFreeEmbedding embed_skfree(const ColoredGraph& g, SkFreePrefix prefix, bool auto_extend);

// Sizing for a fresh demand-driven table: rays = |E(G)|, length = largest
// enumeration index consumed.
std::pair<int, int> required_prefix(const ColoredGraph& g);

// Materialization of just the vertices an embedding touches, for validation.
struct TouchedPrefix {
    ColoredGraph graph;
    std::vector<long long> original_ids;        // local -> full layout
    std::map<long long, int> local_ids;         // full layout -> local
    TopologicalEmbedding embedding;             // relabeled to local ids
    std::vector<char> is_attachment;            // per local vertex
    std::vector<int> attachment_index;          // local -> enumeration j (or -1)
};

TouchedPrefix materialize_touched(const SkFreePrefix& prefix, const TopologicalEmbedding& emb);

} // namespace staruniv
