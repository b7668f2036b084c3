#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "staruniv/containment.hpp"
#include "staruniv/decomposition.hpp"
#include "staruniv/graph.hpp"
#include "staruniv/skfree.hpp"

namespace staruniv {

// The four forbidden families guarding component admission for the pattern
// T = T(p_1..p_k), k >= 3, p_{k-2} = 1. X1 is an explicit finite list of
// rooted 2-graphs; X2/X3/X4 act as predicates.
class ForbiddenSets {
public:
    ForbiddenSets(StarPattern pattern, DecompositionParams params);

    const StarPattern& pattern() const { return pattern_; }
    const DecompositionParams& params() const { return params_; }

    // Connected 2-graphs H on at most |T| vertices with exactly one color-1
    // vertex such that T embeds into H plus a p_k-path at that vertex.
    // Deduplicated by colored isomorphism; computed lazily.
    const std::vector<ColoredGraph>& x1() const;

    // Attach a path of length p_k at the (unique) color-1 vertex.
    static ColoredGraph attach_tail(const ColoredGraph& h, int tail_length);

    struct Violation {
        std::string family; // "x1" | "x2" | "x3" | "x4" | "star"
        json certificate;
    };

    // Full admission check for a candidate component with one color-1
    // vertex of degree n. Checks the star directly (the component must stay
    // T-free) plus the four families. nullopt = clean.
    std::optional<Violation> check_component(const ColoredGraph& g, int n) const;

    // Oracle route for the X1 check: scan the explicit list with the colored
    // subgraph engine. Used to cross-check the production route.
    bool x1_violation_by_list(const ColoredGraph& g) const;

private:
    StarPattern pattern_;
    DecompositionParams params_;
    mutable std::vector<ColoredGraph> x1_;
    mutable bool x1_built_ = false;
};

// Finite stand-in for the cited universal graphs: a class-checked,
// isomorphism-deduplicated list of admitted components per color-1 degree n.
// Indices are stable in admission order and double as core colors.
class ComponentRegistry {
public:
    explicit ComponentRegistry(std::shared_ptr<const ForbiddenSets> sets);

    struct Admission {
        int n = 0;
        int index = 0;              // c: position within bucket n
        std::vector<int> into_rep;  // candidate vertex -> representative vertex
    };

    // Admission verifies the class predicate; throws precondition_error with
    // the violation certificate on failure. Deduplicates by colored iso.
    Admission admit(const ColoredGraph& component);

    const ColoredGraph* component(int n, int index) const;
    int bucket_size(int n) const;
    int color1_vertex(int n, int index) const;

    // Pads buckets 0..k-2 with the star component (one color-1 vertex plus n
    // color-0 leaves) so that assembly always finds a component for color 0.
    void seed_defaults(int k);

    const ForbiddenSets& sets() const { return *sets_; }

    json to_json() const;

private:
    std::shared_ptr<const ForbiddenSets> sets_;
    struct Stored {
        ColoredGraph graph;
        std::string key;
        int color1;
    };
    std::map<int, std::vector<Stored>> buckets_;
};

// Registry for the short-graph branch: plain graphs, class Forb(T, P_len).
class PlainRegistry {
public:
    PlainRegistry(StarPattern pattern, long long forbidden_path_length);

    struct Admission {
        int index = 0;
        std::vector<int> into_rep;
    };
    Admission admit(const Graph& component); // connected components only

    const Graph* component(int index) const;
    int size() const;
    Graph universe() const; // disjoint union of all components, index order

private:
    StarPattern pattern_;
    long long path_bound_;
    std::vector<std::pair<Graph, std::string>> components_;
};

// Assembled universal prefix: a materialized core with one registry
// component glued to every core vertex, chosen so realized degrees hit k-1.
struct StarUniversalPrefix {
    Graph realized;
    std::vector<int> colors;           // colors of core vertices (registry indices), -1 for glued interiors
    std::vector<int> core_vertices;    // realized ids of core vertices
    struct Attachment {
        int core_vertex; // realized id
        int n;
        int index;
        std::vector<int> component_vertices; // realized ids, component order
    };
    std::vector<Attachment> attachments;
    bool k3_caveat = false; // k = 3 cores may violate the degree bound on rays
};

// Glue components onto a materialized core. Every core vertex v receives the
// component (k - 1 - deg_core(v), color(v)); missing components are reported
// as a demand list. Realized prefix is verified T-free.
StarUniversalPrefix assemble(const StarPattern& pattern, const ColoredGraph& core,
                             ComponentRegistry& registry, bool allow_k3 = false);

// End-to-end pipeline: decompose, admit parts, embed the core, assemble,
// glue part embeddings, validate.
struct UniversalEmbedding {
    TopologicalEmbedding embedding; // G into prefix.realized
    StarUniversalPrefix prefix;
    Decomposition decomposition;
    std::map<int, int> c_prime; // core vertex of G -> admitted index
    std::map<int, int> n_prime; // core vertex of G -> k - 1 - deg_core
};

UniversalEmbedding embed_universal(const Graph& g, const StarPattern& pattern,
                                   const DecompositionParams& params,
                                   ComponentRegistry& registry);

// Short branch: T-free and long-path-free graphs go to the plain registry.
struct ShortEmbedding {
    Embedding embedding; // into registry.universe()
    Graph universe;
};

ShortEmbedding embed_short(const Graph& g, PlainRegistry& registry);

// K_n with every edge subdivided `times` times (the easy universal object
// when the forbidden pattern is not a subdivided star).
Graph trivial_universal_prefix(int times, int n);

} // namespace staruniv
