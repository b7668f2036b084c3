#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staruniv/containment.hpp"
#include "staruniv/decomposition.hpp"
#include "staruniv/graph.hpp"

namespace staruniv {

// Parameters of the adversarial family: T with k >= 3 and p_{k-2} >= 2,
// the smallest index with a long leg, and the branch count n = k - m + 1.
struct NegativeParams {
    StarPattern pattern;
    int m_first_long = 0; // 1-based index of the first leg of length > 1
    int p_m = 0;          // length of that leg
    int n_branch = 0;     // k - m + 1

    static NegativeParams from(const StarPattern& t);
};

// Pole gadget with N internally disjoint length-p paths between x1 = 0 and
// x2 = 1.
Graph build_H1(int p, int copies);

// Pole gadget on {x1, x2, y_1..y_p}: complete except for the pole pair.
Graph build_H2(int p);

// All length-`length` prefixes of sequences that alternately carry one or
// two 1's followed by a single 2, starting with a 1. Lexicographic order.
std::vector<std::string> alternating_sequences(int length);

// Truncated composite graph: an (n-1)-regular rooted tree to `depth`, every
// tree edge replaced by a copy of H_{alpha(level)} with the poles identified
// with the edge's endpoints.
struct GadgetGraph {
    NegativeParams params;
    std::string alpha_prefix;
    int depth = 0;
    int copies = 0; // N
    Graph realized;
    int tree_vertex_count = 0;            // tree vertices are realized ids 0..count-1
    std::vector<int> tree_parent;         // -1 for the root
    std::vector<int> tree_depth;
    struct GadgetTag {
        int tree_u = 0, tree_v = 0; // u = shallower endpoint
        int level = 0;
        int type = 0; // 1 or 2
        std::vector<int> inner; // realized ids of the gadget's internal vertices
    };
    std::vector<GadgetTag> gadgets;

    // Tree vertices at exact distance i from the root.
    std::vector<int> level_set(int i) const;
};

GadgetGraph build_G_alpha(const StarPattern& t, const std::string& alpha_prefix, int depth,
                          int copies);

struct ClaimReport {
    bool pass = false;
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    json details;
};

// Claim 1: the truncation is T-free.
ClaimReport check_claim1(const GadgetGraph& g);

// Claim 2: subdividing any single sampled edge creates a T-copy. Edges whose
// gadget touches the truncation boundary are skipped with notice (the proof
// leans on full pole degree). sample_limit < 0 checks all interior edges.
ClaimReport check_claim2(const GadgetGraph& g, int sample_limit, unsigned seed);

// The relation R: t internally disjoint v-w paths of length exactly p, or an
// H2(p) subgraph with poles v, w.
struct RelationWitness {
    std::string form; // "H1" or "H2"
    std::vector<std::vector<int>> paths; // H1 form
    std::vector<int> clique;             // H2 form: images of y_1..y_p
};

std::optional<RelationWitness> relation_R(const Graph& host, int v, int w, int p, int t);

} // namespace staruniv
