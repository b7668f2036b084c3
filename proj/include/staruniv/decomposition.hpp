#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staruniv/containment.hpp"
#include "staruniv/graph.hpp"

namespace staruniv {

// Quantities of the block bound and the decomposition, derived from T.
// A relaxed m substitutes a smaller bound to exercise the pipeline on small
// graphs; such runs carry no structural guarantee and are marked non-theorem.
struct DecompositionParams {
    int k = 0;
    int p_k = 0;
    long long m_bound = 0;           // (k+1)^2 (2 p_k)^2
    long long long_path_threshold = 0; // 4 p_k m
    long long core_path = 0;           // 2 p_k
    long long part_path_bound = 0;     // 8 p_k + 2 m
    bool relaxed = false;

    static DecompositionParams from(const StarPattern& t);
    static DecompositionParams relaxed_m(const StarPattern& t, long long m);
};

// Core vertex set plus one part per core vertex ({v} when trivial).
// Vertex ids refer to the host graph.
struct Decomposition {
    std::vector<int> core; // sorted
    std::map<int, std::vector<int>> parts; // attachment vertex -> vertices (incl. attachment)
};

struct ReportEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool all_pass() const;
};

// Lemma-style block bound: every block containing a vertex of host degree
// >= k must be free of paths of length m. Inapplicable (with witness) when
// the host contains T.
Report check_block_bound(const Graph& g, const StarPattern& t,
                         const DecompositionParams& params);

// The structural decomposition. Preconditions (connected, T-free, long path
// present) are verified; violations throw precondition_error with
// certificates.
Decomposition decompose(const Graph& g, const StarPattern& t,
                        const DecompositionParams& params);

// Independent verification of properties (1)-(5) plus structural sanity.
Report verify_decomposition(const Graph& g, const StarPattern& t,
                            const DecompositionParams& params, const Decomposition& d);

} // namespace staruniv
