#include "staruniv/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace staruniv {

namespace {

// Stable color refinement: split classes by multisets of neighbor classes.
std::vector<int> refine(const Graph& g, std::vector<int> cls) {
    int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                nb.push_back(cls[w]);
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), cls[v]);
            sig[v] = {std::move(nb), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig)
            rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, id] : rank)
            id = r++;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = rank[sig[v].first];
        if (next == cls)
            return cls;
        cls = std::move(next);
    }
}

std::string encode_under(const ColoredGraph& g, const std::vector<int>& to_canon) {
    int n = g.graph().vertex_count();
    std::vector<int> from_canon(n);
    for (int v = 0; v < n; ++v)
        from_canon[to_canon[v]] = v;
    std::string key;
    key.reserve(static_cast<std::size_t>(n) * 4 + static_cast<std::size_t>(n) * n / 8 + 8);
    key += std::to_string(n);
    key += ';';
    for (int i = 0; i < n; ++i) {
        key += std::to_string(g.color(from_canon[i]));
        key += ',';
    }
    key += ';';
    unsigned char acc = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<unsigned char>(
                (acc << 1) | (g.graph().has_edge(from_canon[i], from_canon[j]) ? 1 : 0));
            if (++bits == 8) {
                key += static_cast<char>(acc);
                acc = 0;
                bits = 0;
            }
        }
    if (bits)
        key += static_cast<char>(acc << (8 - bits));
    return key;
}

struct CanonSearch {
    const ColoredGraph& g;
    int n;
    std::string best;
    std::vector<int> best_map;

    // Swapping twins is an automorphism, so one representative per twin
    // group suffices. Keeps stars and cliques from exploding factorially.
    bool twins(int u, int v) const {
        if (g.color(u) != g.color(v))
            return false;
        std::vector<int> nu, nv;
        for (int w : g.graph().neighbors(u))
            if (w != v)
                nu.push_back(w);
        for (int w : g.graph().neighbors(v))
            if (w != u)
                nv.push_back(w);
        return nu == nv;
    }

    void run(std::vector<int> cls) {
        cls = refine(g.graph(), std::move(cls));
        // first non-singleton class, by class id
        int target = -1;
        std::map<int, std::vector<int>> groups;
        for (int v = 0; v < n; ++v)
            groups[cls[v]].push_back(v);
        for (const auto& [id, members] : groups)
            if (members.size() > 1) {
                target = id;
                break;
            }
        if (target == -1) {
            // discrete: class ids are 0..n-1, position = class id
            std::vector<int> to_canon(n);
            for (int v = 0; v < n; ++v)
                to_canon[v] = cls[v];
            std::string key = encode_under(g, to_canon);
            if (best.empty() || key < best) {
                best = std::move(key);
                best_map = std::move(to_canon);
            }
            return;
        }
        std::vector<int> representatives;
        for (int v : groups[target]) {
            bool seen = false;
            for (int r : representatives)
                if (twins(r, v)) {
                    seen = true;
                    break;
                }
            if (!seen)
                representatives.push_back(v);
        }
        for (int v : representatives) {
            std::vector<int> next = cls;
            // individualize v: give it a fresh class just below its group
            for (int w = 0; w < n; ++w)
                next[w] = next[w] * 2 + (w == v ? 0 : 1);
            run(std::move(next));
        }
    }
};

} // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
    int n = g.graph().vertex_count();
    if (n == 0)
        return {"0;;", {}};
    std::vector<int> initial(n);
    std::map<int, int> color_rank;
    for (int v = 0; v < n; ++v)
        color_rank.emplace(g.color(v), 0);
    int r = 0;
    for (auto& [c, id] : color_rank)
        id = r++;
    for (int v = 0; v < n; ++v)
        initial[v] = color_rank[g.color(v)];
    CanonSearch search{g, n, {}, {}};
    search.run(std::move(initial));
    return {std::move(search.best), std::move(search.best_map)};
}

CanonicalForm canonical_form(const Graph& g) {
    return canonical_form(ColoredGraph(g, std::vector<int>(g.vertex_count(), 0)));
}

std::string canonical_key(const ColoredGraph& g) { return canonical_form(g).key; }
std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.graph().vertex_count() != b.graph().vertex_count() ||
        a.graph().edge_count() != b.graph().edge_count())
        return std::nullopt;
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    if (ca.key != cb.key)
        return std::nullopt;
    int n = a.graph().vertex_count();
    std::vector<int> from_canon_b(n);
    for (int v = 0; v < n; ++v)
        from_canon_b[cb.to_canon[v]] = v;
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v)
        map[v] = from_canon_b[ca.to_canon[v]];
    return map;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    return find_isomorphism(ColoredGraph(a, std::vector<int>(a.vertex_count(), 0)),
                            ColoredGraph(b, std::vector<int>(b.vertex_count(), 0)));
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n <= 0)
        return {};
    std::vector<Graph> level{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            int old = size - 1;
            for (unsigned mask = 0; mask < (1u << old); ++mask) {
                std::vector<Edge> edges = g.edges();
                for (int v = 0; v < old; ++v)
                    if (mask & (1u << v))
                        edges.push_back({v, old});
                Graph cand(size, std::move(edges));
                if (seen.insert(canonical_key(cand)).second)
                    next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::vector<Graph> out;
        for (Graph& g : level)
            if (g.is_connected())
                out.push_back(std::move(g));
        return out;
    }
    return level;
}

} // namespace staruniv
