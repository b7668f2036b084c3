#include "staruniv/gadgets.hpp"

#include <algorithm>
#include <set>

#include "staruniv/guard.hpp"
#include "staruniv/serialize.hpp"

namespace staruniv {

NegativeParams NegativeParams::from(const StarPattern& t) {
    int k = t.leg_count();
    if (k < 3)
        throw precondition_error("pattern needs at least 3 legs (k >= 3 violated)");
    if (t.leg(k - 3) < 2)
        throw precondition_error("pattern outside hypothesis: p_{k-2} >= 2 violated");
    NegativeParams p;
    p.pattern = t;
    p.m_first_long = 0;
    for (int i = 0; i < k; ++i)
        if (t.leg(i) > 1) {
            p.m_first_long = i + 1; // 1-based
            break;
        }
    p.p_m = t.leg(p.m_first_long - 1);
    p.n_branch = k - p.m_first_long + 1;
    // exactly n legs are long, the rest have length 1
    for (int i = 0; i < p.m_first_long - 1; ++i)
        if (t.leg(i) != 1)
            throw error("internal: legs below m must have length 1");
    return p;
}

Graph build_H1(int p, int copies) {
    if (p < 2)
        throw precondition_error("H1 paths must have length at least 2");
    if (copies < 1)
        throw precondition_error("H1 needs at least one path");
    std::vector<Edge> edges;
    int next = 2;
    for (int c = 0; c < copies; ++c) {
        int prev = 0;
        for (int i = 0; i < p - 1; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, 1});
    }
    return Graph(next, std::move(edges));
}

Graph build_H2(int p) {
    if (p < 1)
        throw precondition_error("H2 needs at least one shared vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < p + 2; ++u)
        for (int v = u + 1; v < p + 2; ++v)
            if (!(u == 0 && v == 1))
                edges.push_back({u, v});
    return Graph(p + 2, std::move(edges));
}

namespace {

void gen_alternating(std::string& cur, int length, std::set<std::string>& out) {
    if (static_cast<int>(cur.size()) >= length) {
        out.insert(cur.substr(0, length));
        return;
    }
    for (const char* block : {"12", "112"}) {
        cur += block;
        gen_alternating(cur, length, out);
        cur.resize(cur.size() - std::string(block).size());
    }
}

} // namespace

std::vector<std::string> alternating_sequences(int length) {
    if (length < 1)
        throw precondition_error("length must be positive");
    std::set<std::string> out;
    std::string cur;
    gen_alternating(cur, length, out);
    return {out.begin(), out.end()};
}

std::vector<int> GadgetGraph::level_set(int i) const {
    if (i < 0 || i > depth)
        throw precondition_error("level out of range");
    std::vector<int> out;
    for (int v = 0; v < tree_vertex_count; ++v)
        if (tree_depth[v] == i)
            out.push_back(v);
    return out;
}

GadgetGraph build_G_alpha(const StarPattern& t, const std::string& alpha_prefix, int depth,
                          int copies) {
    GadgetGraph g;
    g.params = NegativeParams::from(t);
    if (depth < 0)
        throw precondition_error("depth must be non-negative");
    if (static_cast<int>(alpha_prefix.size()) < depth)
        throw precondition_error("alpha prefix shorter than depth");
    for (char c : alpha_prefix)
        if (c != '1' && c != '2')
            throw precondition_error("alpha prefix must be over {1,2}");
    if (g.params.n_branch < 2)
        throw precondition_error("branch count below 2");
    if (copies < 1)
        throw precondition_error("N must be positive");
    g.alpha_prefix = alpha_prefix;
    g.depth = depth;
    g.copies = copies;

    // (n-1)-regular rooted tree: the root has n-1 children, inner vertices
    // n-2, truncated at `depth`.
    int fanout_root = g.params.n_branch - 1;
    int fanout_inner = g.params.n_branch - 2;
    g.tree_parent = {-1};
    g.tree_depth = {0};
    std::vector<std::pair<int, int>> tree_edges; // (parent, child)
    for (int v = 0; v < static_cast<int>(g.tree_parent.size()); ++v) {
        if (g.tree_depth[v] == depth)
            continue;
        int fanout = v == 0 ? fanout_root : fanout_inner;
        for (int c = 0; c < fanout; ++c) {
            int id = static_cast<int>(g.tree_parent.size());
            g.tree_parent.push_back(v);
            g.tree_depth.push_back(g.tree_depth[v] + 1);
            tree_edges.push_back({v, id});
        }
    }
    g.tree_vertex_count = static_cast<int>(g.tree_parent.size());

    std::vector<Edge> edges;
    int next = g.tree_vertex_count;
    for (const auto& [u, v] : tree_edges) {
        GadgetGraph::GadgetTag tag;
        tag.tree_u = u;
        tag.tree_v = v;
        tag.level = std::min(g.tree_depth[u], g.tree_depth[v]);
        tag.type = alpha_prefix[tag.level] - '0';
        if (tag.type == 1) {
            for (int c = 0; c < copies; ++c) {
                int prev = u;
                for (int i = 0; i < g.params.p_m - 1; ++i) {
                    edges.push_back({prev, next});
                    tag.inner.push_back(next);
                    prev = next++;
                }
                edges.push_back({prev, v});
            }
        } else {
            // K_{p+2} minus the pole edge, poles identified with u, v
            std::vector<int> ys;
            for (int i = 0; i < g.params.p_m; ++i)
                ys.push_back(next++);
            tag.inner = ys;
            for (int y : ys) {
                edges.push_back({u, y});
                edges.push_back({v, y});
            }
            for (std::size_t a = 0; a < ys.size(); ++a)
                for (std::size_t b = a + 1; b < ys.size(); ++b)
                    edges.push_back({ys[a], ys[b]});
        }
        g.gadgets.push_back(std::move(tag));
    }
    g.realized = Graph(next, std::move(edges));
    return g;
}

ClaimReport check_claim1(const GadgetGraph& g) {
    ClaimReport report;
    report.checked = 1;
    auto witness = find_star(g.params.pattern, g.realized);
    report.pass = !witness.has_value();
    if (witness) {
        json cert;
        cert["centre"] = witness->centre;
        cert["legs"] = witness->legs;
        report.details = std::move(cert);
        report.failures.push_back("truncation contains the star");
    }
    return report;
}

ClaimReport check_claim2(const GadgetGraph& g, int sample_limit, unsigned seed) {
    ClaimReport report;
    report.pass = true;
    // interior edges: both tree endpoints keep their full gadget complement
    std::vector<Edge> interior;
    int boundary = 0;
    for (const auto& tag : g.gadgets) {
        bool inner_gadget = std::max(g.tree_depth[tag.tree_u], g.tree_depth[tag.tree_v]) <
                            g.depth;
        std::set<int> verts{tag.tree_u, tag.tree_v};
        verts.insert(tag.inner.begin(), tag.inner.end());
        for (const auto& [a, b] : g.realized.edges()) {
            if (!verts.count(a) || !verts.count(b))
                continue;
            if (inner_gadget)
                interior.push_back({a, b});
            else
                ++boundary;
        }
    }
    report.skipped = boundary;
    // deterministic sample: linear congruential walk over the interior list
    std::vector<Edge> chosen;
    if (sample_limit < 0 || static_cast<int>(interior.size()) <= sample_limit) {
        chosen = interior;
    } else {
        unsigned long long state = seed * 6364136223846793005ull + 1442695040888963407ull;
        std::set<std::size_t> picked;
        while (static_cast<int>(picked.size()) < sample_limit) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            picked.insert(static_cast<std::size_t>((state >> 17) % interior.size()));
        }
        for (std::size_t i : picked)
            chosen.push_back(interior[i]);
    }
    for (const auto& [a, b] : chosen) {
        Graph subdivided = subdivide_edge(g.realized, a, b, 1);
        if (!find_star(g.params.pattern, subdivided)) {
            report.pass = false;
            report.failures.push_back("no star after subdividing edge " + std::to_string(a) +
                                      "," + std::to_string(b));
        }
        ++report.checked;
    }
    return report;
}

namespace {

struct ExactPathSearch {
    const Graph& host;
    int target_len;
    int want;
    int from, to;
    std::vector<char> used;
    std::vector<std::vector<int>> found;

    bool collect() {
        if (static_cast<int>(found.size()) == want)
            return true;
        std::vector<int> path{from};
        return dfs(path);
    }

    bool dfs(std::vector<int>& path) {
        int cur = path.back();
        int len = static_cast<int>(path.size()) - 1;
        if (len == target_len) {
            if (cur != to)
                return false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                used[path[i]] = 1;
            found.push_back(path);
            if (collect())
                return true;
            found.pop_back();
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                used[path[i]] = 0;
            return false;
        }
        for (int w : host.neighbors(cur)) {
            if (w == to) {
                if (len + 1 != target_len)
                    continue;
            } else if (used[w]) {
                continue;
            } else {
                bool on_path = false;
                for (int x : path)
                    if (x == w)
                        on_path = true;
                if (on_path)
                    continue;
            }
            path.push_back(w);
            if (dfs(path))
                return true;
            path.pop_back();
        }
        return false;
    }
};

struct CliqueSearch {
    const Graph& host;
    std::vector<int> candidates;
    int want;
    std::vector<int> chosen;

    bool run(std::size_t start) {
        if (static_cast<int>(chosen.size()) == want)
            return true;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            int v = candidates[i];
            bool ok = true;
            for (int u : chosen)
                if (!host.has_edge(u, v))
                    ok = false;
            if (!ok)
                continue;
            chosen.push_back(v);
            if (run(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<RelationWitness> relation_R(const Graph& host, int v, int w, int p, int t) {
    if (v == w)
        throw precondition_error("poles must differ");
    if (!host.has_vertex(v) || !host.has_vertex(w))
        throw precondition_error("pole out of range");
    if (p < 1 || t < 1)
        throw precondition_error("parameters must be positive");
    check_guard("relation_R host size", host.vertex_count(), 64);

    if (p >= 2) { // length-1 paths would collapse onto the pole edge
        ExactPathSearch search{host, p, t, v, w,
                               std::vector<char>(host.vertex_count(), 0), {}};
        search.used[v] = 1;
        if (search.collect())
            return RelationWitness{"H1", std::move(search.found), {}};
    }
    // H2: p vertices adjacent to both poles and to each other
    std::vector<int> cands;
    for (int y = 0; y < host.vertex_count(); ++y)
        if (y != v && y != w && host.has_edge(v, y) && host.has_edge(w, y))
            cands.push_back(y);
    CliqueSearch clique{host, std::move(cands), p, {}};
    if (clique.run(0))
        return RelationWitness{"H2", {}, std::move(clique.chosen)};
    return std::nullopt;
}

} // namespace staruniv
