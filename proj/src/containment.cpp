#include "staruniv/containment.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "staruniv/guard.hpp"

namespace staruniv {

StarPattern::StarPattern(std::vector<int> leg_lengths) : legs_(std::move(leg_lengths)) {
    for (int p : legs_)
        if (p < 1)
            throw precondition_error("star leg lengths must be positive");
    std::sort(legs_.begin(), legs_.end());
}

StarPattern StarPattern::simple(int k) {
    if (k < 0)
        throw precondition_error("negative leg count");
    return StarPattern(std::vector<int>(k, 1));
}

int StarPattern::vertex_count() const {
    return 1 + std::accumulate(legs_.begin(), legs_.end(), 0);
}

Graph StarPattern::realize() const {
    std::vector<Edge> edges;
    int next = 1;
    for (int p : legs_) {
        int prev = 0;
        for (int i = 0; i < p; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
    }
    return Graph(next, std::move(edges));
}

namespace {

// Legs are assigned longest-requirement-first; a leg of length >= p contains
// one of length exactly p from the centre, so exact-length DFS is complete.
struct StarSearch {
    const Graph& host;
    std::vector<int> order;  // leg lengths, descending
    std::vector<int> target; // order[i] -> index in the ascending pattern
    int centre = -1;
    std::vector<char> used;
    std::vector<std::vector<int>> legs; // by ascending pattern index

    bool assign(std::size_t i) {
        if (i == order.size())
            return true;
        int min_first = -1;
        if (i > 0 && order[i] == order[i - 1])
            min_first = legs[target[i - 1]][1]; // break symmetry between equal legs
        std::vector<int> path{centre};
        return extend(i, path, order[i], min_first);
    }

    bool extend(std::size_t i, std::vector<int>& path, int remaining, int min_first) {
        if (remaining == 0) {
            legs[target[i]] = path;
            if (assign(i + 1))
                return true;
            legs[target[i]].clear();
            return false;
        }
        for (int w : host.neighbors(path.back())) {
            if (used[w])
                continue;
            if (path.size() == 1 && w <= min_first)
                continue;
            used[w] = 1;
            path.push_back(w);
            if (extend(i, path, remaining - 1, min_first))
                return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<StarWitness> find_star(const StarPattern& pattern, const Graph& host) {
    int k = pattern.leg_count();
    if (k == 0) {
        if (host.vertex_count() == 0)
            return std::nullopt;
        return StarWitness{0, {}};
    }
    if (host.vertex_count() == 0)
        return std::nullopt;
    std::vector<int> order(pattern.legs().rbegin(), pattern.legs().rend());
    // descending order[i] corresponds to ascending index k-1-i
    std::vector<int> target(k);
    for (int i = 0; i < k; ++i)
        target[i] = k - 1 - i;
    for (int c = 0; c < host.vertex_count(); ++c) {
        if (host.degree(c) < k)
            continue;
        StarSearch search{host, order, target, c,
                          std::vector<char>(host.vertex_count(), 0),
                          std::vector<std::vector<int>>(k)};
        search.used[c] = 1;
        if (search.assign(0))
            return StarWitness{c, std::move(search.legs)};
    }
    return std::nullopt;
}

namespace {

struct SubgraphSearch {
    const Graph& pattern;
    const Graph& host;
    const std::vector<int>* pattern_colors = nullptr;
    const std::vector<int>* host_colors = nullptr;

    std::vector<int> map;      // pattern -> host or -1
    std::vector<char> used;    // host side
    std::vector<int> order;    // pattern vertices in assignment order

    void make_order() {
        int p = pattern.vertex_count();
        std::vector<char> placed(p, 0);
        for (int step = 0; step < p; ++step) {
            int best = -1, best_anchored = -1, best_deg = -1;
            for (int v = 0; v < p; ++v) {
                if (placed[v])
                    continue;
                int anchored = 0;
                for (int w : pattern.neighbors(v))
                    anchored += placed[w] ? 1 : 0;
                int deg = pattern.degree(v);
                if (anchored > best_anchored ||
                    (anchored == best_anchored && deg > best_deg)) {
                    best = v;
                    best_anchored = anchored;
                    best_deg = deg;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool feasible(int pv, int hv) {
        if (used[hv])
            return false;
        if (host.degree(hv) < pattern.degree(pv))
            return false;
        if (pattern_colors && (*pattern_colors)[pv] != (*host_colors)[hv])
            return false;
        for (int w : pattern.neighbors(pv))
            if (map[w] != -1 && !host.has_edge(hv, map[w]))
                return false;
        return true;
    }

    bool run(std::size_t step) {
        if (step == order.size())
            return true;
        int pv = order[step];
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if (!feasible(pv, hv))
                continue;
            map[pv] = hv;
            used[hv] = 1;
            if (run(step + 1))
                return true;
            used[hv] = 0;
            map[pv] = -1;
        }
        return false;
    }
};

std::optional<Embedding> subgraph_impl(const Graph& pattern, const Graph& host,
                                       const std::vector<int>* pc, const std::vector<int>* hc) {
    if (pattern.vertex_count() > host.vertex_count() ||
        pattern.edge_count() > host.edge_count())
        return std::nullopt;
    if (pattern.vertex_count() == 0)
        return Embedding{{}};
    SubgraphSearch search{pattern, host, pc, hc,
                          std::vector<int>(pattern.vertex_count(), -1),
                          std::vector<char>(host.vertex_count(), 0),
                          {}};
    search.make_order();
    if (!search.run(0))
        return std::nullopt;
    return Embedding{std::move(search.map)};
}

} // namespace

std::optional<Embedding> find_subgraph(const Graph& pattern, const Graph& host) {
    return subgraph_impl(pattern, host, nullptr, nullptr);
}

std::optional<Embedding> find_subgraph(const ColoredGraph& pattern, const ColoredGraph& host) {
    return subgraph_impl(pattern.graph(), host.graph(), &pattern.colors(), &host.colors());
}

namespace {

std::vector<int> bfs_dist(const Graph& g, int from) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

struct TopoSearch {
    const Graph& pattern;
    const Graph& host;
    const std::vector<int>* pattern_colors = nullptr;
    const std::vector<int>* host_colors = nullptr;

    std::vector<int> map;
    std::vector<char> blocked; // image vertices and inner vertices of routed paths
    std::vector<std::vector<int>> paths;
    std::vector<int> edge_order; // indices into pattern.edges()
    std::vector<int> place_order;
    std::vector<int> host_by_degree;

    void prepare() {
        int p = pattern.vertex_count();
        place_order.resize(p);
        std::iota(place_order.begin(), place_order.end(), 0);
        std::stable_sort(place_order.begin(), place_order.end(), [&](int a, int b) {
            return pattern.degree(a) > pattern.degree(b);
        });
        host_by_degree.resize(host.vertex_count());
        std::iota(host_by_degree.begin(), host_by_degree.end(), 0);
        std::stable_sort(host_by_degree.begin(), host_by_degree.end(), [&](int a, int b) {
            return host.degree(a) < host.degree(b);
        });
    }

    bool place(std::size_t step) {
        if (step == place_order.size())
            return route_all();
        int pv = place_order[step];
        for (int hv : host_by_degree) {
            if (blocked[hv] || host.degree(hv) < pattern.degree(pv))
                continue;
            if (pattern_colors && (*pattern_colors)[pv] != (*host_colors)[hv])
                continue;
            map[pv] = hv;
            blocked[hv] = 1;
            if (place(step + 1))
                return true;
            blocked[hv] = 0;
            map[pv] = -1;
        }
        return false;
    }

    bool route_all() {
        int m = pattern.edge_count();
        edge_order.resize(m);
        std::iota(edge_order.begin(), edge_order.end(), 0);
        // scarcest first: larger host distance between the placed endpoints
        std::vector<std::vector<int>> dist;
        std::vector<int> key(m, 0);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = pattern.edges()[i];
            auto d = bfs_dist(host, map[u]);
            key[i] = d[map[v]] == -1 ? host.vertex_count() + 1 : d[map[v]];
        }
        std::stable_sort(edge_order.begin(), edge_order.end(),
                         [&](int a, int b) { return key[a] > key[b]; });
        paths.assign(m, {});
        return route(0);
    }

    bool route(std::size_t i) {
        if (i == edge_order.size())
            return true;
        int ei = edge_order[i];
        auto [u, v] = pattern.edges()[ei];
        int a = map[u], b = map[v];
        // shortest-first: iterative deepening on exact path length
        std::vector<int> dist_to_b = restricted_dist(b, a);
        if (dist_to_b[a] == -1)
            return false;
        for (int len = dist_to_b[a]; len <= host.vertex_count() - 1; ++len) {
            std::vector<int> path{a};
            if (dfs_exact(i, ei, path, b, len, dist_to_b))
                return true;
        }
        return false;
    }

    // BFS distances to b through vertices that are currently unblocked
    // (a and b are allowed regardless). Admissible pruning bound.
    std::vector<int> restricted_dist(int b, int a) {
        std::vector<int> dist(host.vertex_count(), -1);
        std::queue<int> q;
        dist[b] = 0;
        q.push(b);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : host.neighbors(v)) {
                if (dist[w] != -1)
                    continue;
                if (blocked[w] && w != a)
                    continue;
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
        return dist;
    }

    bool dfs_exact(std::size_t i, int ei, std::vector<int>& path, int b, int remaining,
                   const std::vector<int>& dist_to_b) {
        int cur = path.back();
        if (remaining == 0) {
            if (cur != b)
                return false;
            paths[ei] = path;
            for (std::size_t j = 1; j + 1 < path.size(); ++j)
                blocked[path[j]] = 1;
            if (route(i + 1))
                return true;
            for (std::size_t j = 1; j + 1 < path.size(); ++j)
                blocked[path[j]] = 0;
            paths[ei].clear();
            return false;
        }
        for (int w : host.neighbors(cur)) {
            if (w == b) {
                if (remaining != 1)
                    continue;
            } else {
                if (blocked[w])
                    continue;
                if (dist_to_b[w] == -1 || dist_to_b[w] > remaining - 1)
                    continue;
                bool on_path = false;
                for (int x : path)
                    if (x == w) {
                        on_path = true;
                        break;
                    }
                if (on_path)
                    continue;
            }
            path.push_back(w);
            if (dfs_exact(i, ei, path, b, remaining - 1, dist_to_b))
                return true;
            path.pop_back();
        }
        return false;
    }
};

std::optional<TopologicalEmbedding> topological_impl(const Graph& pattern, const Graph& host,
                                                     const std::vector<int>* pc,
                                                     const std::vector<int>* hc) {
    if (pattern.vertex_count() > host.vertex_count())
        return std::nullopt;
    if (pattern.vertex_count() == 0)
        return TopologicalEmbedding{{}, {}};
    TopoSearch search{pattern, host, pc, hc,
                      std::vector<int>(pattern.vertex_count(), -1),
                      std::vector<char>(host.vertex_count(), 0),
                      {}, {}, {}, {}};
    search.prepare();
    if (!search.place(0))
        return std::nullopt;
    return TopologicalEmbedding{std::move(search.map), std::move(search.paths)};
}

} // namespace

std::optional<TopologicalEmbedding> find_topological(const Graph& pattern, const Graph& host) {
    return topological_impl(pattern, host, nullptr, nullptr);
}

std::optional<TopologicalEmbedding> find_topological(const ColoredGraph& pattern,
                                                     const ColoredGraph& host) {
    return topological_impl(pattern.graph(), host.graph(), &pattern.colors(), &host.colors());
}

namespace {

struct MinorSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> assign; // host vertex -> pattern vertex or -1
    std::vector<std::vector<int>> sets;

    bool has_cross_edge(int y, int z) const {
        for (int a : sets[y])
            for (int b : sets[z])
                if (host.has_edge(a, b))
                    return true;
        return false;
    }

    bool run() {
        for (int z = 0; z < pattern.vertex_count(); ++z)
            if (sets[z].empty())
                return try_roots(z);
        for (const auto& [y, z] : pattern.edges())
            if (!has_cross_edge(y, z))
                return try_grow(y, z);
        return true;
    }

    bool try_roots(int z) {
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (assign[v] != -1)
                continue;
            if (pattern.degree(z) > 0 && host.degree(v) == 0)
                continue;
            assign[v] = z;
            sets[z].push_back(v);
            if (run())
                return true;
            sets[z].pop_back();
            assign[v] = -1;
        }
        return false;
    }

    bool try_grow(int y, int z) {
        for (int side : {y, z}) {
            for (int v = 0; v < host.vertex_count(); ++v) {
                if (assign[v] != -1)
                    continue;
                bool adjacent = false;
                for (int a : sets[side])
                    if (host.has_edge(a, v)) {
                        adjacent = true;
                        break;
                    }
                if (!adjacent)
                    continue;
                assign[v] = side;
                sets[side].push_back(v);
                if (run())
                    return true;
                sets[side].pop_back();
                assign[v] = -1;
            }
        }
        return false;
    }
};

} // namespace

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host) {
    check_guard("minor search pattern size", pattern.vertex_count(), 6);
    check_guard("minor search host size", host.vertex_count(), 16);
    if (pattern.vertex_count() > host.vertex_count())
        return std::nullopt;
    if (pattern.vertex_count() == 0)
        return MinorModel{{}};
    MinorSearch search{pattern, host, std::vector<int>(host.vertex_count(), -1),
                       std::vector<std::vector<int>>(pattern.vertex_count())};
    if (!search.run())
        return std::nullopt;
    for (auto& s : search.sets)
        std::sort(s.begin(), s.end());
    return MinorModel{std::move(search.sets)};
}

} // namespace staruniv
