#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "staruniv/isomorphism.hpp"

namespace oracles {

namespace {

bool connects_avoiding(const Graph& g, int u, int v, const std::vector<char>& removed) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[u] = 1;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v)
            return true;
        for (int w : g.neighbors(x)) {
            if (seen[w] || removed[w])
                continue;
            seen[w] = 1;
            q.push(w);
        }
    }
    return false;
}

} // namespace

int min_vertex_separator(const Graph& g, int u, int v) {
    std::vector<int> others;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v)
            others.push_back(x);
    int m = static_cast<int>(others.size());
    for (int size = 0; size <= m; ++size) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == size) {
                std::vector<char> removed(g.vertex_count(), 0);
                for (int i : pick)
                    removed[others[i]] = 1;
                return !connects_avoiding(g, u, v, removed);
            }
            for (int i = from; i < m; ++i) {
                pick[idx] = i;
                if (choose(idx + 1, i + 1))
                    return true;
            }
            return false;
        };
        if (choose(0, 0))
            return size;
    }
    return m; // unreachable for non-adjacent pairs
}

namespace {

struct FamilySearch {
    const Graph& g;
    int u, v, cap;
    std::vector<char> blocked;
    bool direct_used = false; // the u-v edge is the unique inner-free path
    int best = 0;

    void run(int found) {
        best = std::max(best, found);
        if (best >= cap)
            return;
        std::vector<int> path{u};
        std::vector<char> on(g.vertex_count(), 0);
        on[u] = 1;
        extend(path, on, found);
    }

    void extend(std::vector<int>& path, std::vector<char>& on, int found) {
        if (best >= cap)
            return;
        int cur = path.back();
        if (cur == v) {
            std::vector<int> inner(path.begin() + 1, path.end() - 1);
            if (inner.empty()) {
                if (direct_used)
                    return;
                direct_used = true;
                run(found + 1);
                direct_used = false;
                return;
            }
            for (int x : inner)
                blocked[x] = 1;
            run(found + 1);
            for (int x : inner)
                blocked[x] = 0;
            return;
        }
        for (int w : g.neighbors(cur)) {
            if (on[w] || (w != v && blocked[w]) || w == u)
                continue;
            on[w] = 1;
            path.push_back(w);
            extend(path, on, found);
            path.pop_back();
            on[w] = 0;
        }
    }
};

} // namespace

int max_disjoint_paths(const Graph& g, int u, int v, int cap) {
    FamilySearch search{g, u, v, cap, std::vector<char>(g.vertex_count(), 0)};
    search.run(0);
    return search.best;
}

namespace {

int dfs_longest(const Graph& g, int cur, std::vector<char>& used) {
    int best = 0;
    for (int w : g.neighbors(cur)) {
        if (used[w])
            continue;
        used[w] = 1;
        best = std::max(best, 1 + dfs_longest(g, w, used));
        used[w] = 0;
    }
    return best;
}

} // namespace

int longest_path_brute(const Graph& g) {
    int best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        used[s] = 1;
        best = std::max(best, dfs_longest(g, s, used));
        used[s] = 0;
    }
    return best;
}

namespace {

int dfs_longest_cycle(const Graph& g, int start, int cur, int len, std::vector<char>& used) {
    int best = 0;
    for (int w : g.neighbors(cur)) {
        if (w == start && len >= 2)
            best = std::max(best, len + 1);
        if (used[w] || w < start) // only cycles whose minimum vertex is start
            continue;
        used[w] = 1;
        best = std::max(best, dfs_longest_cycle(g, start, w, len + 1, used));
        used[w] = 0;
    }
    return best;
}

} // namespace

int longest_cycle_brute(const Graph& g) {
    int best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        used[s] = 1;
        best = std::max(best, dfs_longest_cycle(g, s, s, 0, used));
        used[s] = 0;
    }
    return best;
}

namespace {

struct TopoOracle {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> map;
    std::vector<char> taken;

    bool inject(int pv) {
        if (pv == pattern.vertex_count())
            return route(0, std::vector<char>(taken.begin(), taken.end()));
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if (taken[hv])
                continue;
            map[pv] = hv;
            taken[hv] = 1;
            if (inject(pv + 1))
                return true;
            taken[hv] = 0;
        }
        return false;
    }

    bool route(std::size_t e, std::vector<char> used) {
        if (e == pattern.edges().size())
            return true;
        auto [pu, pv] = pattern.edges()[e];
        std::vector<int> path{map[pu]};
        return walk(e, path, used, map[pv]);
    }

    bool walk(std::size_t e, std::vector<int>& path, std::vector<char>& used, int goal) {
        int cur = path.back();
        if (cur == goal)
            return route(e + 1, used);
        for (int w : host.neighbors(cur)) {
            bool is_goal = w == goal;
            if (!is_goal && used[w])
                continue;
            bool on_path = std::find(path.begin(), path.end(), w) != path.end();
            if (on_path)
                continue;
            if (!is_goal)
                used[w] = 1;
            path.push_back(w);
            if (walk(e, path, used, goal))
                return true;
            path.pop_back();
            if (!is_goal)
                used[w] = 0;
        }
        return false;
    }
};

// tiny independent subgraph test
bool subgraph_brute(const Graph& pattern, const Graph& host, int pv, std::vector<int>& map,
                    std::vector<char>& taken) {
    if (pv == pattern.vertex_count())
        return true;
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
        if (taken[hv])
            continue;
        bool ok = true;
        for (int pw : pattern.neighbors(pv))
            if (pw < pv && !host.has_edge(map[pw], hv))
                ok = false;
        if (!ok)
            continue;
        map[pv] = hv;
        taken[hv] = 1;
        if (subgraph_brute(pattern, host, pv + 1, map, taken))
            return true;
        taken[hv] = 0;
    }
    return false;
}

bool subgraph_brute(const Graph& pattern, const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count())
        return false;
    std::vector<int> map(pattern.vertex_count(), -1);
    std::vector<char> taken(host.vertex_count(), 0);
    return subgraph_brute(pattern, host, 0, map, taken);
}

Graph contract_edge(const Graph& g, int u, int v) {
    // merge v into u, compact ids
    std::vector<int> relabel(g.vertex_count());
    int next = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        relabel[x] = x == v ? -1 : next++;
    relabel[v] = relabel[u];
    std::vector<staruniv::Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        int ra = relabel[a], rb = relabel[b];
        if (ra == rb)
            continue;
        edges.push_back({std::min(ra, rb), std::max(ra, rb)});
    }
    return Graph(g.vertex_count() - 1, std::move(edges));
}

} // namespace

bool topological_contains(const Graph& pattern, const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count())
        return false;
    TopoOracle oracle{pattern, host, std::vector<int>(pattern.vertex_count(), -1),
                      std::vector<char>(host.vertex_count(), 0)};
    return oracle.inject(0);
}

bool minor_contains(const Graph& pattern, const Graph& host) {
    // contraction closure with isomorphism dedup; subgraph test at each stage
    std::set<std::string> seen;
    std::vector<Graph> frontier{host};
    seen.insert(staruniv::canonical_key(host));
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            if (subgraph_brute(pattern, g))
                return true;
            if (g.vertex_count() <= pattern.vertex_count())
                continue;
            for (const auto& [u, v] : g.edges()) {
                Graph contracted = contract_edge(g, u, v);
                std::string key = staruniv::canonical_key(contracted);
                if (seen.insert(key).second)
                    next.push_back(std::move(contracted));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

} // namespace oracles
