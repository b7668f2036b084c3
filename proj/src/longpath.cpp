#include "staruniv/longpath.hpp"

#include <algorithm>
#include <queue>

#include "staruniv/guard.hpp"

namespace staruniv {

namespace {

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - static_cast<int>(g.components().size());
}

// Farthest vertex from s plus the path to it (BFS; exact in trees).
std::pair<int, std::vector<int>> tree_farthest(const Graph& g, int s) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    parent[s] = -1;
    q.push(s);
    int last = s;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        last = v;
        for (int w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int v = last; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return {last, path};
}

std::vector<int> forest_longest_path(const Graph& g) {
    std::vector<int> best;
    for (const auto& comp : g.components()) {
        auto [far, _] = tree_farthest(g, comp[0]);
        auto [far2, path] = tree_farthest(g, far);
        (void)far2;
        if (path.size() > best.size())
            best = std::move(path);
    }
    return best;
}

// Subset DP over one component (n <= ~20): dp[mask][v] = path over mask ending at v.
int dp_longest(const Graph& g, const std::vector<int>& comp,
               int target, std::vector<int>* witness) {
    int n = static_cast<int>(comp.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i)
        local[comp[i]] = i;
    std::vector<std::vector<char>> dp(1u << n, std::vector<char>(n, 0));
    int best_len = 0;
    unsigned best_mask = 1;
    int best_end = 0;
    for (int i = 0; i < n; ++i)
        dp[1u << i][i] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        for (int v = 0; v < n; ++v) {
            if (!dp[mask][v])
                continue;
            int len = __builtin_popcount(mask) - 1;
            if (len > best_len) {
                best_len = len;
                best_mask = mask;
                best_end = v;
                if (target >= 0 && best_len >= target)
                    goto done;
            }
            for (int w : g.neighbors(comp[v])) {
                int lw = local[w];
                if (lw < 0 || (mask & (1u << lw)))
                    continue;
                dp[mask | (1u << lw)][lw] = 1;
            }
        }
    }
done:
    if (witness) {
        std::vector<int> path;
        unsigned mask = best_mask;
        int v = best_end;
        path.push_back(comp[v]);
        while (__builtin_popcount(mask) > 1) {
            unsigned pm = mask & ~(1u << v);
            bool moved = false;
            for (int w = 0; w < static_cast<int>(comp.size()) && !moved; ++w) {
                if (!(pm & (1u << w)) || !dp[pm][w])
                    continue;
                if (!g.has_edge(comp[v], comp[w]))
                    continue;
                mask = pm;
                v = w;
                path.push_back(comp[v]);
                moved = true;
            }
            if (!moved)
                break;
        }
        std::reverse(path.begin(), path.end());
        *witness = std::move(path);
    }
    return best_len;
}

struct DfsLongest {
    const Graph& g;
    long long budget;
    int target; // stop early when a path this long is found (-1: never)
    int best_len = 0;
    std::vector<int> best;
    std::vector<char> used;
    std::vector<int> path;

    bool bump() {
        if (--budget < 0)
            throw resource_error("longest-path search budget exhausted");
        return true;
    }

    // Upper bound: vertices still reachable from the endpoint.
    int reach_bound(int v) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{v};
        seen[v] = 1;
        int count = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++count;
            for (int w : g.neighbors(x))
                if (!seen[w] && !used[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return count; // includes v itself
    }

    bool dfs(int v) {
        bump();
        if (static_cast<int>(path.size()) - 1 > best_len) {
            best_len = static_cast<int>(path.size()) - 1;
            best = path;
            if (target >= 0 && best_len >= target)
                return true;
        }
        int max_possible = static_cast<int>(path.size()) - 1 + reach_bound(v) - 1;
        if (target >= 0 ? max_possible < target : max_possible <= best_len)
            return false;
        for (int w : g.neighbors(v)) {
            if (used[w])
                continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(w))
                return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

const int kDpLimit = 18;

} // namespace

std::optional<std::vector<int>> find_path_at_least(const Graph& g, int target) {
    if (target <= 0)
        return g.vertex_count() ? std::optional<std::vector<int>>(std::vector<int>{0})
                                : std::nullopt;
    if (is_forest(g)) {
        auto path = forest_longest_path(g);
        if (static_cast<int>(path.size()) - 1 >= target) {
            path.resize(target + 1);
            return path;
        }
        return std::nullopt;
    }
    auto comps = g.components();
    std::optional<std::vector<int>> best;
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) <= target)
            continue;
        if (static_cast<int>(comp.size()) <= kDpLimit) {
            std::vector<int> witness;
            if (dp_longest(g, comp, target, &witness) >= target) {
                witness.resize(target + 1);
                return witness;
            }
            continue;
        }
        DfsLongest search{g, guard_limit(50'000'000), target, 0, {},
                          std::vector<char>(g.vertex_count(), 0), {}};
        if (search.budget < 0)
            search.budget = (1LL << 62);
        for (int s : comp) {
            search.path = {s};
            std::fill(search.used.begin(), search.used.end(), 0);
            search.used[s] = 1;
            if (search.dfs(s) && search.best_len >= target) {
                search.best.resize(target + 1);
                return search.best;
            }
        }
    }
    return std::nullopt;
}

int longest_path_length(const Graph& g) {
    if (g.vertex_count() == 0)
        return 0;
    if (is_forest(g))
        return static_cast<int>(forest_longest_path(g).size()) - 1;
    int best = 0;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) <= best + 1)
            continue;
        if (static_cast<int>(comp.size()) <= kDpLimit) {
            best = std::max(best, dp_longest(g, comp, -1, nullptr));
            continue;
        }
        DfsLongest search{g, guard_limit(50'000'000), -1, 0, {},
                          std::vector<char>(g.vertex_count(), 0), {}};
        if (search.budget < 0)
            search.budget = (1LL << 62);
        for (int s : comp) {
            search.path = {s};
            std::fill(search.used.begin(), search.used.end(), 0);
            search.used[s] = 1;
            search.dfs(s);
        }
        best = std::max(best, search.best_len);
    }
    return best;
}

bool path_free(const Graph& g, int target) {
    return !find_path_at_least(g, target).has_value();
}

} // namespace staruniv
