#include "staruniv/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "staruniv/longpath.hpp"
#include "staruniv/validate.hpp"

namespace staruniv {

bool BlockTree::is_cutvertex(int v) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

std::vector<int> BlockTree::blocks_of(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), v))
            out.push_back(i);
    return out;
}

BlockTree block_tree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> block_vertex_sets;
    std::vector<int> edge_block_prelim(g.edge_count(), -1);
    int timer = 0;

    // Iterative lowpoint DFS so deep corpora do not overflow the stack.
    struct Frame {
        int v, parent;
        std::size_t idx = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        if (g.degree(root) == 0) {
            block_vertex_sets.push_back({root}); // isolated vertex block
            disc[root] = timer++;
            continue;
        }
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (w == f.parent) {
                    // skip one parent occurrence only; simple graphs have one
                    continue;
                }
                if (disc[w] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty())
                    break;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (p.parent == -1)
                    ++root_children;
                if (low[done.v] >= disc[p.v]) {
                    // pop the block ending with edge (p.v, done.v)
                    std::set<int> verts;
                    int bid = static_cast<int>(block_vertex_sets.size());
                    while (!edge_stack.empty()) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.insert(e.first);
                        verts.insert(e.second);
                        edge_block_prelim[g.edge_index(e.first, e.second)] = bid;
                        if (e == Edge{p.v, done.v} || e == Edge{done.v, p.v})
                            break;
                    }
                    block_vertex_sets.emplace_back(verts.begin(), verts.end());
                    if (p.parent != -1 || root_children > 1)
                        is_cut[p.v] = 1;
                }
            }
        }
    }

    // sort blocks lexicographically, remapping the edge assignment
    std::vector<int> perm(block_vertex_sets.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return block_vertex_sets[a] < block_vertex_sets[b];
    });
    std::vector<int> rank(perm.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        rank[perm[i]] = i;
    BlockTree out;
    out.blocks.resize(block_vertex_sets.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        out.blocks[i] = std::move(block_vertex_sets[perm[i]]);
    out.edge_block.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        out.edge_block[e] = edge_block_prelim[e] == -1 ? -1 : rank[edge_block_prelim[e]];
    for (int v = 0; v < n; ++v)
        if (is_cut[v])
            out.cutvertices.push_back(v);
    for (int v : out.cutvertices)
        for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
            if (std::binary_search(out.blocks[b].begin(), out.blocks[b].end(), v))
                out.tree_edges.push_back({v, b});
    return out;
}

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() < 3 || !g.is_connected())
        return false;
    return block_tree(g).cutvertices.empty();
}

std::vector<std::string> check_path_family(const Graph& host, const PathFamily& fam) {
    std::vector<std::string> out;
    if (!host.has_vertex(fam.u) || !host.has_vertex(fam.v) || fam.u == fam.v) {
        out.push_back("invalid endpoints");
        return out;
    }
    std::set<int> inner_all;
    for (std::size_t i = 0; i < fam.paths.size(); ++i) {
        const auto& p = fam.paths[i];
        std::string tag = "path " + std::to_string(i);
        if (!is_valid_path(host, p)) {
            out.push_back(tag + " is not a host path");
            continue;
        }
        if (p.front() != fam.u || p.back() != fam.v)
            out.push_back(tag + " has wrong endpoints");
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (!inner_all.insert(p[j]).second)
                out.push_back(tag + " shares inner vertex " + std::to_string(p[j]));
    }
    return out;
}

namespace {

// Unit-capacity digraph for vertex-disjoint paths: every vertex except the
// endpoints is split into in/out halves joined by a capacity-1 arc.
struct FlowNet {
    int n;
    std::vector<std::vector<int>> adj; // arc ids per node
    std::vector<int> to;
    std::vector<int> cap;

    explicit FlowNet(int nodes) : n(nodes), adj(nodes) {}

    void add_arc(int a, int b, int c) {
        adj[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        adj[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    }

    // One BFS augmentation (Edmonds-Karp); deterministic by arc order.
    bool augment(int s, int t) {
        std::vector<int> pre(n, -1);
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int id : adj[v]) {
                if (cap[id] <= 0 || seen[to[id]])
                    continue;
                seen[to[id]] = 1;
                pre[to[id]] = id;
                q.push(to[id]);
            }
        }
        if (!seen[t])
            return false;
        for (int v = t; v != s;) {
            int id = pre[v];
            cap[id] -= 1;
            cap[id ^ 1] += 1;
            v = to[id ^ 1];
        }
        return true;
    }
};

} // namespace

PathFamily independent_paths(const Graph& g, int u, int v, int limit) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw precondition_error("endpoint out of range");
    if (u == v)
        throw precondition_error("endpoints must differ");
    if (limit < 1)
        throw precondition_error("limit must be positive");

    int n = g.vertex_count();
    // node ids: v_in = 2v, v_out = 2v+1; u and v are unsplit (in == out).
    FlowNet net(2 * n);
    auto in_node = [&](int x) { return 2 * x; };
    auto out_node = [&](int x) { return (x == u || x == v) ? 2 * x : 2 * x + 1; };
    for (int x = 0; x < n; ++x)
        if (x != u && x != v)
            net.add_arc(in_node(x), 2 * x + 1, 1);
    for (const auto& [a, b] : g.edges()) {
        net.add_arc(out_node(a), in_node(b), 1);
        net.add_arc(out_node(b), in_node(a), 1);
    }
    int flow = 0;
    while (flow < limit && net.augment(out_node(u), in_node(v)))
        ++flow;

    // Extract paths by walking saturated forward arcs from u.
    PathFamily fam{u, v, {}};
    std::vector<char> arc_used(net.to.size(), 0);
    for (int i = 0; i < flow; ++i) {
        std::vector<int> path{u};
        int node = out_node(u);
        while (node != in_node(v)) {
            bool advanced = false;
            for (int id : net.adj[node]) {
                if (id & 1)
                    continue; // reverse arc
                if (arc_used[id] || net.cap[id] != 0)
                    continue; // unsaturated
                arc_used[id] = 1;
                node = net.to[id];
                advanced = true;
                break;
            }
            if (!advanced)
                throw error("internal: flow decomposition failed");
            if (node % 2 == 0 && node != in_node(v)) {
                // arrived at some w_in; record w and hop over the split arc
                int w = node / 2;
                if (w != u)
                    path.push_back(w);
                node = out_node(w);
                if (w == u || w == v)
                    break;
                // mark the split arc used
                for (int id : net.adj[2 * w])
                    if (!(id & 1) && net.to[id] == 2 * w + 1) {
                        arc_used[id] = 1;
                        break;
                    }
            }
        }
        if (path.back() != v)
            path.push_back(v);
        fam.paths.push_back(std::move(path));
    }
    return fam;
}

std::optional<std::vector<int>> long_cycle(const Graph& g, int n) {
    if (n < 1)
        throw precondition_error("cycle target must be positive");
    if (!is_biconnected(g))
        throw precondition_error("not 2-connected");
    if (!find_path_at_least(g, n * n))
        throw precondition_error("no path of length " + std::to_string(n) + "^2");

    // Fast path: fundamental cycles of a DFS tree.
    int vc = g.vertex_count();
    std::vector<int> depth(vc, -1), parent(vc, -1);
    std::vector<int> order;
    std::function<void(int)> dfs = [&](int v) {
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (depth[w] == -1) {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                dfs(w);
            }
        }
    };
    depth[0] = 0;
    dfs(0);
    std::optional<std::vector<int>> best;
    for (const auto& [a, b] : g.edges()) {
        if (parent[a] == b || parent[b] == a)
            continue;
        int hi = depth[a] > depth[b] ? a : b;
        int lo = hi == a ? b : a;
        // back edges only: lo must be an ancestor of hi
        std::vector<int> chain;
        int x = hi;
        while (x != -1 && depth[x] >= depth[lo]) {
            chain.push_back(x);
            if (x == lo)
                break;
            x = parent[x];
        }
        if (chain.empty() || chain.back() != lo)
            continue;
        if (static_cast<int>(chain.size()) >= n &&
            (!best || chain.size() > best->size()))
            best = chain;
    }
    if (best)
        return best;

    // Exhaustive: DFS for a cycle of length >= n through each start vertex.
    for (int s = 0; s < vc; ++s) {
        std::vector<char> used(vc, 0);
        std::vector<int> path{s};
        used[s] = 1;
        std::function<bool()> search = [&]() -> bool {
            int cur = path.back();
            if (static_cast<int>(path.size()) >= n && static_cast<int>(path.size()) >= 3 &&
                g.has_edge(cur, s))
                return true;
            for (int w : g.neighbors(cur)) {
                if (used[w])
                    continue;
                used[w] = 1;
                path.push_back(w);
                if (search())
                    return true;
                path.pop_back();
                used[w] = 0;
            }
            return false;
        };
        if (search())
            return path;
    }
    return std::nullopt;
}

} // namespace staruniv
