#include "staruniv/reduction.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "staruniv/connectivity.hpp"
#include "staruniv/validate.hpp"

namespace staruniv {

int BlownUpGraph::subdivider(int edge_index, int i) const {
    if (edge_index < 0 || edge_index >= base.edge_count() || i < 0 || i >= copies)
        throw precondition_error("subdivider index out of range");
    return base.vertex_count() + edge_index * copies + i;
}

BlownUpGraph blowup(const Graph& g, int copies) {
    if (copies < 1)
        throw precondition_error("copy count must be positive");
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        for (int i = 0; i < copies; ++i) {
            int mid = n + e * copies + i;
            edges.push_back({u, mid});
            edges.push_back({mid, v});
        }
    }
    return BlownUpGraph{g, copies, Graph(n + g.edge_count() * copies, std::move(edges))};
}

Graph derive_gamma_star(const Graph& g, int t) {
    if (t < 1)
        throw precondition_error("threshold must be positive");
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::min(g.degree(u), g.degree(v)) < t)
                continue; // cannot host t internally disjoint paths
            if (static_cast<int>(independent_paths(g, u, v, t).paths.size()) >= t)
                edges.push_back({u, v});
        }
    return Graph(n, std::move(edges));
}

namespace {

struct Suppressor {
    // adjacency over live original ids; chains[{u,v}] = inner suppressed ids from u to v
    std::vector<std::set<int>> adj;
    std::map<Edge, std::vector<int>> chains;
    std::vector<char> alive;

    std::vector<int> chain_between(int a, int b) {
        auto it = chains.find({std::min(a, b), std::max(a, b)});
        if (it == chains.end())
            return {};
        std::vector<int> c = it->second;
        if (a > b)
            std::reverse(c.begin(), c.end());
        return c; // oriented from a to b
    }

    void set_chain(int a, int b, std::vector<int> c) {
        if (a > b) {
            std::reverse(c.begin(), c.end());
            std::swap(a, b);
        }
        chains[{a, b}] = std::move(c);
    }

    void drop_chain(int a, int b) { chains.erase({std::min(a, b), std::max(a, b)}); }
};

} // namespace

SuppressionTrace suppress_degree_two_traced(const Graph& g) {
    int n = g.vertex_count();
    for (const auto& comp : g.components()) {
        bool all_two = !comp.empty();
        for (int v : comp)
            if (g.degree(v) != 2)
                all_two = false;
        if (all_two)
            throw structural_error("component is a bare cycle", comp);
    }
    Suppressor s;
    s.adj.resize(n);
    s.alive.assign(n, 1);
    for (const auto& [u, v] : g.edges()) {
        s.adj[u].insert(v);
        s.adj[v].insert(u);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (!s.alive[x] || s.adj[x].size() != 2)
                continue;
            auto it = s.adj[x].begin();
            int u = *it++;
            int v = *it;
            if (s.adj[u].count(v))
                throw structural_error("suppressing would create a parallel edge",
                                       {u, x, v});
            std::vector<int> chain = s.chain_between(u, x);
            chain.push_back(x);
            auto tail = s.chain_between(x, v);
            chain.insert(chain.end(), tail.begin(), tail.end());
            s.drop_chain(u, x);
            s.drop_chain(x, v);
            s.alive[x] = 0;
            s.adj[u].erase(x);
            s.adj[v].erase(x);
            s.adj[x].clear();
            s.adj[u].insert(v);
            s.adj[v].insert(u);
            s.set_chain(u, v, std::move(chain));
            changed = true;
        }
    }
    SuppressionTrace out;
    std::vector<int> local(n, -1);
    for (int v = 0; v < n; ++v)
        if (s.alive[v]) {
            local[v] = static_cast<int>(out.kept_vertices.size());
            out.kept_vertices.push_back(v);
        }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        if (s.alive[v])
            for (int w : s.adj[v])
                if (v < w)
                    edges.push_back({local[v], local[w]});
    out.graph = Graph(static_cast<int>(out.kept_vertices.size()), std::move(edges));
    out.edge_chains.resize(out.graph.edge_count());
    for (int e = 0; e < out.graph.edge_count(); ++e) {
        auto [lu, lv] = out.graph.edges()[e];
        out.edge_chains[e] = s.chain_between(out.kept_vertices[lu], out.kept_vertices[lv]);
    }
    return out;
}

Graph suppress_degree_two(const Graph& g) { return suppress_degree_two_traced(g).graph; }

namespace {

// Steiner-thin a branch set: spanning BFS tree of the induced set from the
// smallest terminal, then drop non-terminal leaves.
std::vector<int> thin_branch_set(const Graph& host, const std::vector<int>& set,
                                 const std::set<int>& terminals,
                                 std::vector<Edge>& tree_edges_out) {
    std::set<int> in(set.begin(), set.end());
    int root = terminals.empty() ? set[0] : *terminals.begin();
    std::map<int, int> parent;
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : host.neighbors(v))
            if (in.count(w) && !parent.count(w)) {
                parent[w] = v;
                q.push(w);
            }
    }
    std::set<int> keep;
    for (const auto& [v, p] : parent)
        keep.insert(v);
    // iteratively drop leaves that are not terminals
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(keep.begin(), keep.end())) {
            if (terminals.count(v) || v == root)
                continue;
            int deg = 0;
            if (parent[v] != -1 && keep.count(parent[v]))
                ++deg;
            for (const auto& [w, p] : parent)
                if (p == v && keep.count(w))
                    ++deg;
            if (deg <= 1) {
                keep.erase(v);
                changed = true;
            }
        }
    }
    for (int v : keep)
        if (parent[v] != -1 && keep.count(parent[v]))
            tree_edges_out.push_back({std::min(v, parent[v]), std::max(v, parent[v])});
    return {keep.begin(), keep.end()};
}

} // namespace

std::optional<PrunedModel> minimal_model(const Graph& pattern, const Graph& host) {
    auto model = find_minor(pattern, host);
    if (!model)
        return std::nullopt;
    int p = pattern.vertex_count();
    // one carrier cross edge per pattern edge: lexicographically smallest
    std::vector<Edge> cross(pattern.edge_count());
    std::vector<std::set<int>> terminals(p);
    for (int e = 0; e < pattern.edge_count(); ++e) {
        auto [y, z] = pattern.edges()[e];
        Edge bestEdge{-1, -1};
        for (int a : model->branch_sets[y])
            for (int b : model->branch_sets[z]) {
                if (!host.has_edge(a, b))
                    continue;
                Edge cand{std::min(a, b), std::max(a, b)};
                if (bestEdge.first == -1 || cand < bestEdge)
                    bestEdge = cand;
            }
        cross[e] = bestEdge;
        for (int x : {bestEdge.first, bestEdge.second}) {
            if (std::binary_search(model->branch_sets[y].begin(), model->branch_sets[y].end(), x))
                terminals[y].insert(x);
            else
                terminals[z].insert(x);
        }
    }
    PrunedModel out;
    out.model.branch_sets.resize(p);
    for (int z = 0; z < p; ++z)
        out.model.branch_sets[z] =
            thin_branch_set(host, model->branch_sets[z], terminals[z], out.carrier_edges);
    for (const Edge& e : cross)
        out.carrier_edges.push_back(e);
    std::sort(out.carrier_edges.begin(), out.carrier_edges.end());
    return out;
}

std::optional<TopMinorWitness> minor_to_topminor_witness(const Graph& pattern,
                                                         const Graph& host) {
    if (pattern.min_degree() < 3)
        throw precondition_error("pattern must have minimum degree at least 3");
    auto pruned = minimal_model(pattern, host);
    if (!pruned)
        return std::nullopt;

    // carrier as a standalone graph on host ids
    std::vector<int> carrier_vertices;
    for (const auto& s : pruned->model.branch_sets)
        carrier_vertices.insert(carrier_vertices.end(), s.begin(), s.end());
    std::sort(carrier_vertices.begin(), carrier_vertices.end());
    std::vector<int> local(host.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(carrier_vertices.size()); ++i)
        local[carrier_vertices[i]] = i;
    std::vector<Edge> local_edges;
    for (const auto& [u, v] : pruned->carrier_edges)
        local_edges.push_back({local[u], local[v]});
    Graph carrier(static_cast<int>(carrier_vertices.size()), std::move(local_edges));

    SuppressionTrace trace = suppress_degree_two_traced(carrier);

    TopMinorWitness out;
    out.y = trace.graph;
    out.y_in_host.vertex_map.resize(out.y.vertex_count());
    for (int v = 0; v < out.y.vertex_count(); ++v)
        out.y_in_host.vertex_map[v] = carrier_vertices[trace.kept_vertices[v]];
    out.y_in_host.edge_paths.resize(out.y.edge_count());
    for (int e = 0; e < out.y.edge_count(); ++e) {
        auto [u, v] = out.y.edges()[e];
        std::vector<int> path{out.y_in_host.vertex_map[u]};
        for (int inner : trace.edge_chains[e])
            path.push_back(carrier_vertices[inner]);
        path.push_back(out.y_in_host.vertex_map[v]);
        out.y_in_host.edge_paths[e] = std::move(path);
    }

    // branch sets of pattern inside y: surviving carrier vertices per set
    std::vector<int> carrier_to_y(carrier.vertex_count(), -1);
    for (int v = 0; v < out.y.vertex_count(); ++v)
        carrier_to_y[trace.kept_vertices[v]] = v;
    out.pattern_in_y.branch_sets.resize(pattern.vertex_count());
    for (int z = 0; z < pattern.vertex_count(); ++z)
        for (int hostv : pruned->model.branch_sets[z]) {
            int yv = carrier_to_y[local[hostv]];
            if (yv != -1)
                out.pattern_in_y.branch_sets[z].push_back(yv);
        }
    for (auto& s : out.pattern_in_y.branch_sets)
        std::sort(s.begin(), s.end());
    return out;
}

} // namespace staruniv
