#include "staruniv/graph.hpp"

#include <algorithm>
#include <numeric>

namespace staruniv {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0)
        throw precondition_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw structural_error("loop at vertex " + std::to_string(u), {u});
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n_)
            throw precondition_error("edge endpoint out of range: " + std::to_string(u) +
                                     "," + std::to_string(v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v))
        throw precondition_error("unknown vertex " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v)
        return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0)
        return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_)
        d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::edge_index(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : adj_[v])
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

ColoredGraph::ColoredGraph(Graph graph, std::vector<int> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != graph_.vertex_count())
        throw precondition_error("color array length mismatch");
    for (int c : colors_)
        if (c < 0)
            throw precondition_error("negative color");
}

int ColoredGraph::color(int v) const {
    if (!graph_.has_vertex(v))
        throw precondition_error("unknown vertex " + std::to_string(v));
    return colors_[v];
}

bool ColoredGraph::two_colored() const {
    for (int c : colors_)
        if (c > 1)
            return false;
    return true;
}

Graph build_path(int n) {
    if (n < 0)
        throw precondition_error("path length must be non-negative");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n + 1, std::move(edges));
}

Graph build_cycle(int n) {
    if (n < 3)
        throw precondition_error("cycle length must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph build_clique(int n) {
    if (n < 0)
        throw precondition_error("clique size must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph build_complete_bipartite(int n, int m) {
    if (n < 0 || m < 0)
        throw precondition_error("bipartition sizes must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v)
            edges.push_back({u, n + v});
    return Graph(n + m, std::move(edges));
}

Graph subdivide_edge(const Graph& g, int u, int v, int times) {
    if (times < 0)
        throw precondition_error("negative subdivision count");
    if (!g.has_edge(u, v))
        throw precondition_error("edge not in graph: " + std::to_string(u) + "," +
                                 std::to_string(v));
    if (times == 0)
        return g;
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)})
            edges.push_back(e);
    int prev = u;
    for (int i = 0; i < times; ++i) {
        edges.push_back({prev, n + i});
        prev = n + i;
    }
    edges.push_back({prev, v});
    return Graph(n + times, std::move(edges));
}

Graph star_at(const Graph& g, int v) {
    const auto& nb = g.neighbors(v); // validates v
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(nb.size()); ++i)
        edges.push_back({0, i + 1});
    return Graph(1 + static_cast<int>(nb.size()), std::move(edges));
}

bool is_valid_path(const Graph& g, const std::vector<int>& path) {
    if (path.empty())
        return false;
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : path)
        if (!g.has_vertex(v))
            return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            return false;
    return true;
}

bool is_x_path(const Graph& g, const std::vector<int>& path, const std::vector<int>& x) {
    if (!is_valid_path(g, path))
        throw precondition_error("not a path of the host");
    if (path.size() < 2)
        throw precondition_error("trivial path rejected");
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    auto in_x = [&](int v) { return std::binary_search(xs.begin(), xs.end(), v); };
    if (!in_x(path.front()) || !in_x(path.back()))
        return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (in_x(path[i]))
            return false;
    return true;
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (!g.has_vertex(v))
            throw precondition_error("unknown vertex " + std::to_string(v));
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        local[vertices[i]] = i;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0)
            edges.push_back({local[u], local[v]});
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    int off = a.vertex_count();
    for (const auto& [u, v] : b.edges())
        edges.push_back({u + off, v + off});
    return Graph(off + b.vertex_count(), std::move(edges));
}

} // namespace staruniv
