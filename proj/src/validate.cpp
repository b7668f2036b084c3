#include "staruniv/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace staruniv {

namespace {

void require(std::vector<std::string>& out, bool ok, const std::string& msg) {
    if (!ok)
        out.push_back(msg);
}

bool path_in(const Graph& g, const std::vector<int>& p) {
    if (p.empty())
        return false;
    std::set<int> seen;
    for (int v : p) {
        if (!g.has_vertex(v) || !seen.insert(v).second)
            return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1]))
            return false;
    return true;
}

} // namespace

std::vector<std::string> check_star_witness(const StarPattern& pattern, const Graph& host,
                                            const StarWitness& w) {
    std::vector<std::string> out;
    int k = pattern.leg_count();
    require(out, host.has_vertex(w.centre), "centre is not a host vertex");
    require(out, static_cast<int>(w.legs.size()) == k, "wrong number of legs");
    if (!out.empty())
        return out;
    std::set<int> used{w.centre};
    for (int i = 0; i < k; ++i) {
        const auto& leg = w.legs[i];
        require(out, static_cast<int>(leg.size()) == pattern.leg(i) + 1,
                "leg " + std::to_string(i) + " has wrong length");
        require(out, !leg.empty() && leg.front() == w.centre,
                "leg " + std::to_string(i) + " does not start at the centre");
        require(out, path_in(host, leg), "leg " + std::to_string(i) + " is not a host path");
        for (std::size_t j = 1; j < leg.size(); ++j)
            require(out, used.insert(leg[j]).second,
                    "legs overlap at vertex " + std::to_string(leg[j]));
    }
    return out;
}

namespace {

std::vector<std::string> check_embedding_impl(const Graph& pattern, const Graph& host,
                                              const Embedding& e,
                                              const std::vector<int>* pc,
                                              const std::vector<int>* hc) {
    std::vector<std::string> out;
    require(out, static_cast<int>(e.vertex_map.size()) == pattern.vertex_count(),
            "vertex map has wrong size");
    if (!out.empty())
        return out;
    std::set<int> image;
    for (int v = 0; v < pattern.vertex_count(); ++v) {
        int h = e.vertex_map[v];
        require(out, host.has_vertex(h), "image out of range");
        require(out, image.insert(h).second, "vertex map not injective at " + std::to_string(v));
        if (pc && host.has_vertex(h))
            require(out, (*pc)[v] == (*hc)[h], "color not preserved at " + std::to_string(v));
    }
    if (!out.empty())
        return out;
    for (const auto& [u, v] : pattern.edges())
        require(out, host.has_edge(e.vertex_map[u], e.vertex_map[v]),
                "adjacency not preserved for edge " + std::to_string(u) + "," +
                    std::to_string(v));
    return out;
}

std::vector<std::string> check_topological_impl(const Graph& pattern, const Graph& host,
                                                const TopologicalEmbedding& e,
                                                const std::vector<int>* pc,
                                                const std::vector<int>* hc) {
    std::vector<std::string> out;
    require(out, static_cast<int>(e.vertex_map.size()) == pattern.vertex_count(),
            "vertex map has wrong size");
    require(out, static_cast<int>(e.edge_paths.size()) == pattern.edge_count(),
            "edge path list has wrong size");
    if (!out.empty())
        return out;
    std::set<int> image;
    for (int v = 0; v < pattern.vertex_count(); ++v) {
        int h = e.vertex_map[v];
        require(out, host.has_vertex(h), "image out of range");
        require(out, image.insert(h).second, "vertex map not injective at " + std::to_string(v));
        if (pc && host.has_vertex(h))
            require(out, (*pc)[v] == (*hc)[h],
                    "branch color not preserved at " + std::to_string(v));
    }
    if (!out.empty())
        return out;
    std::set<int> inner_all;
    for (int i = 0; i < pattern.edge_count(); ++i) {
        auto [u, v] = pattern.edges()[i];
        const auto& p = e.edge_paths[i];
        std::string tag = "path for edge " + std::to_string(u) + "," + std::to_string(v);
        require(out, path_in(host, p), tag + " is not a host path");
        require(out, p.size() >= 2 && p.front() == e.vertex_map[u] && p.back() == e.vertex_map[v],
                tag + " has wrong endpoints");
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            require(out, !image.count(p[j]), tag + " passes through the image");
            require(out, inner_all.insert(p[j]).second,
                    tag + " shares inner vertex " + std::to_string(p[j]));
        }
    }
    return out;
}

} // namespace

std::vector<std::string> check_embedding(const Graph& pattern, const Graph& host,
                                         const Embedding& e) {
    return check_embedding_impl(pattern, host, e, nullptr, nullptr);
}

std::vector<std::string> check_embedding(const ColoredGraph& pattern, const ColoredGraph& host,
                                         const Embedding& e) {
    return check_embedding_impl(pattern.graph(), host.graph(), e, &pattern.colors(),
                                &host.colors());
}

std::vector<std::string> check_topological(const Graph& pattern, const Graph& host,
                                           const TopologicalEmbedding& e) {
    return check_topological_impl(pattern, host, e, nullptr, nullptr);
}

std::vector<std::string> check_topological(const ColoredGraph& pattern, const ColoredGraph& host,
                                           const TopologicalEmbedding& e) {
    return check_topological_impl(pattern.graph(), host.graph(), e, &pattern.colors(),
                                  &host.colors());
}

std::vector<std::string> check_minor_model(const Graph& pattern, const Graph& host,
                                           const MinorModel& m) {
    std::vector<std::string> out;
    require(out, static_cast<int>(m.branch_sets.size()) == pattern.vertex_count(),
            "wrong number of branch sets");
    if (!out.empty())
        return out;
    std::set<int> used;
    for (int z = 0; z < pattern.vertex_count(); ++z) {
        const auto& s = m.branch_sets[z];
        require(out, !s.empty(), "branch set " + std::to_string(z) + " empty");
        for (int v : s) {
            require(out, host.has_vertex(v), "branch set vertex out of range");
            require(out, used.insert(v).second,
                    "branch sets overlap at " + std::to_string(v));
        }
        // connectivity inside the host
        if (!s.empty()) {
            std::set<int> in(s.begin(), s.end());
            std::set<int> seen;
            std::vector<int> stack{s[0]};
            seen.insert(s[0]);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : host.neighbors(v))
                    if (in.count(w) && seen.insert(w).second)
                        stack.push_back(w);
            }
            require(out, seen.size() == in.size(),
                    "branch set " + std::to_string(z) + " not connected");
        }
    }
    for (const auto& [y, z] : pattern.edges()) {
        bool found = false;
        for (int a : m.branch_sets[y]) {
            for (int b : m.branch_sets[z])
                if (host.has_edge(a, b)) {
                    found = true;
                    break;
                }
            if (found)
                break;
        }
        require(out, found,
                "no host edge for pattern edge " + std::to_string(y) + "," + std::to_string(z));
    }
    return out;
}

std::vector<std::string> check_pruned_model(const Graph& pattern, const Graph& host,
                                            const MinorModel& m,
                                            const std::vector<Edge>& carrier_edges) {
    std::vector<std::string> out = check_minor_model(pattern, host, m);
    std::map<int, int> owner;
    for (int z = 0; z < static_cast<int>(m.branch_sets.size()); ++z)
        for (int v : m.branch_sets[z])
            owner[v] = z;
    std::map<std::pair<int, int>, int> cross_count;
    std::map<int, int> tree_edge_count;
    std::map<int, std::vector<int>> carrier_adj;
    for (const auto& [u, v] : carrier_edges) {
        require(out, host.has_edge(u, v), "carrier edge not a host edge");
        require(out, owner.count(u) && owner.count(v), "carrier edge leaves the model");
        if (!owner.count(u) || !owner.count(v))
            continue;
        int a = owner[u], b = owner[v];
        if (a == b) {
            tree_edge_count[a]++;
            carrier_adj[u].push_back(v);
            carrier_adj[v].push_back(u);
        } else {
            cross_count[{std::min(a, b), std::max(a, b)}]++;
        }
    }
    for (int z = 0; z < static_cast<int>(m.branch_sets.size()); ++z) {
        const auto& s = m.branch_sets[z];
        int sz = static_cast<int>(s.size());
        bool tree = tree_edge_count[z] == sz - 1;
        if (tree && sz > 0) { // right edge count + spanning connectivity = tree
            std::set<int> in(s.begin(), s.end()), seen{s[0]};
            std::vector<int> stack{s[0]};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : carrier_adj[v])
                    if (in.count(w) && seen.insert(w).second)
                        stack.push_back(w);
            }
            tree = seen.size() == in.size();
        }
        require(out, tree, "branch set " + std::to_string(z) + " carrier is not a tree");
    }
    for (const auto& [y, z] : pattern.edges())
        require(out, cross_count[{std::min(y, z), std::max(y, z)}] == 1,
                "pattern edge " + std::to_string(y) + "," + std::to_string(z) +
                    " needs exactly one carrier cross edge");
    for (const auto& [pair, cnt] : cross_count)
        require(out, pattern.has_edge(pair.first, pair.second),
                "carrier cross edge between non-adjacent branch sets " +
                    std::to_string(pair.first) + "," + std::to_string(pair.second));
    return out;
}

std::vector<std::string> check_cycle(const Graph& host, const std::vector<int>& cycle,
                                     int min_length) {
    std::vector<std::string> out;
    require(out, static_cast<int>(cycle.size()) >= 3, "cycle too short to be a cycle");
    require(out, static_cast<int>(cycle.size()) >= min_length,
            "cycle shorter than required length");
    if (!out.empty())
        return out;
    require(out, path_in(host, cycle), "cycle vertices do not form a host path");
    require(out, host.has_edge(cycle.back(), cycle.front()), "closing edge missing");
    return out;
}

} // namespace staruniv
