#include "staruniv/serialize.hpp"

#include <map>
#include <sstream>

#include "staruniv/containment.hpp"

namespace staruniv {

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

json graph_to_json(const ColoredGraph& g) {
    json j = graph_to_json(g.graph());
    j["colors"] = g.colors();
    return j;
}

std::string encode_json(const Graph& g) { return graph_to_json(g).dump(); }
std::string encode_json(const ColoredGraph& g) { return graph_to_json(g).dump(); }

namespace {

std::string dot_body(const Graph& g, const std::vector<int>* colors) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (colors)
            out << " [c=" << (*colors)[v] << "]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string encode_dot(const Graph& g) { return dot_body(g, nullptr); }

std::string encode_dot(const ColoredGraph& g) {
    const auto& colors = g.colors();
    return dot_body(g.graph(), &colors);
}

DecodedGraph graph_from_json(const json& j) {
    if (!j.is_object())
        throw precondition_error("graph document must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw precondition_error("missing or non-integer \"n\"");
    long long n = j["n"].get<long long>();
    if (n < 0 || n > (1LL << 26))
        throw precondition_error("vertex count out of range");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw precondition_error("missing \"edges\" array");
    std::vector<Edge> edges;
    Edge prev{-1, -1};
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw precondition_error("edge must be a pair of integers");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u < 0 || v >= n || u >= v)
            throw precondition_error("edge violates schema (need 0 <= u < v < n): [" +
                                     std::to_string(u) + "," + std::to_string(v) + "]");
        Edge cur{u, v};
        if (!(prev < cur))
            throw precondition_error("edges must be sorted lexicographically without duplicates");
        prev = cur;
        edges.push_back(cur);
    }
    DecodedGraph out{Graph(static_cast<int>(n), std::move(edges)), std::nullopt};
    if (j.contains("colors")) {
        if (!j["colors"].is_array() || static_cast<long long>(j["colors"].size()) != n)
            throw precondition_error("colors array must have length n");
        std::vector<int> colors;
        for (const auto& c : j["colors"]) {
            if (!c.is_number_integer() || c.get<long long>() < 0)
                throw precondition_error("colors must be non-negative integers");
            colors.push_back(c.get<int>());
        }
        out.colors = std::move(colors);
    }
    return out;
}

DecodedGraph decode(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("JSON parse error: ") + e.what(), e.byte);
    }
    return graph_from_json(j);
}

json star_witness_to_json(const StarWitness& w) {
    json out;
    out["centre"] = w.centre;
    out["legs"] = w.legs;
    return out;
}

StarWitness star_witness_from_json(const json& j) {
    StarWitness w;
    w.centre = j.at("centre").get<int>();
    for (const auto& leg : j.at("legs"))
        w.legs.push_back(leg.get<std::vector<int>>());
    return w;
}

json embedding_to_json(const Embedding& e) {
    json pairs = json::array();
    for (int v = 0; v < static_cast<int>(e.vertex_map.size()); ++v)
        pairs.push_back(json::array({v, e.vertex_map[v]}));
    json out;
    out["vertex_map"] = std::move(pairs);
    return out;
}

Embedding embedding_from_json(const json& j, int pattern_size) {
    Embedding e;
    e.vertex_map.assign(pattern_size, -1);
    for (const auto& pair : j.at("vertex_map")) {
        int p = pair.at(0).get<int>();
        if (p < 0 || p >= pattern_size)
            throw precondition_error("vertex map index out of range");
        e.vertex_map[p] = pair.at(1).get<int>();
    }
    return e;
}

json topological_to_json(const TopologicalEmbedding& e,
                         const std::vector<Edge>& pattern_edges) {
    json out;
    json pairs = json::array();
    for (int v = 0; v < static_cast<int>(e.vertex_map.size()); ++v)
        pairs.push_back(json::array({v, e.vertex_map[v]}));
    out["vertex_map"] = std::move(pairs);
    json paths = json::array();
    for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
        json entry;
        entry["edge"] = json::array({pattern_edges[i].first, pattern_edges[i].second});
        entry["path"] = e.edge_paths.at(i);
        paths.push_back(std::move(entry));
    }
    out["edge_paths"] = std::move(paths);
    return out;
}

TopologicalEmbedding topological_from_json(const json& j,
                                           const std::vector<Edge>& pattern_edges,
                                           int pattern_size) {
    TopologicalEmbedding e;
    e.vertex_map.assign(pattern_size, -1);
    for (const auto& pair : j.at("vertex_map")) {
        int p = pair.at(0).get<int>();
        if (p < 0 || p >= pattern_size)
            throw precondition_error("vertex map index out of range");
        e.vertex_map[p] = pair.at(1).get<int>();
    }
    std::map<Edge, std::vector<int>> by_edge;
    for (const auto& entry : j.at("edge_paths")) {
        int u = entry.at("edge").at(0).get<int>();
        int v = entry.at("edge").at(1).get<int>();
        by_edge[{std::min(u, v), std::max(u, v)}] = entry.at("path").get<std::vector<int>>();
    }
    for (const Edge& pe : pattern_edges) {
        auto it = by_edge.find(pe);
        if (it == by_edge.end())
            throw precondition_error("missing edge path");
        e.edge_paths.push_back(it->second);
    }
    return e;
}

json minor_model_to_json(const MinorModel& m) {
    json out;
    out["branch_sets"] = m.branch_sets;
    return out;
}

MinorModel minor_model_from_json(const json& j) {
    MinorModel m;
    for (const auto& s : j.at("branch_sets"))
        m.branch_sets.push_back(s.get<std::vector<int>>());
    return m;
}

} // namespace staruniv
