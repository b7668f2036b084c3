#include "staruniv/staruniversal.hpp"

#include <algorithm>
#include <set>

#include "staruniv/isomorphism.hpp"
#include "staruniv/longpath.hpp"
#include "staruniv/serialize.hpp"
#include "staruniv/validate.hpp"

namespace staruniv {

ForbiddenSets::ForbiddenSets(StarPattern pattern, DecompositionParams params)
    : pattern_(std::move(pattern)), params_(std::move(params)) {
    int k = pattern_.leg_count();
    if (k < 3)
        throw precondition_error("pattern must have at least 3 legs");
    if (pattern_.leg(k - 3) > 1) // hypothesis: p_{k-2} = 1 (1-based)
        throw precondition_error("pattern outside hypothesis: p_{k-2} must be 1");
}

ColoredGraph ForbiddenSets::attach_tail(const ColoredGraph& h, int tail_length) {
    int root = -1;
    for (int v = 0; v < h.graph().vertex_count(); ++v)
        if (h.color(v) == 1) {
            if (root != -1)
                throw precondition_error("more than one color-1 vertex");
            root = v;
        }
    if (root == -1)
        throw precondition_error("no color-1 vertex");
    int n = h.graph().vertex_count();
    std::vector<Edge> edges = h.graph().edges();
    int prev = root;
    for (int i = 0; i < tail_length; ++i) {
        edges.push_back({prev, n + i});
        prev = n + i;
    }
    std::vector<int> colors = h.colors();
    colors.resize(n + tail_length, 0);
    return ColoredGraph(Graph(n + tail_length, std::move(edges)), std::move(colors));
}

const std::vector<ColoredGraph>& ForbiddenSets::x1() const {
    if (x1_built_)
        return x1_;
    x1_built_ = true;
    int limit = pattern_.vertex_count();
    std::set<std::string> seen;
    for (int n = 1; n <= limit; ++n) {
        for (const Graph& g : enumerate_graphs(n, /*connected_only=*/true)) {
            for (int root = 0; root < n; ++root) {
                std::vector<int> colors(n, 0);
                colors[root] = 1;
                ColoredGraph h(g, colors);
                std::string key = canonical_key(h);
                if (seen.count(key))
                    continue;
                ColoredGraph hbar = attach_tail(h, pattern_.max_leg());
                if (find_star(pattern_, hbar.graph())) {
                    seen.insert(key);
                    x1_.push_back(std::move(h));
                }
            }
        }
    }
    return x1_;
}

bool ForbiddenSets::x1_violation_by_list(const ColoredGraph& g) const {
    for (const ColoredGraph& h : x1())
        if (find_subgraph(h, g))
            return true;
    return false;
}

std::optional<ForbiddenSets::Violation> ForbiddenSets::check_component(const ColoredGraph& g,
                                                                       int n) const {
    const Graph& host = g.graph();
    if (!host.is_connected())
        return Violation{"structure", json{{"reason", "component not connected"}}};
    int root = -1;
    for (int v = 0; v < host.vertex_count(); ++v)
        if (g.color(v) == 1) {
            if (root != -1)
                return Violation{"x3", json{{"reason", "two color-1 vertices"},
                                            {"vertices", json::array({root, v})}}};
            root = v;
        } else if (g.color(v) != 0) {
            return Violation{"structure", json{{"reason", "colors must be 0/1"}}};
        }
    if (root == -1)
        return Violation{"structure", json{{"reason", "no color-1 vertex"}}};

    // star check: the component itself must avoid T (it joins a T-free union)
    if (auto w = find_star(pattern_, host)) {
        json cert;
        cert["centre"] = w->centre;
        cert["legs"] = w->legs;
        return Violation{"star", std::move(cert)};
    }
    // x1 via the tail query: T inside (component + p_k path at the root),
    // equivalent to an X1 member embedding once the component is T-free
    ColoredGraph tailed = attach_tail(g, pattern_.max_leg());
    if (auto w = find_star(pattern_, tailed.graph())) {
        json cert;
        cert["centre"] = w->centre;
        cert["legs"] = w->legs;
        cert["note"] = "witness in component plus attached tail";
        return Violation{"x1", std::move(cert)};
    }
    // x2: no path of length 8 p_k + 2m regardless of colors
    if (auto p = find_path_at_least(host, static_cast<int>(params_.part_path_bound))) {
        return Violation{"x2", json{{"path", *p}}};
    }
    // x3: with exactly one color-1 vertex there is no two-endpoint witness
    // x4^n: the color-1 vertex must have degree at most n
    if (host.degree(root) > n)
        return Violation{"x4", json{{"vertex", root}, {"degree", host.degree(root)}}};
    return std::nullopt;
}

ComponentRegistry::ComponentRegistry(std::shared_ptr<const ForbiddenSets> sets)
    : sets_(std::move(sets)) {}

ComponentRegistry::Admission ComponentRegistry::admit(const ColoredGraph& component) {
    int root = -1;
    for (int v = 0; v < component.graph().vertex_count(); ++v)
        if (component.color(v) == 1)
            root = v;
    if (root == -1)
        throw precondition_error("component needs a color-1 vertex");
    int n = component.graph().degree(root);
    if (auto violation = sets_->check_component(component, n)) {
        json cert;
        cert["family"] = violation->family;
        cert["certificate"] = violation->certificate;
        throw precondition_error("component violates the class predicate (" +
                                     violation->family + ")",
                                 cert);
    }
    CanonicalForm form = canonical_form(component);
    auto& bucket = buckets_[n];
    for (int i = 0; i < static_cast<int>(bucket.size()); ++i) {
        if (bucket[i].key == form.key) {
            auto iso = find_isomorphism(component, bucket[i].graph);
            return Admission{n, i, std::move(*iso)};
        }
    }
    int index = static_cast<int>(bucket.size());
    bucket.push_back({component, form.key, root});
    std::vector<int> identity(component.graph().vertex_count());
    for (int v = 0; v < static_cast<int>(identity.size()); ++v)
        identity[v] = v;
    return Admission{n, index, std::move(identity)};
}

const ColoredGraph* ComponentRegistry::component(int n, int index) const {
    auto it = buckets_.find(n);
    if (it == buckets_.end() || index < 0 || index >= static_cast<int>(it->second.size()))
        return nullptr;
    return &it->second[index].graph;
}

int ComponentRegistry::bucket_size(int n) const {
    auto it = buckets_.find(n);
    return it == buckets_.end() ? 0 : static_cast<int>(it->second.size());
}

int ComponentRegistry::color1_vertex(int n, int index) const {
    auto it = buckets_.find(n);
    if (it == buckets_.end() || index < 0 || index >= static_cast<int>(it->second.size()))
        throw precondition_error("no such component");
    return it->second[index].color1;
}

void ComponentRegistry::seed_defaults(int k) {
    for (int n = 0; n <= k - 2; ++n) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({0, i + 1});
        std::vector<int> colors(n + 1, 0);
        colors[0] = 1;
        admit(ColoredGraph(Graph(n + 1, std::move(edges)), std::move(colors)));
    }
}

json ComponentRegistry::to_json() const {
    json out = json::object();
    for (const auto& [n, bucket] : buckets_) {
        json list = json::array();
        for (const auto& stored : bucket)
            list.push_back(graph_to_json(stored.graph));
        out[std::to_string(n)] = std::move(list);
    }
    return out;
}

PlainRegistry::PlainRegistry(StarPattern pattern, long long forbidden_path_length)
    : pattern_(std::move(pattern)), path_bound_(forbidden_path_length) {}

PlainRegistry::Admission PlainRegistry::admit(const Graph& component) {
    if (!component.is_connected())
        throw precondition_error("component must be connected");
    if (auto w = find_star(pattern_, component)) {
        json cert;
        cert["centre"] = w->centre;
        cert["legs"] = w->legs;
        throw precondition_error("component contains the star", cert);
    }
    if (auto p = find_path_at_least(component, static_cast<int>(path_bound_)))
        throw precondition_error("component contains a long path", json{{"path", *p}});
    std::string key = canonical_key(component);
    for (int i = 0; i < static_cast<int>(components_.size()); ++i)
        if (components_[i].second == key) {
            auto iso = find_isomorphism(component, components_[i].first);
            return Admission{i, std::move(*iso)};
        }
    components_.push_back({component, std::move(key)});
    std::vector<int> identity(component.vertex_count());
    for (int v = 0; v < static_cast<int>(identity.size()); ++v)
        identity[v] = v;
    return Admission{static_cast<int>(components_.size()) - 1, std::move(identity)};
}

const Graph* PlainRegistry::component(int index) const {
    if (index < 0 || index >= static_cast<int>(components_.size()))
        return nullptr;
    return &components_[index].first;
}

int PlainRegistry::size() const { return static_cast<int>(components_.size()); }

Graph PlainRegistry::universe() const {
    Graph out(0, {});
    for (const auto& [g, key] : components_)
        out = disjoint_union(out, g);
    return out;
}

StarUniversalPrefix assemble(const StarPattern& pattern, const ColoredGraph& core,
                             ComponentRegistry& registry, bool allow_k3) {
    int k = pattern.leg_count();
    if (k < 4 && !allow_k3)
        throw precondition_error("k = 3 cores are only assembled behind the explicit flag");
    registry.seed_defaults(k);

    int core_n = core.graph().vertex_count();
    StarUniversalPrefix out;
    out.k3_caveat = k == 3;
    std::vector<Edge> edges = core.graph().edges();
    int next_id = core_n;
    std::vector<int> missing_demands;
    json demand_list = json::array();
    for (int v = 0; v < core_n; ++v) {
        out.core_vertices.push_back(v);
        out.colors.push_back(core.color(v));
        int n = k - 1 - core.graph().degree(v);
        if (n < 0) {
            if (k == 3)
                n = 0; // k = 3 caveat: rays can reach degree k - 1 before gluing
            else
                throw precondition_error("core vertex exceeds the degree bound");
        }
        const ColoredGraph* comp = registry.component(n, core.color(v));
        if (!comp) {
            demand_list.push_back(json{{"n", n}, {"c", core.color(v)}});
            continue;
        }
        int root = registry.color1_vertex(n, core.color(v));
        StarUniversalPrefix::Attachment att;
        att.core_vertex = v;
        att.n = n;
        att.index = core.color(v);
        att.component_vertices.resize(comp->graph().vertex_count());
        for (int w = 0; w < comp->graph().vertex_count(); ++w)
            att.component_vertices[w] = (w == root) ? v : next_id++;
        for (const auto& [a, b] : comp->graph().edges())
            edges.push_back({att.component_vertices[a], att.component_vertices[b]});
        out.attachments.push_back(std::move(att));
    }
    if (!demand_list.empty())
        throw precondition_error("registry is missing components for needed (n, c) pairs",
                                 demand_list);
    out.realized = Graph(next_id, std::move(edges));
    out.colors.resize(next_id, -1);
    if (auto w = find_star(pattern, out.realized)) {
        json cert;
        cert["centre"] = w->centre;
        cert["legs"] = w->legs;
        throw precondition_error("assembled prefix is not star-free", cert);
    }
    return out;
}

UniversalEmbedding embed_universal(const Graph& g, const StarPattern& pattern,
                                   const DecompositionParams& params,
                                   ComponentRegistry& registry) {
    int k = pattern.leg_count();
    UniversalEmbedding out;
    out.decomposition = decompose(g, pattern, params);
    const Decomposition& dec = out.decomposition;

    // core as a standalone graph
    std::vector<int> core_vertices = dec.core;
    std::vector<int> core_local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(core_vertices.size()); ++i)
        core_local[core_vertices[i]] = i;
    Graph core_graph = induced_subgraph(g, core_vertices);

    // admit every part (padded to color-1 degree n'(v)) and color the core
    std::vector<int> core_colors(core_graph.vertex_count(), 0);
    std::map<int, ComponentRegistry::Admission> admissions;
    std::map<int, std::vector<int>> part_vertices;   // attachment -> part vertex order
    std::map<int, ColoredGraph> padded_parts;
    registry.seed_defaults(k);
    for (const auto& [v, part] : dec.parts) {
        int lv = core_local[v];
        int n_prime = k - 1 - core_graph.degree(lv);
        out.n_prime[v] = n_prime;
        // part as a 2-graph rooted at v
        std::vector<int> verts = part;
        std::sort(verts.begin(), verts.end());
        Graph part_graph = induced_subgraph(g, verts);
        int root_local = static_cast<int>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        int d_root = part_graph.degree(root_local);
        if (d_root > n_prime)
            throw precondition_error("part degree exceeds n'(v) despite property (3)");
        // pad with pendant color-0 leaves at the root to reach degree n'
        int pn = part_graph.vertex_count();
        std::vector<Edge> pedges = part_graph.edges();
        for (int i = 0; i < n_prime - d_root; ++i)
            pedges.push_back({root_local, pn + i});
        std::vector<int> pcolors(pn + (n_prime - d_root), 0);
        pcolors[root_local] = 1;
        ColoredGraph padded(Graph(pn + (n_prime - d_root), std::move(pedges)),
                            std::move(pcolors));
        auto adm = registry.admit(padded);
        out.c_prime[v] = adm.index;
        core_colors[lv] = adm.index;
        part_vertices[v] = verts;
        padded_parts.emplace(v, std::move(padded));
        admissions.emplace(v, std::move(adm));
    }

    // embed the omega-colored core into the degree-bounded prefix
    ColoredGraph colored_core(core_graph, core_colors);
    SkFreePrefix prefix = build_prefix(std::max(k, 4), 1, 1);
    prefix.k = k; // the embedding only needs max degree <= k - 1
    SkFreeEmbedding core_emb = embed_skfree(colored_core, std::move(prefix), true);

    // registry consistency: degree preservation makes both equalities exact
    TouchedPrefix touched = materialize_touched(core_emb.prefix, core_emb.embedding);
    for (const auto& [v, part] : dec.parts) {
        int lv = core_local[v];
        int image_local = touched.embedding.vertex_map[lv];
        int image_degree = touched.graph.graph().degree(image_local);
        if (image_degree != core_graph.degree(lv))
            throw error("internal: degree preservation failed at vertex " + std::to_string(v));
        int n_at_image = k - 1 - image_degree;
        if (n_at_image != out.n_prime[v])
            throw error("internal: n'(v) != n(gamma*(v)) at vertex " + std::to_string(v));
        if (touched.graph.color(image_local) != out.c_prime[v])
            throw error("internal: c'(v) != c(gamma*(v)) at vertex " + std::to_string(v));
    }

    out.prefix = assemble(pattern, touched.graph, registry, k == 3);

    // compose the total embedding: core vertices via the core embedding,
    // part vertices via the admitted component copies
    out.embedding.vertex_map.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(core_vertices.size()); ++i)
        out.embedding.vertex_map[core_vertices[i]] = touched.embedding.vertex_map[i];

    // map realized component copies: attachment records are in core-vertex order
    std::map<int, const StarUniversalPrefix::Attachment*> attachment_at;
    for (const auto& att : out.prefix.attachments)
        attachment_at[att.core_vertex] = &att;

    for (const auto& [v, verts] : part_vertices) {
        int lv = core_local[v];
        int image_local = touched.embedding.vertex_map[lv];
        const auto* att = attachment_at.at(image_local);
        const auto& adm = admissions.at(v);
        // part vertex (local i in verts) -> padded local i -> rep vertex -> realized id
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
            int rep_vertex = adm.into_rep[i];
            int realized = att->component_vertices[rep_vertex];
            if (verts[i] == v) {
                if (realized != image_local)
                    throw error("internal: part root did not land on the core image");
                continue; // already mapped via the core
            }
            out.embedding.vertex_map[verts[i]] = realized;
        }
    }

    // edge paths: pattern edge order is g.edges()
    out.embedding.edge_paths.resize(g.edge_count());
    std::set<int> core_set(core_vertices.begin(), core_vertices.end());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (core_set.count(u) && core_set.count(v)) {
            int ce = core_graph.edge_index(core_local[u], core_local[v]);
            if (ce < 0)
                throw error("internal: core edge missing from induced core");
            std::vector<int> path = touched.embedding.edge_paths[ce];
            auto [cu, cv] = core_graph.edges()[ce];
            if (core_local[u] != cu)
                std::reverse(path.begin(), path.end());
            out.embedding.edge_paths[e] = std::move(path);
        } else {
            out.embedding.edge_paths[e] = {out.embedding.vertex_map[u],
                                           out.embedding.vertex_map[v]};
        }
    }

    auto problems = check_topological(g, out.prefix.realized, out.embedding);
    if (!problems.empty())
        throw error("internal: pipeline certificate failed validation: " + problems.front());
    return out;
}

ShortEmbedding embed_short(const Graph& g, PlainRegistry& registry) {
    std::vector<std::pair<std::vector<int>, PlainRegistry::Admission>> pieces;
    for (const auto& comp : g.components()) {
        Graph cg = induced_subgraph(g, comp);
        pieces.push_back({comp, registry.admit(cg)});
    }
    ShortEmbedding out;
    out.universe = registry.universe();
    std::vector<int> offsets(registry.size(), 0);
    int acc = 0;
    for (int i = 0; i < registry.size(); ++i) {
        offsets[i] = acc;
        acc += registry.component(i)->vertex_count();
    }
    out.embedding.vertex_map.assign(g.vertex_count(), -1);
    for (const auto& [comp, adm] : pieces)
        for (int i = 0; i < static_cast<int>(comp.size()); ++i)
            out.embedding.vertex_map[comp[i]] = offsets[adm.index] + adm.into_rep[i];
    return out;
}

Graph trivial_universal_prefix(int times, int n) {
    if (times < 1 || n < 1)
        throw precondition_error("parameters must be positive");
    Graph g = build_clique(n);
    std::vector<Edge> base = g.edges();
    for (const auto& [u, v] : base)
        g = subdivide_edge(g, u, v, times);
    return g;
}

} // namespace staruniv
