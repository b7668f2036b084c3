#include "staruniv/skfree.hpp"

#include <algorithm>
#include <set>

#include "staruniv/serialize.hpp"

namespace staruniv {

const IncidenceEnumeration::Entry& IncidenceEnumeration::entry(int j) const {
    if (j < 1 || j > size())
        throw precondition_error("enumeration index out of range");
    return entries_[j - 1];
}

int IncidenceEnumeration::index_for(std::vector<int> rays, int color) {
    std::sort(rays.begin(), rays.end());
    auto key = std::make_pair(rays, color);
    auto it = first_index_.find(key);
    if (it != first_index_.end())
        return it->second;
    int j = append(std::move(rays), color);
    return j;
}

int IncidenceEnumeration::append(std::vector<int> rays, int color) {
    std::sort(rays.begin(), rays.end());
    int j = static_cast<int>(entries_.size()) + 1;
    first_index_.emplace(std::make_pair(rays, color), j);
    entries_.push_back({std::move(rays), color});
    return j;
}

IncidenceEnumeration IncidenceEnumeration::figure1() {
    IncidenceEnumeration e;
    e.append({0, 1}, 0);
    e.append({0, 2}, 0);
    e.append({0, 1}, 0);
    e.append({1}, 0);
    e.append({0, 1, 2}, 0);
    return e;
}

long long SkFreePrefix::ray_vertex(int ray, int position) const {
    if (ray < 0 || ray >= ray_count || position < 1 || position > ray_length + 1)
        throw precondition_error("ray position out of range");
    return static_cast<long long>(ray) * (ray_length + 1) + (position - 1);
}

long long SkFreePrefix::attachment_vertex(int j) const {
    if (j < 1 || j > table.size())
        throw precondition_error("attachment index out of range");
    return static_cast<long long>(ray_count) * (ray_length + 1) + (j - 1);
}

long long SkFreePrefix::vertex_count() const {
    return static_cast<long long>(ray_count) * (ray_length + 1) + table.size();
}

ColoredGraph SkFreePrefix::realize() const {
    long long total = vertex_count();
    if (total > 2'000'000)
        throw resource_error("prefix too large to materialize fully");
    int n = static_cast<int>(total);
    std::vector<Edge> edges;
    for (int r = 0; r < ray_count; ++r)
        for (int pos = 1; pos <= ray_length; ++pos)
            edges.push_back({static_cast<int>(ray_vertex(r, pos)),
                             static_cast<int>(ray_vertex(r, pos + 1))});
    std::vector<int> colors(n, 0);
    for (int j = 1; j <= table.size(); ++j) {
        const auto& ent = table.entry(j);
        int vj = static_cast<int>(attachment_vertex(j));
        colors[vj] = ent.color;
        if (j > ray_length + 1)
            throw precondition_error("enumeration index " + std::to_string(j) +
                                     " exceeds realizable ray positions");
        for (int r : ent.rays) {
            if (r >= ray_count)
                throw precondition_error("enumeration entry uses ray " + std::to_string(r) +
                                         " beyond ray_count");
            edges.push_back({static_cast<int>(ray_vertex(r, j)), vj});
        }
    }
    return ColoredGraph(Graph(n, std::move(edges)), std::move(colors));
}

SkFreePrefix build_prefix(int k, int ray_count, int ray_length,
                          const IncidenceEnumeration* seed, bool locally_finite) {
    if (k < 3)
        throw precondition_error("k must be at least 3");
    if (ray_count < 1 || ray_length < 1)
        throw precondition_error("prefix dimensions must be positive");
    SkFreePrefix p;
    p.k = k;
    p.ray_count = ray_count;
    p.ray_length = ray_length;
    p.locally_finite = locally_finite;
    if (seed)
        p.table = *seed;
    for (int j = 1; j <= p.table.size(); ++j) {
        const auto& ent = p.table.entry(j);
        if (!locally_finite && static_cast<int>(ent.rays.size()) >= k)
            throw precondition_error("enumeration entry " + std::to_string(j) +
                                     " has too many rays for k");
    }
    return p;
}

SkFreeEmbedding embed_skfree(const ColoredGraph& g, SkFreePrefix prefix, bool auto_extend) {
    const Graph& host = g.graph();
    if (!host.is_connected() || host.vertex_count() < 3)
        throw precondition_error("graph must be connected with at least 3 vertices");
    if (!prefix.locally_finite && host.max_degree() > prefix.k - 1) {
        int bad = 0;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (host.degree(v) == host.max_degree())
                bad = v;
        auto witness = find_star(StarPattern::simple(prefix.k), host);
        json cert;
        if (witness) {
            cert["centre"] = witness->centre;
            cert["legs"] = witness->legs;
        }
        throw precondition_error("graph is not S_k-free: vertex " + std::to_string(bad) +
                                     " has degree " + std::to_string(host.max_degree()),
                                 cert);
    }

    int edge_count = host.edge_count();
    // incidence sets over the edge enumeration e_0, e_1, ... (lex order)
    std::vector<std::vector<int>> incident(host.vertex_count());
    for (int e = 0; e < edge_count; ++e) {
        auto [u, v] = host.edges()[e];
        incident[u].push_back(e);
        incident[v].push_back(e);
    }
    std::vector<int> consumed(host.vertex_count(), 0);
    int max_index = 0;
    for (int v = 0; v < host.vertex_count(); ++v) {
        consumed[v] = prefix.table.index_for(incident[v], g.color(v));
        max_index = std::max(max_index, consumed[v]);
    }
    int need_rays = edge_count;
    int need_length = std::max(max_index, 1);
    if (prefix.ray_count < need_rays || prefix.ray_length < need_length) {
        if (!auto_extend)
            throw resource_error("prefix too small; required rays=" + std::to_string(need_rays) +
                                 " len=" + std::to_string(need_length));
        prefix.ray_count = std::max(prefix.ray_count, need_rays);
        prefix.ray_length = std::max(prefix.ray_length, need_length);
    }

    TopologicalEmbedding emb;
    emb.vertex_map.resize(host.vertex_count());
    std::vector<long long> image(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v)
        image[v] = prefix.attachment_vertex(consumed[v]);
    // ids fit in int whenever the touched prefix is materializable; keep the
    // full-layout id inside the certificate as long long via the map below
    emb.edge_paths.resize(edge_count);
    for (int e = 0; e < edge_count; ++e) {
        auto [u, v] = host.edges()[e];
        int ju = consumed[u], jv = consumed[v];
        std::vector<long long> path{image[u]};
        if (ju <= jv) {
            for (int pos = ju; pos <= jv; ++pos)
                path.push_back(prefix.ray_vertex(e, pos));
        } else {
            for (int pos = ju; pos >= jv; --pos)
                path.push_back(prefix.ray_vertex(e, pos));
        }
        path.push_back(image[v]);
        emb.edge_paths[e].assign(path.begin(), path.end());
    }
    for (int v = 0; v < host.vertex_count(); ++v)
        emb.vertex_map[v] = static_cast<int>(image[v]);

    SkFreeEmbedding out;
    out.embedding = std::move(emb);
    out.prefix = std::move(prefix);
    out.consumed_index = std::move(consumed);
    return out;
}

std::pair<int, int> required_prefix(const ColoredGraph& g) {
    // replay the deterministic table consumption on a fresh table
    const Graph& host = g.graph();
    std::vector<std::vector<int>> incident(host.vertex_count());
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.edges()[e];
        incident[u].push_back(e);
        incident[v].push_back(e);
    }
    IncidenceEnumeration table;
    int max_index = 0;
    for (int v = 0; v < host.vertex_count(); ++v)
        max_index = std::max(max_index, table.index_for(incident[v], g.color(v)));
    return {host.edge_count(), max_index};
}

TouchedPrefix materialize_touched(const SkFreePrefix& prefix, const TopologicalEmbedding& emb) {
    TouchedPrefix out;
    std::set<long long> touched;
    for (int v : emb.vertex_map)
        touched.insert(v);
    for (const auto& p : emb.edge_paths)
        for (int x : p)
            touched.insert(x);
    long long attach_base = static_cast<long long>(prefix.ray_count) * (prefix.ray_length + 1);
    for (long long id : touched) {
        int local = static_cast<int>(out.original_ids.size());
        out.original_ids.push_back(id);
        out.local_ids[id] = local;
    }
    int n = static_cast<int>(out.original_ids.size());
    std::vector<int> colors(n, 0);
    std::vector<Edge> edges;
    out.is_attachment.assign(n, 0);
    out.attachment_index.assign(n, -1);
    for (int local = 0; local < n; ++local) {
        long long id = out.original_ids[local];
        if (id >= attach_base) {
            int j = static_cast<int>(id - attach_base) + 1;
            out.is_attachment[local] = 1;
            out.attachment_index[local] = j;
            colors[local] = prefix.table.entry(j).color;
            for (int r : prefix.table.entry(j).rays) {
                auto it = out.local_ids.find(prefix.ray_vertex(r, j));
                if (it != out.local_ids.end())
                    edges.push_back({local, it->second});
            }
        } else {
            // ray vertex: edge to successor position if touched
            int ray = static_cast<int>(id / (prefix.ray_length + 1));
            int pos = static_cast<int>(id % (prefix.ray_length + 1)) + 1;
            if (pos <= prefix.ray_length) {
                auto it = out.local_ids.find(prefix.ray_vertex(ray, pos + 1));
                if (it != out.local_ids.end())
                    edges.push_back({local, it->second});
            }
        }
    }
    out.graph = ColoredGraph(Graph(n, std::move(edges)), std::move(colors));
    out.embedding.vertex_map.reserve(emb.vertex_map.size());
    for (int v : emb.vertex_map)
        out.embedding.vertex_map.push_back(out.local_ids.at(v));
    for (const auto& p : emb.edge_paths) {
        std::vector<int> lp;
        for (int x : p)
            lp.push_back(out.local_ids.at(x));
        out.embedding.edge_paths.push_back(std::move(lp));
    }
    return out;
}

} // namespace staruniv
