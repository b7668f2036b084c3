#include "corpus.hpp"

namespace corpus {

using staruniv::Edge;
using staruniv::Graph;

Graph caterpillar_with_end_stars(int spine_len, int star_size) {
    std::vector<Edge> edges;
    for (int i = 0; i < spine_len; ++i)
        edges.push_back({i, i + 1});
    int next = spine_len + 1;
    for (int hub : {1, spine_len - 1})
        for (int s = 0; s < star_size; ++s)
            edges.push_back({hub, next++});
    return Graph(next, std::move(edges));
}

Graph caterpillar_with_leaves(int spine_len, testutil::Rng& rng, double leaf_prob) {
    std::vector<Edge> edges;
    for (int i = 0; i < spine_len; ++i)
        edges.push_back({i, i + 1});
    int next = spine_len + 1;
    for (int i = 1; i < spine_len; ++i)
        if (rng.chance(leaf_prob))
            edges.push_back({i, next++});
    return Graph(next, std::move(edges));
}

Graph broom(int handle_len, int bristles) {
    std::vector<Edge> edges;
    for (int i = 0; i < handle_len; ++i)
        edges.push_back({i, i + 1});
    int next = handle_len + 1;
    for (int s = 0; s < bristles; ++s)
        edges.push_back({handle_len, next++});
    return Graph(next, std::move(edges));
}

Graph triangle_bridges(int segment_len, int bridges) {
    // path segments joined by triangles; max degree 3
    std::vector<Edge> edges;
    int cur = 0;
    int next = 1;
    for (int b = 0; b < bridges; ++b) {
        for (int i = 0; i < segment_len; ++i) {
            edges.push_back({cur, next});
            cur = next++;
        }
        int apex = next++;
        int far = next++;
        edges.push_back({cur, apex});
        edges.push_back({apex, far});
        edges.push_back({cur, far});
        cur = far;
    }
    for (int i = 0; i < segment_len; ++i) {
        edges.push_back({cur, next});
        cur = next++;
    }
    return Graph(next, std::move(edges));
}

Graph long_cycle_instance(int length) { return staruniv::build_cycle(length); }

std::vector<Instance> build_corpus(const staruniv::StarPattern& pattern, long long threshold,
                                   int count, unsigned seed) {
    int k = pattern.leg_count();
    testutil::Rng rng(seed);
    std::vector<Instance> out;
    int len = static_cast<int>(threshold);
    int variant = 0;
    while (static_cast<int>(out.size()) < count) {
        int spine = len + rng.below(std::max(1, len / 2));
        switch (variant++ % 5) {
        case 0:
            out.push_back({"end-stars-" + std::to_string(out.size()),
                           caterpillar_with_end_stars(spine, 3 + rng.below(20))});
            break;
        case 1:
            if (k >= 4)
                out.push_back({"leafy-" + std::to_string(out.size()),
                               caterpillar_with_leaves(spine, rng, 0.3)});
            else
                out.push_back({"plain-path-" + std::to_string(out.size()),
                               staruniv::build_path(spine)});
            break;
        case 2:
            out.push_back(
                {"broom-" + std::to_string(out.size()), broom(spine, 2 + rng.below(10))});
            break;
        case 3:
            if (k >= 4)
                out.push_back({"bridges-" + std::to_string(out.size()),
                               triangle_bridges(spine / 3 + 1, 2 + rng.below(3))});
            else
                out.push_back({"cycle-" + std::to_string(out.size()),
                               long_cycle_instance(len + 1 + rng.below(len / 2 + 1))});
            break;
        default:
            out.push_back({"cycle-" + std::to_string(out.size()),
                           long_cycle_instance(len + 1 + rng.below(len / 2 + 1))});
            break;
        }
    }
    return out;
}

} // namespace corpus
