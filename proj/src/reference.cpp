#include "ggt/reference.hpp"

#include <algorithm>
#include <map>

namespace ggt::reference {

std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g)
{
    std::vector<std::vector<int>> dist;
    dist.reserve(g.size());
    for (int s = 0; s < g.size(); ++s) dist.push_back(bfs_distances(g, s));
    return dist;
}

namespace {

std::vector<char> interval_mask(const MedianGraph& g, int u, int v)
{
    auto du = bfs_distances(g.graph, u);
    auto dv = bfs_distances(g.graph, v);
    std::vector<char> mask(g.vertex_count(), 0);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] == du[v]) mask[x] = 1;
    return mask;
}

}  // namespace

std::optional<std::array<int, 3>> median_violation(const MedianGraph& g)
{
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            auto uv = interval_mask(g, u, v);
            for (int w = v; w < n; ++w) {
                auto vw = interval_mask(g, v, w);
                auto uw = interval_mask(g, u, w);
                int medians = 0;
                for (int x = 0; x < n; ++x)
                    if (uv[x] && vw[x] && uw[x]) ++medians;
                if (medians != 1) return std::array<int, 3>{u, v, w};
            }
        }
    return std::nullopt;
}

std::vector<std::vector<int>> hyperplane_edge_classes(const MedianGraph& g)
{
    std::map<std::vector<char>, std::vector<int>> classes;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        auto du = bfs_distances(g.graph, u);
        auto dv = bfs_distances(g.graph, v);
        std::vector<char> side(g.vertex_count(), 0);
        for (int x = 0; x < g.vertex_count(); ++x) side[x] = du[x] < dv[x];
        if (side[0])
            for (auto& bit : side) bit = !bit;
        classes[side].push_back(e);
    }
    std::vector<std::vector<int>> result;
    for (auto& [side, edges] : classes) result.push_back(std::move(edges));
    return result;
}

std::vector<std::array<int, 3>> facing_triples(const MedianGraph& g,
                                               const std::vector<Hyperplane>& planes)
{
    int count = static_cast<int>(planes.size());
    auto quarters_nonempty = [&](const Hyperplane& a, const Hyperplane& b) {
        bool pp = false, pm = false, mp = false, mm = false;
        for (int x = 0; x < g.vertex_count(); ++x)
            (a.side[x] > 0 ? (b.side[x] > 0 ? pp : pm) : (b.side[x] > 0 ? mp : mm)) = true;
        return pp && pm && mp && mm;
    };
    auto side_of_support = [&](const Hyperplane& of, const Hyperplane& what) {
        bool plus = false, minus = false;
        for (int x : what.support) (of.side[x] > 0 ? plus : minus) = true;
        return plus && minus ? 0 : (plus ? 1 : -1);
    };

    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            if (quarters_nonempty(planes[i], planes[j])) continue;
            for (int k = j + 1; k < count; ++k) {
                if (quarters_nonempty(planes[i], planes[k]) ||
                    quarters_nonempty(planes[j], planes[k]))
                    continue;
                bool separated = false;
                for (auto [a, b, c] : {std::array{i, j, k}, {j, i, k}, {k, i, j}}) {
                    int sb = side_of_support(planes[a], planes[b]);
                    int sc = side_of_support(planes[a], planes[c]);
                    if (sb * sc == -1) separated = true;
                }
                if (!separated) triples.push_back({i, j, k});
            }
        }
    return triples;
}

std::vector<std::uint32_t> dual_orientations(const PocSet& p)
{
    int k = p.wall_count();
    std::vector<std::uint32_t> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool ok = true;
        for (int w1 = 0; w1 < k && ok; ++w1)
            for (int w2 = 0; w2 < k; ++w2) {
                if (w1 == w2) continue;
                int a = 2 * w1 + ((mask >> w1) & 1 ? 0 : 1);
                int c = 2 * w2 + ((mask >> w2) & 1 ? 0 : 1);
                if (p.leq(a, PocSet::complement(c))) {
                    ok = false;
                    break;
                }
            }
        if (ok) result.push_back(static_cast<std::uint32_t>(mask));
    }
    return result;
}

}  // namespace ggt::reference
