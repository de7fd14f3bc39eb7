#include "ggt/median.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace ggt {

MedianGraph make_median_graph(int vertex_count, std::vector<std::pair<int, int>> edges)
{
    MedianGraph g;
    g.graph.adj.resize(vertex_count);
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("median graph: loops not allowed");
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("median graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) g.graph.add_edge(u, v);
    g.graph.adj.resize(vertex_count);
    g.graph.finalize();
    g.edges = std::move(edges);
    return g;
}

MedianGraph path_graph(int edge_count)
{
    if (edge_count < 0) throw std::invalid_argument("path_graph: negative length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
    return make_median_graph(edge_count + 1, std::move(edges));
}

MedianGraph cube_graph(int dimension)
{
    if (dimension < 0 || dimension > 20) throw std::invalid_argument("cube_graph: bad dimension");
    int n = 1 << dimension;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dimension; ++b)
            if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
    return make_median_graph(n, std::move(edges));
}

MedianGraph tripod_graph() { return spider_graph(3, 1); }

MedianGraph spider_graph(int legs, int leg_length)
{
    if (legs < 1 || leg_length < 1) throw std::invalid_argument("spider_graph: bad shape");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        int prev = 0;
        for (int step = 0; step < leg_length; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return make_median_graph(next, std::move(edges));
}

MedianGraph cycle_graph(int length)
{
    if (length < 3) throw std::invalid_argument("cycle_graph: length must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
    return make_median_graph(length, std::move(edges));
}

MedianGraph ladder_graph(int rungs)
{
    if (rungs < 1) throw std::invalid_argument("ladder_graph: need at least one rung");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rungs; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);  // rung
        if (i + 1 < rungs) {
            edges.emplace_back(2 * i, 2 * i + 2);
            edges.emplace_back(2 * i + 1, 2 * i + 3);
        }
    }
    return make_median_graph(2 * rungs, std::move(edges));
}

std::vector<int> interval(const MedianGraph& g, int u, int v)
{
    auto du = bfs_distances(g.graph, u);
    auto dv = bfs_distances(g.graph, v);
    if (du[v] == kUnreachable) throw std::invalid_argument("interval: endpoints not connected");
    std::vector<int> points;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] == du[v])
            points.push_back(x);
    return points;
}

MedianCheck is_median(const MedianGraph& g)
{
    if (!is_connected(g.graph)) throw std::invalid_argument("is_median: graph is disconnected");
    int n = g.vertex_count();
    auto dist = distance_matrix(g.graph);

    MedianCheck result;
    std::atomic<int> best_u{n};  // smallest u with a failing triple, for pruning
#pragma omp parallel for schedule(dynamic, 1)
    for (int u = 0; u < n; ++u) {
        if (u > best_u.load(std::memory_order_relaxed)) continue;
        for (int v = u; v < n; ++v) {
            for (int w = v; w < n; ++w) {
                int medians = 0;
                for (int x = 0; x < n; ++x) {
                    if (dist[u][x] + dist[x][v] == dist[u][v] &&
                        dist[v][x] + dist[x][w] == dist[v][w] &&
                        dist[u][x] + dist[x][w] == dist[u][w])
                        ++medians;
                }
                if (medians != 1) {
#pragma omp critical
                    {
                        std::array<int, 3> triple{u, v, w};
                        if (result.ok || triple < result.counterexample) {
                            result.ok = false;
                            result.counterexample = triple;
                            result.median_count = medians;
                        }
                        int seen = best_u.load(std::memory_order_relaxed);
                        while (u < seen && !best_u.compare_exchange_weak(seen, u)) {
                        }
                    }
                    v = w = n;  // smallest triple for this u found; move on
                }
            }
        }
    }
    return result;
}

std::vector<Hyperplane> hyperplanes(const MedianGraph& g)
{
    if (!is_connected(g.graph)) throw std::invalid_argument("hyperplanes: graph is disconnected");
    if (!is_bipartite(g.graph))
        throw std::invalid_argument("hyperplanes: graph is not bipartite, halfspaces undefined");

    int n = g.vertex_count();
    int m = g.edge_count();
    auto dist = distance_matrix(g.graph);

    // Partition induced by each edge, as a bitset normalized to vertex 0.
    std::vector<std::vector<std::uint64_t>> keys(m);
#pragma omp parallel for schedule(dynamic, 16)
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        std::vector<std::uint64_t> key((n + 63) / 64, 0);
        for (int x = 0; x < n; ++x)
            if (dist[x][u] < dist[x][v]) key[x / 64] |= std::uint64_t{1} << (x % 64);
        if (key[0] & 1)
            for (auto& word : key) word = ~word;
        if (int tail = n % 64; tail != 0) key.back() &= (std::uint64_t{1} << tail) - 1;
        keys[e] = std::move(key);
    }

    std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
    for (int e = 0; e < m; ++e) classes[keys[e]].push_back(e);

    std::vector<Hyperplane> planes;
    for (auto& [key, edge_ids] : classes) {
        Hyperplane h;
        h.id = static_cast<int>(planes.size());
        h.edge_ids = edge_ids;
        h.side.assign(n, 0);

        // Orient so that the smaller endpoint of the first class edge is minus.
        auto [u0, v0] = g.edges[edge_ids.front()];
        bool u0_bit = key[u0 / 64] >> (u0 % 64) & 1;
        for (int x = 0; x < n; ++x) {
            bool bit = key[x / 64] >> (x % 64) & 1;
            h.side[x] = (bit == u0_bit) ? -1 : 1;
        }
        for (int x = 0; x < n; ++x) (h.side[x] > 0 ? h.plus : h.minus).push_back(x);
        if (h.plus.empty() || h.minus.empty())
            throw std::invalid_argument("hyperplanes: degenerate halfspace");

        for (int e : edge_ids) {
            auto [u, v] = g.edges[e];
            if (h.side[u] == h.side[v])
                throw std::invalid_argument("hyperplanes: class edge inside one halfspace");
            h.support.push_back(u);
            h.support.push_back(v);
        }
        std::sort(h.support.begin(), h.support.end());
        h.support.erase(std::unique(h.support.begin(), h.support.end()), h.support.end());
        planes.push_back(std::move(h));
    }

    // Removing a class must split the graph into exactly its two
    // halfspaces: both halfspaces induce connected subgraphs and the only
    // crossing edges are the class's own.
    std::atomic<bool> split_halfspace{false}, stray_crossing{false};
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const auto& h = planes[i];
        if (induced_components(g.graph, h.plus).size() != 1 ||
            induced_components(g.graph, h.minus).size() != 1)
            split_halfspace = true;
        int crossing = 0;
        for (const auto& [u, v] : g.edges) crossing += (h.side[u] != h.side[v]);
        if (crossing != static_cast<int>(h.edge_ids.size())) stray_crossing = true;
    }
    if (split_halfspace)
        throw std::invalid_argument("hyperplanes: a halfspace is not connected");
    if (stray_crossing)
        throw std::invalid_argument("hyperplanes: an edge outside the class crosses it");
    return planes;
}

Relation relation(const Hyperplane& h, const Hyperplane& k)
{
    if (h.side == k.side || [&] {
            for (std::size_t x = 0; x < h.side.size(); ++x)
                if (h.side[x] == k.side[x]) return false;
            return true;
        }())
        throw std::invalid_argument("relation: hyperplanes are identical");

    bool pp = false, pm = false, mp = false, mm = false;
    for (std::size_t x = 0; x < h.side.size(); ++x) {
        (h.side[x] > 0 ? (k.side[x] > 0 ? pp : pm) : (k.side[x] > 0 ? mp : mm)) = true;
    }
    if (pp && pm && mp && mm) return Relation::Cross;
    if (!pm) return Relation::NestedPlusPlus;
    if (!pp) return Relation::NestedPlusMinus;
    if (!mm) return Relation::NestedMinusPlus;
    return Relation::NestedMinusMinus;
}

std::string relation_name(Relation rel)
{
    switch (rel) {
        case Relation::Cross: return "Cross";
        case Relation::NestedPlusPlus: return "NestedPlusPlus";
        case Relation::NestedPlusMinus: return "NestedPlusMinus";
        case Relation::NestedMinusPlus: return "NestedMinusPlus";
        case Relation::NestedMinusMinus: return "NestedMinusMinus";
    }
    return "?";
}

std::vector<std::array<int, 3>> facing_triples(const MedianGraph&,
                                               const std::vector<Hyperplane>& planes)
{
    int count = static_cast<int>(planes.size());

    // side_of[i][j]: where the support of plane j sits relative to plane i.
    std::vector<std::vector<char>> side_of(count, std::vector<char>(count, 0));
    std::vector<std::vector<char>> disjoint(count, std::vector<char>(count, 0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            bool plus = false, minus = false;
            for (int x : planes[j].support) (planes[i].side[x] > 0 ? plus : minus) = true;
            side_of[i][j] = plus && minus ? 0 : (plus ? 1 : -1);
            disjoint[i][j] = relation(planes[i], planes[j]) != Relation::Cross;
        }

    auto separates = [&](int i, int j, int k) {
        return side_of[i][j] * side_of[i][k] == -1;
    };

    std::vector<std::vector<std::array<int, 3>>> found(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (!disjoint[i][j]) continue;
            for (int k = j + 1; k < count; ++k) {
                if (!disjoint[i][k] || !disjoint[j][k]) continue;
                if (separates(i, j, k) || separates(j, i, k) || separates(k, i, j)) continue;
                found[i].push_back({i, j, k});
            }
        }
    }

    std::vector<std::array<int, 3>> triples;
    for (auto& part : found) triples.insert(triples.end(), part.begin(), part.end());
    return triples;
}

std::string median_graph_to_json(const MedianGraph& g)
{
    nlohmann::json j;
    j["schema"] = "ggt/median-graph/v1";
    j["vertex_count"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return j.dump(2) + "\n";
}

MedianGraph median_graph_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_median_graph(j.at("vertex_count").get<int>(), std::move(edges));
}

}  // namespace ggt
