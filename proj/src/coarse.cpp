#include "ggt/coarse.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace ggt {

namespace {

std::vector<int> annulus_vertices(const BallGraph& ball, int r)
{
    std::vector<int> subset;
    for (int v = 0; v < ball.size(); ++v)
        if (ball.sphere_of(v) > r) subset.push_back(v);
    return subset;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<int> normalized_classes(UnionFind& uf, int n, int* count)
{
    std::vector<int> label(n, -1), result(n);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int root = uf.find(v);
        if (label[root] == -1) label[root] = next++;
        result[v] = label[root];
    }
    if (count) *count = next;
    return result;
}

}  // namespace

EndsProfile ends_profile(const BallGraph& ball, const std::vector<int>& r_values)
{
    int R = ball.radius();
    EndsProfile profile{R, {}};
    for (int r : r_values) {
        if (r < 0 || r >= R - 1)
            throw std::invalid_argument("ends_profile: need 0 <= r < radius - 1");
        auto comps = induced_components(ball.simple_view(), annulus_vertices(ball, r));
        int deep = 0;
        for (const auto& comp : comps)
            if (std::any_of(comp.begin(), comp.end(),
                            [&](int v) { return ball.sphere_of(v) == R; }))
                ++deep;
        profile.counts.emplace_back(r, deep);
    }
    return profile;
}

std::vector<std::vector<int>> coarse_components(const BallGraph& ball,
                                                const std::vector<int>& subset, int mu)
{
    if (mu < 1) throw std::invalid_argument("coarse_components: mu must be >= 1");

    int k = static_cast<int>(subset.size());
    std::vector<std::vector<int>> rows(k);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < k; ++i) rows[i] = bfs_distances(ball.simple_view(), subset[i]);

    UnionFind uf(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = rows[i][subset[j]];
            if (d != kUnreachable && d <= mu) uf.unite(i, j);
        }

    std::vector<std::vector<int>> components;
    std::vector<int> comp_index(k, -1);
    for (int i = 0; i < k; ++i) {
        int root = uf.find(i);
        if (comp_index[root] == -1) {
            comp_index[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[comp_index[root]].push_back(subset[i]);
    }
    return components;
}

namespace {

// Unit vertex-capacity max flow (vertex split + BFS augmentation), used to
// pack vertex-disjoint chains from the inner collar to the outer collar.
struct ChainPacking {
    int count = 0;
    std::vector<std::vector<int>> chains;  // vertex indices into the ball
    std::vector<int> cut;                  // vertex cut certificate
};

ChainPacking pack_chains(const std::vector<int>& subset,
                         const std::vector<std::vector<int>>& mu_adjacency,
                         const std::vector<char>& is_source, const std::vector<char>& is_sink)
{
    int k = static_cast<int>(subset.size());
    int node_count = 2 * k + 2;
    int source = 2 * k, sink = 2 * k + 1;
    auto in_node = [](int i) { return 2 * i; };
    auto out_node = [](int i) { return 2 * i + 1; };

    struct Arc {
        int to, cap, flow = 0;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> head(node_count);
    auto add_arc = [&](int from, int to, int cap) {
        head[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        head[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    };

    int big = k + 1;
    for (int i = 0; i < k; ++i) {
        add_arc(in_node(i), out_node(i), 1);
        if (is_source[i]) add_arc(source, in_node(i), big);
        if (is_sink[i]) add_arc(out_node(i), sink, big);
        for (int j : mu_adjacency[i]) add_arc(out_node(i), in_node(j), big);
    }

    ChainPacking result;
    std::vector<int> parent_arc(node_count);
    while (true) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        std::queue<int> frontier;
        frontier.push(source);
        parent_arc[source] = -2;
        while (!frontier.empty() && parent_arc[sink] == -1) {
            int u = frontier.front();
            frontier.pop();
            for (int a : head[u]) {
                const Arc& arc = arcs[a];
                if (arc.cap - arc.flow > 0 && parent_arc[arc.to] == -1) {
                    parent_arc[arc.to] = a;
                    frontier.push(arc.to);
                }
            }
        }
        if (parent_arc[sink] == -1) break;
        for (int u = sink; u != source;) {
            int a = parent_arc[u];
            arcs[a].flow += 1;
            arcs[a ^ 1].flow -= 1;
            u = arcs[a ^ 1].to;
        }
        ++result.count;
    }

    // Chains: follow unit flow from each saturated source arc.
    std::vector<char> used(k, 0);
    for (int a : head[source]) {
        if ((a & 1) || arcs[a].flow <= 0) continue;
        std::vector<int> chain;
        int node = arcs[a].to;
        while (node != sink) {
            int i = node / 2;
            if (!used[i]) {
                used[i] = 1;
                chain.push_back(subset[i]);
            }
            int next = -1;
            for (int b : head[out_node(i)])
                if (!(b & 1) && arcs[b].flow > 0) {
                    arcs[b].flow -= 1;
                    next = arcs[b].to;
                    break;
                }
            if (next == -1) break;
            node = next;
        }
        result.chains.push_back(std::move(chain));
    }

    // Min cut: vertices whose in-node is residual-reachable but out-node
    // is not; by Menger this certifies maximality of the packing.
    std::vector<char> reached(node_count, 0);
    std::queue<int> frontier;
    frontier.push(source);
    reached[source] = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int a : head[u]) {
            const Arc& arc = arcs[a];
            if (arc.cap - arc.flow > 0 && !reached[arc.to]) {
                reached[arc.to] = 1;
                frontier.push(arc.to);
            }
        }
    }
    for (int i = 0; i < k; ++i)
        if (reached[in_node(i)] && !reached[out_node(i)]) result.cut.push_back(subset[i]);

    return result;
}

}  // namespace

NarrownessReport narrowness_profile(const BallGraph& ball, int mu, int r)
{
    if (mu < 1) throw std::invalid_argument("narrowness_profile: mu must be >= 1");
    if (r < 0 || r + mu >= ball.radius())
        throw std::invalid_argument("narrowness_profile: need r + mu < radius");

    int R = ball.radius();
    auto subset = annulus_vertices(ball, r);
    int k = static_cast<int>(subset.size());

    std::vector<std::vector<int>> rows(k);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < k; ++i) rows[i] = bfs_distances(ball.simple_view(), subset[i]);

    std::vector<std::vector<int>> mu_adjacency(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int d = rows[i][subset[j]];
            if (i != j && d != kUnreachable && d <= mu) mu_adjacency[i].push_back(j);
        }

    std::vector<char> is_source(k, 0), is_sink(k, 0);
    for (int i = 0; i < k; ++i) {
        int s = ball.sphere_of(subset[i]);
        if (s <= r + mu) is_source[i] = 1;
        if (s > R - mu) is_sink[i] = 1;
    }

    auto packing = pack_chains(subset, mu_adjacency, is_source, is_sink);

    NarrownessReport report;
    report.mu = mu;
    report.inner_radius = r;
    report.outer_radius = R;
    report.witness_count = packing.count;
    report.method = "max-flow chain packing (Menger certificate)";
    for (const auto& chain : packing.chains) {
        std::vector<RayPoint> witness;
        for (int v : chain) witness.push_back(ball.vertices()[v]);
        report.witnesses.push_back(std::move(witness));
    }
    for (int v : packing.cut) report.cut_certificate.push_back(ball.vertices()[v]);

    UnionFind uf(k);
    for (int i = 0; i < k; ++i)
        for (int j : mu_adjacency[i]) uf.unite(i, j);
    int comp_count = 0;
    normalized_classes(uf, k, &comp_count);
    report.coarse_component_count = comp_count;
    return report;
}

LinearGrowthCheck linear_growth_check(const GrowthTable& table)
{
    std::vector<std::pair<long long, long long>> ratios;  // |B(r)| / r for r >= 1
    for (const auto& [r, size] : table.entries)
        if (r >= 1) ratios.emplace_back(size, r);
    if (ratios.size() < 4)
        throw std::invalid_argument("linear_growth_check: need at least 4 radii");

    auto less = [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; };

    std::size_t tail_start = ratios.size() - ratios.size() / 4;
    auto prefix_max = *std::max_element(ratios.begin(), ratios.begin() + tail_start, less);
    auto tail_max = *std::max_element(ratios.begin() + tail_start, ratios.end(), less);
    auto total_max = std::max(prefix_max, tail_max, less);

    long long g = std::gcd(total_max.first, total_max.second);
    LinearGrowthCheck check;
    check.c_numerator = total_max.first / g;
    check.c_denominator = total_max.second / g;
    check.c_estimate = static_cast<double>(total_max.first) / static_cast<double>(total_max.second);
    check.holds = !less(prefix_max, tail_max);
    return check;
}

namespace {

struct SpanningTree {
    std::vector<int> parent;       // -1 at the basepoint
    std::vector<int> parent_move;  // 2*label (+), 2*label+1 (-)
    std::vector<Word> path;        // word from basepoint to vertex
};

// Deterministic BFS tree: parents chosen by (ray, position, move order).
SpanningTree spanning_tree(const BallGraph& ball)
{
    int n = ball.size();
    int move_count = 2 * static_cast<int>(ball.labels().size());
    SpanningTree tree{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<Word>(n)};

    for (int v = 0; v < n; ++v) {
        if (v == ball.basepoint_index() || ball.sphere_of(v) == 0) continue;
        int want = ball.sphere_of(v) - 1;
        int best = -1, best_move = -1;
        for (int m = 0; m < move_count; ++m) {
            int label = m / 2;
            int exponent = (m % 2 == 0) ? 1 : -1;
            // u --move--> v, so invert the move to look the parent up.
            int u = ball.move(v, label, -exponent);
            if (u < 0 || ball.sphere_of(u) != want) continue;
            if (best == -1 || ball.vertices()[u] < ball.vertices()[best]) {
                best = u;
                best_move = m;
            }
        }
        tree.parent[v] = best;
        tree.parent_move[v] = best_move;
    }

    // Fill paths in sphere order so parents are always ready.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(ball.sphere_of(a), a) < std::pair(ball.sphere_of(b), b);
    });
    for (int v : order) {
        if (tree.parent[v] < 0) continue;
        tree.path[v] = tree.path[tree.parent[v]];
        int m = tree.parent_move[v];
        tree.path[v].push_back({ball.labels()[m / 2], (m % 2 == 0) ? 1 : -1});
    }
    return tree;
}

Word inverse_word(const Word& w)
{
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->label, -it->exponent});
    return out;
}

Word free_reduce(Word w)
{
    Word out;
    for (auto& letter : w) {
        if (!out.empty() && out.back().label == letter.label &&
            out.back().exponent == -letter.exponent)
            out.pop_back();
        else
            out.push_back(std::move(letter));
    }
    return out;
}

}  // namespace

std::vector<Word> loop_words(const BallGraph& ball, int budget)
{
    if (budget < 0 || budget > 2 * ball.radius())
        throw std::invalid_argument("loop_words: budget must satisfy 0 <= budget <= 2*radius");

    auto tree = spanning_tree(ball);
    std::vector<Word> words;
    for (const auto& e : ball.edges()) {
        bool tree_edge = (tree.parent[e.dst] == e.src && tree.parent_move[e.dst] == 2 * e.label) ||
                         (tree.parent[e.src] == e.dst && tree.parent_move[e.src] == 2 * e.label + 1);
        if (tree_edge) continue;

        Word w = tree.path[e.src];
        w.push_back({ball.labels()[e.label], 1});
        auto back = inverse_word(tree.path[e.dst]);
        w.insert(w.end(), back.begin(), back.end());
        w = free_reduce(std::move(w));
        if (w.empty() || static_cast<int>(w.size()) > budget) continue;
        if (ball.follow_word(w, ball.basepoint_index()) != ball.basepoint_index())
            throw std::logic_error("loop word fails to fix the basepoint");
        words.push_back(std::move(w));
    }

    auto key = [](const Word& w) {
        std::string k;
        for (const auto& letter : w) k += letter.label + (letter.exponent > 0 ? "+" : "-");
        return std::pair(w.size(), k);
    };
    std::sort(words.begin(), words.end(),
              [&](const Word& a, const Word& b) { return key(a) < key(b); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

namespace {

std::vector<int> orbit_classes(const BallGraph& ball, int budget, int* count)
{
    auto words = loop_words(ball, budget);
    UnionFind uf(ball.size());
    for (const auto& w : words)
        for (int v = 0; v < ball.size(); ++v)
            if (auto image = ball.follow_word(w, v)) uf.unite(v, *image);
    return normalized_classes(uf, ball.size(), count);
}

}  // namespace

DoubleCosetPartition double_coset_orbits(const BallGraph& ball, int budget)
{
    if (ball.radius() < budget)
        throw std::invalid_argument("double_coset_orbits: ball radius must be >= budget");

    DoubleCosetPartition partition;
    partition.budget = budget;
    partition.class_of = orbit_classes(ball, budget, &partition.class_count);

    if (budget + 1 <= 2 * ball.radius()) {
        int next_count = 0;
        auto next = orbit_classes(ball, budget + 1, &next_count);
        partition.stable = (next == partition.class_of);
    } else {
        partition.stable = true;  // no longer words exist inside this ball
    }

    partition.trusted.resize(ball.size());
    for (int v = 0; v < ball.size(); ++v)
        partition.trusted[v] = ball.sphere_of(v) + budget <= ball.radius();
    return partition;
}

CommensuratorProbe commensurator_probe(const BallGraph& ball, const Word& g, int budget)
{
    auto start = ball.follow_word(g, ball.basepoint_index());
    if (!start) throw std::invalid_argument("commensurator_probe: word leaves the ball");

    auto partition = double_coset_orbits(ball, budget);
    int cls = partition.class_of[*start];

    CommensuratorProbe probe;
    probe.start = ball.vertices()[*start];
    int R = ball.radius();
    probe.image_sizes.assign(R, 0);
    for (int v = 0; v < ball.size(); ++v) {
        if (partition.class_of[v] != cls) continue;
        for (int r = std::max(1, ball.sphere_of(v)); r <= R; ++r) ++probe.image_sizes[r - 1];
    }

    probe.verdict = ProbeVerdict::BoundedSoFar;
    for (int r = R - R / 4 + 1; r <= R; ++r)
        if (probe.image_sizes[r - 1] > probe.image_sizes[r - 2])
            probe.verdict = ProbeVerdict::GrowingSoFar;
    return probe;
}

CosetDistanceResult coset_distance_probe(const BallGraph& ball, const Word& g, int D, int budget)
{
    if (ball.radius() <= D + static_cast<int>(g.size()))
        throw std::invalid_argument("coset_distance_probe: radius must exceed D + |g|");

    auto start = ball.follow_word(g, ball.basepoint_index());
    if (!start) throw std::invalid_argument("coset_distance_probe: word leaves the ball");

    auto partition = double_coset_orbits(ball, budget);
    int cls = partition.class_of[*start];
    int best = ball.radius() + 1;
    for (int v = 0; v < ball.size(); ++v)
        if (partition.class_of[v] == cls) best = std::min(best, ball.sphere_of(v));

    CosetDistanceResult result;
    result.trusted = D + budget <= ball.radius();
    if (best <= D) {
        result.exact = true;
        result.value = best;
    } else {
        result.exact = false;
        result.value = D;
    }
    return result;
}

namespace {

nlohmann::json point_json(const RayPoint& p) { return {p.ray, p.position}; }

nlohmann::json point_list_json(const std::vector<RayPoint>& points)
{
    auto arr = nlohmann::json::array();
    for (const auto& p : points) arr.push_back(point_json(p));
    return arr;
}

}  // namespace

std::string ends_to_json(const EndsProfile& profile)
{
    nlohmann::json j;
    j["schema"] = "ggt/ends/v1";
    j["R"] = profile.radius;
    auto& counts = j["counts"] = nlohmann::json::array();
    for (const auto& [r, deep] : profile.counts) counts.push_back({{"r", r}, {"deep", deep}});
    return j.dump(2) + "\n";
}

std::string narrowness_to_json(const NarrownessReport& report, const BallGraph& ball)
{
    nlohmann::json j;
    j["schema"] = "ggt/narrowness/v1";
    j["mu"] = report.mu;
    j["r"] = report.inner_radius;
    j["R"] = report.outer_radius;
    j["basepoint"] = point_json(ball.basepoint());
    j["witness_count"] = report.witness_count;
    j["method"] = report.method;
    j["coarse_components"] = report.coarse_component_count;
    auto& witnesses = j["witnesses"] = nlohmann::json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(point_list_json(w));
    j["cut_certificate"] = point_list_json(report.cut_certificate);
    return j.dump(2) + "\n";
}

std::string growth_check_to_json(const LinearGrowthCheck& check, const GrowthTable& table)
{
    nlohmann::json j;
    j["schema"] = "ggt/growth/v1";
    j["R"] = table.entries.empty() ? 0 : table.entries.back().first;
    j["c_estimate"] = {{"num", check.c_numerator}, {"den", check.c_denominator}};
    j["c_value"] = check.c_estimate;
    j["holds"] = check.holds;
    j["note"] = "evidence at this scale, not a proof";
    auto& sizes = j["sizes"] = nlohmann::json::array();
    for (const auto& [r, size] : table.entries) sizes.push_back(size);
    return j.dump(2) + "\n";
}

std::string double_cosets_to_json(const DoubleCosetPartition& partition, const BallGraph& ball)
{
    nlohmann::json j;
    j["schema"] = "ggt/double-cosets/v1";
    j["R"] = ball.radius();
    j["budget"] = partition.budget;
    j["stable"] = partition.stable;
    j["class_count"] = partition.class_count;
    std::vector<long long> sizes(partition.class_count, 0);
    for (int v = 0; v < ball.size(); ++v) ++sizes[partition.class_of[v]];
    j["class_sizes"] = sizes;
    j["basepoint_class_size"] = sizes[partition.class_of[ball.basepoint_index()]];
    j["classes"] = partition.class_of;
    auto& trusted = j["trusted"] = nlohmann::json::array();
    for (char t : partition.trusted) trusted.push_back(static_cast<bool>(t));
    return j.dump(2) + "\n";
}

std::string comm_probe_to_json(const CommensuratorProbe& probe, const BallGraph& ball, int budget)
{
    nlohmann::json j;
    j["schema"] = "ggt/comm-probe/v1";
    j["R"] = ball.radius();
    j["budget"] = budget;
    j["trusted_radius"] = std::max(0, ball.radius() - budget);
    j["start"] = point_json(probe.start);
    j["image_sizes"] = probe.image_sizes;
    j["verdict"] =
        probe.verdict == ProbeVerdict::GrowingSoFar ? "GrowingSoFar" : "BoundedSoFar";
    return j.dump(2) + "\n";
}

std::string coset_distance_to_json(const CosetDistanceResult& result, const BallGraph& ball,
                                   const Word& g, int D, int budget)
{
    nlohmann::json j;
    j["schema"] = "ggt/coset-distance/v1";
    j["R"] = ball.radius();
    j["budget"] = budget;
    j["D"] = D;
    j["word"] = format_word(g);
    j["exact"] = result.exact;
    j[result.exact ? "distance" : "at_least"] = result.value;
    j["trusted"] = result.trusted;
    return j.dump(2) + "\n";
}

}  // namespace ggt
