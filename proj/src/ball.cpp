#include "ggt/ball.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ggt {

BallGraph::BallGraph(RayPoint basepoint, int radius, std::vector<std::string> labels,
                     std::vector<RayPoint> vertices, std::vector<int> sphere,
                     std::vector<LabeledEdge> edges)
    : basepoint_(basepoint),
      radius_(radius),
      labels_(std::move(labels)),
      vertices_(std::move(vertices)),
      sphere_(std::move(sphere)),
      edges_(std::move(edges))
{
    if (radius_ < 0) throw std::invalid_argument("ball radius must be >= 0");
    if (vertices_.size() != sphere_.size())
        throw std::invalid_argument("sphere table size mismatch");

    index_.reserve(vertices_.size());
    for (int v = 0; v < size(); ++v) index_.emplace(vertices_[v], v);
    auto base = index_.find(basepoint_);
    if (base == index_.end()) throw std::invalid_argument("basepoint missing from vertex set");
    basepoint_index_ = base->second;

    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    simple_.adj.resize(vertices_.size());
    out_.assign(labels_.size(), std::vector<int>(vertices_.size(), -1));
    in_.assign(labels_.size(), std::vector<int>(vertices_.size(), -1));
    for (const auto& e : edges_) {
        if (e.src != e.dst) simple_.add_edge(e.src, e.dst);
        out_[e.label][e.src] = e.dst;
        in_[e.label][e.dst] = e.src;
    }
    simple_.adj.resize(vertices_.size());
    simple_.finalize();
}

std::optional<int> BallGraph::index_of(const RayPoint& p) const
{
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int BallGraph::move(int v, int label, int exponent) const
{
    return exponent > 0 ? out_[label][v] : in_[label][v];
}

std::optional<int> BallGraph::follow_word(const Word& w, int v) const
{
    for (const auto& letter : w) {
        auto label = std::find(labels_.begin(), labels_.end(), letter.label);
        if (label == labels_.end())
            throw std::invalid_argument("word uses unknown label '" + letter.label + "'");
        v = move(v, static_cast<int>(label - labels_.begin()), letter.exponent);
        if (v < 0) return std::nullopt;
    }
    return v;
}

BallGraph build_ball(const MarkedAction& action, RayPoint basepoint, int radius)
{
    if (radius < 0) throw std::invalid_argument("build_ball: radius must be >= 0");
    if (basepoint.ray < 1 || basepoint.ray > action.ray_count || basepoint.position < 1)
        throw std::invalid_argument("build_ball: basepoint outside the point set");

    std::vector<HoughtonElement> forward, backward;
    std::vector<std::string> labels;
    for (const auto& [label, element] : action.generators) {
        labels.push_back(label);
        forward.push_back(element);
        backward.push_back(invert(element));
    }

    std::unordered_map<RayPoint, int> dist;
    dist.emplace(basepoint, 0);
    std::queue<RayPoint> frontier;
    frontier.push(basepoint);
    while (!frontier.empty()) {
        RayPoint p = frontier.front();
        frontier.pop();
        int d = dist.at(p);
        if (d == radius) continue;
        for (std::size_t s = 0; s < forward.size(); ++s) {
            for (const auto* element : {&forward[s], &backward[s]}) {
                RayPoint q = element->apply(p);
                if (dist.emplace(q, d + 1).second) frontier.push(q);
            }
        }
    }

    std::vector<RayPoint> vertices;
    vertices.reserve(dist.size());
    for (const auto& [p, d] : dist) vertices.push_back(p);
    std::sort(vertices.begin(), vertices.end());

    std::unordered_map<RayPoint, int> index;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) index.emplace(vertices[v], v);

    std::vector<int> sphere(vertices.size());
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) sphere[v] = dist.at(vertices[v]);

    std::vector<LabeledEdge> edges;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        for (std::size_t s = 0; s < forward.size(); ++s) {
            RayPoint q = forward[s].apply(vertices[v]);
            if (auto it = index.find(q); it != index.end())
                edges.push_back({v, static_cast<int>(s), it->second});
        }
    }

    return BallGraph(basepoint, radius, std::move(labels), std::move(vertices),
                     std::move(sphere), std::move(edges));
}

GrowthTable growth_table(const BallGraph& ball)
{
    std::vector<long long> per_sphere(ball.radius() + 1, 0);
    for (int v = 0; v < ball.size(); ++v) ++per_sphere[ball.sphere_of(v)];

    GrowthTable table;
    long long total = 0;
    for (int r = 0; r <= ball.radius(); ++r) {
        total += per_sphere[r];
        table.entries.emplace_back(r, total);
    }
    return table;
}

std::optional<DistanceResult> graph_distance(const BallGraph& ball, const RayPoint& u,
                                             const RayPoint& v)
{
    auto ui = ball.index_of(u);
    auto vi = ball.index_of(v);
    if (!ui || !vi) return std::nullopt;
    auto dist = bfs_distances(ball.simple_view(), *ui);
    if (dist[*vi] == kUnreachable) return std::nullopt;
    int d = dist[*vi];
    // A shorter path through the missing exterior would stay within
    // min(sphere) + d of the basepoint, so inside radius means exact.
    bool exact = std::min(ball.sphere_of(*ui), ball.sphere_of(*vi)) + d <= ball.radius();
    return DistanceResult{d, exact};
}

std::string ball_to_json(const BallGraph& ball)
{
    nlohmann::json j;
    j["schema"] = "ggt/ball/v1";
    j["basepoint"] = {ball.basepoint().ray, ball.basepoint().position};
    j["radius"] = ball.radius();
    j["labels"] = ball.labels();
    auto& vertices = j["vertices"] = nlohmann::json::array();
    for (const auto& p : ball.vertices()) vertices.push_back({p.ray, p.position});
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& e : ball.edges())
        edges.push_back({e.src, ball.labels()[e.label], e.dst});
    j["spheres"] = ball.spheres();
    return j.dump(2) + "\n";
}

BallGraph ball_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    RayPoint basepoint{j.at("basepoint").at(0).get<int>(), j.at("basepoint").at(1).get<int>()};
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();

    std::vector<RayPoint> vertices;
    for (const auto& v : j.at("vertices"))
        vertices.push_back({v.at(0).get<int>(), v.at(1).get<int>()});

    std::vector<LabeledEdge> edges;
    for (const auto& e : j.at("edges")) {
        auto label = std::find(labels.begin(), labels.end(), e.at(1).get<std::string>());
        if (label == labels.end()) throw std::invalid_argument("edge label missing from labels");
        edges.push_back({e.at(0).get<int>(), static_cast<int>(label - labels.begin()),
                         e.at(2).get<int>()});
    }
    return BallGraph(basepoint, j.at("radius").get<int>(), std::move(labels),
                     std::move(vertices), j.at("spheres").get<std::vector<int>>(),
                     std::move(edges));
}

std::string ball_to_dot(const BallGraph& ball)
{
    std::ostringstream out;
    out << "digraph schreier_ball {\n";
    for (const auto& p : ball.vertices())
        out << "  \"" << p.ray << "_" << p.position << "\";\n";
    for (const auto& e : ball.edges()) {
        const auto& a = ball.vertices()[e.src];
        const auto& b = ball.vertices()[e.dst];
        out << "  \"" << a.ray << "_" << a.position << "\" -> \"" << b.ray << "_" << b.position
            << "\" [label=\"" << ball.labels()[e.label] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string growth_to_csv(const GrowthTable& table)
{
    std::ostringstream out;
    out << "r,ball_size\n";
    for (const auto& [r, size] : table.entries) out << r << "," << size << "\n";
    return out.str();
}

}  // namespace ggt
