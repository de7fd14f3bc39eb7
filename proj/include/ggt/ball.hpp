#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/houghton.hpp"
#include "ggt/point.hpp"

namespace ggt {

// Directed edge u --label--> v, endpoints as vertex indices.
struct LabeledEdge {
    int src;
    int label;
    int dst;

    auto operator<=>(const LabeledEdge&) const = default;
};

// A radius-R ball of a Schreier graph. Vertices are the acted-on points,
// stored sorted by (ray, position); edges carry positive generator labels
// only (loops included). The last sphere is an untrusted frontier: its
// vertices may be missing generator edges.
class BallGraph {
public:
    BallGraph(RayPoint basepoint, int radius, std::vector<std::string> labels,
              std::vector<RayPoint> vertices, std::vector<int> sphere,
              std::vector<LabeledEdge> edges);

    const RayPoint& basepoint() const { return basepoint_; }
    int basepoint_index() const { return basepoint_index_; }
    int radius() const { return radius_; }
    int size() const { return static_cast<int>(vertices_.size()); }

    const std::vector<RayPoint>& vertices() const { return vertices_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }
    int sphere_of(int v) const { return sphere_[v]; }
    const std::vector<int>& spheres() const { return sphere_; }

    std::optional<int> index_of(const RayPoint& p) const;

    // Underlying simple graph (loops and parallel edges dropped).
    const SimpleGraph& simple_view() const { return simple_; }

    // Target of one generator move; -1 when it leaves the ball.
    // exponent +1 follows the labelled edge, -1 follows it backwards.
    int move(int v, int label, int exponent) const;

    // Follows a word letter by letter; nullopt when any step leaves the ball.
    std::optional<int> follow_word(const Word& w, int v) const;

private:
    RayPoint basepoint_;
    int radius_;
    int basepoint_index_ = 0;
    std::vector<std::string> labels_;
    std::vector<RayPoint> vertices_;
    std::vector<int> sphere_;
    std::vector<LabeledEdge> edges_;
    SimpleGraph simple_;
    std::vector<std::vector<int>> out_;  // out_[label][v] = target or -1
    std::vector<std::vector<int>> in_;   // in_[label][v]  = source or -1
    std::unordered_map<RayPoint, int> index_;
};

// Breadth-first closure of the basepoint under all generators and their
// inverses, out to distance R.
BallGraph build_ball(const MarkedAction& action, RayPoint basepoint, int radius);

struct GrowthTable {
    std::vector<std::pair<int, long long>> entries;  // (r, |B(r)|), r = 0..R
};

GrowthTable growth_table(const BallGraph& ball);

struct DistanceResult {
    int distance;  // path distance inside the ball
    bool exact;    // true when no shorter path can exist outside the ball
};

// Edge-path distance between two points of the ball; nullopt when either
// point is missing or unreachable.
std::optional<DistanceResult> graph_distance(const BallGraph& ball, const RayPoint& u,
                                             const RayPoint& v);

std::string ball_to_json(const BallGraph& ball);
BallGraph ball_from_json(const std::string& text);
std::string ball_to_dot(const BallGraph& ball);
std::string growth_to_csv(const GrowthTable& table);

}  // namespace ggt
