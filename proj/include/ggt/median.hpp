#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt {

// The 1-skeleton of a (candidate) CAT(0) cube complex. Edges are stored
// sorted with u < v; edge ids index into `edges`.
struct MedianGraph {
    SimpleGraph graph;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return graph.size(); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

MedianGraph make_median_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

// Example complexes used by tests and the CLI.
MedianGraph path_graph(int edge_count);
MedianGraph cube_graph(int dimension);
MedianGraph tripod_graph();
MedianGraph spider_graph(int legs, int leg_length);
MedianGraph cycle_graph(int length);
MedianGraph ladder_graph(int rungs);

// Metric interval I(u,v) = {x : d(u,x) + d(x,v) = d(u,v)}.
std::vector<int> interval(const MedianGraph& g, int u, int v);

struct MedianCheck {
    bool ok = true;
    std::array<int, 3> counterexample{-1, -1, -1};
    int median_count = 1;  // |I∩I∩I| of the counterexample triple
};

// Exhaustive triple check of the median axiom; the first failing triple
// is reported. Throws on disconnected input.
MedianCheck is_median(const MedianGraph& g);

// An edge-parallelism class and the two halfspaces it bounds. `side` maps
// each vertex to +1/-1; plus/minus are the sorted vertex sets; support is
// the union of the class's edge endpoints.
struct Hyperplane {
    int id = 0;
    std::vector<int> edge_ids;
    std::vector<char> side;
    std::vector<int> plus;
    std::vector<int> minus;
    std::vector<int> support;
};

// Groups edges by the halfspace partition they induce. Validates the
// classification structurally (bipartite, each class separates the graph
// into exactly its two halfspaces) and throws where it breaks down.
std::vector<Hyperplane> hyperplanes(const MedianGraph& g);

enum class Relation {
    Cross,            // all four quarter intersections nonempty
    NestedPlusPlus,   // h+ inside k+
    NestedPlusMinus,  // h+ inside k-
    NestedMinusPlus,  // h- inside k+
    NestedMinusMinus  // h- inside k-
};

Relation relation(const Hyperplane& h, const Hyperplane& k);
std::string relation_name(Relation rel);

// Pairwise disjoint triples {h0,h1,h2} where no member has the supports
// of the other two strictly on opposite sides.
std::vector<std::array<int, 3>> facing_triples(const MedianGraph& g,
                                               const std::vector<Hyperplane>& planes);

std::string median_graph_to_json(const MedianGraph& g);
MedianGraph median_graph_from_json(const std::string& text);

}  // namespace ggt
