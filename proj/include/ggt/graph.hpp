#pragma once

#include <vector>

namespace ggt {

inline constexpr int kUnreachable = -1;

// Undirected graph as adjacency lists; vertex ids are 0..size-1.
// Neighbour lists are kept sorted and deduplicated.
struct SimpleGraph {
    std::vector<std::vector<int>> adj;

    int size() const { return static_cast<int>(adj.size()); }
    void add_edge(int u, int v);
    void finalize();  // sort + dedup neighbour lists
};

// Single-source BFS distances; kUnreachable where not reached.
std::vector<int> bfs_distances(const SimpleGraph& g, int source);

// All-pairs BFS, one row per source. Runs the sources in parallel.
std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g);

// Component id per vertex (ids are 0-based, in order of lowest vertex).
std::vector<int> connected_components(const SimpleGraph& g, int* count = nullptr);

// Components of an induced subgraph, given as a sorted vertex subset.
// Returns one sorted vertex list per component.
std::vector<std::vector<int>> induced_components(const SimpleGraph& g,
                                                 const std::vector<int>& subset);

bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

}  // namespace ggt
