#include "ggt/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ggt {

void SimpleGraph::add_edge(int u, int v)
{
    int needed = std::max(u, v) + 1;
    if (needed > size()) adj.resize(needed);
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
}

void SimpleGraph::finalize()
{
    for (auto& neighbours : adj) {
        std::sort(neighbours.begin(), neighbours.end());
        neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
    }
}

std::vector<int> bfs_distances(const SimpleGraph& g, int source)
{
    std::vector<int> dist(g.size(), kUnreachable);
    std::vector<int> frontier;
    frontier.reserve(g.size());
    dist[source] = 0;
    frontier.push_back(source);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int u = frontier[head];
        for (int v : g.adj[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                frontier.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g)
{
    int n = g.size();
    std::vector<std::vector<int>> dist(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int s = 0; s < n; ++s) dist[s] = bfs_distances(g, s);
    return dist;
}

std::vector<int> connected_components(const SimpleGraph& g, int* count)
{
    std::vector<int> component(g.size(), -1);
    int next = 0;
    for (int start = 0; start < g.size(); ++start) {
        if (component[start] != -1) continue;
        component[start] = next;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : g.adj[u])
                if (component[v] == -1) {
                    component[v] = next;
                    frontier.push(v);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return component;
}

std::vector<std::vector<int>> induced_components(const SimpleGraph& g,
                                                 const std::vector<int>& subset)
{
    std::vector<char> in_subset(g.size(), 0);
    for (int v : subset) in_subset[v] = 1;

    std::vector<std::vector<int>> components;
    std::vector<char> visited(g.size(), 0);
    for (int start : subset) {
        if (visited[start]) continue;
        std::vector<int> comp;
        std::queue<int> frontier;
        visited[start] = 1;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (in_subset[v] && !visited[v]) {
                    visited[v] = 1;
                    frontier.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const SimpleGraph& g)
{
    if (g.size() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_bipartite(const SimpleGraph& g)
{
    std::vector<int> colour(g.size(), -1);
    for (int start = 0; start < g.size(); ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : g.adj[u]) {
                if (colour[v] == -1) {
                    colour[v] = colour[u] ^ 1;
                    frontier.push(v);
                } else if (colour[v] == colour[u] && u != v) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ggt
