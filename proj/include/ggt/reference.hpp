#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ggt/median.hpp"
#include "ggt/pocset.hpp"

namespace ggt::reference {

// Plain serial implementations, independent of the parallel kernels.
// Tests cross-check the two and the bench tool compares their timings.

std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g);

// Median axiom by direct interval intersections, no shared distance table.
std::optional<std::array<int, 3>> median_violation(const MedianGraph& g);

// Halfspace partitions recomputed from scratch for every edge.
std::vector<std::vector<int>> hyperplane_edge_classes(const MedianGraph& g);

std::vector<std::array<int, 3>> facing_triples(const MedianGraph& g,
                                               const std::vector<Hyperplane>& planes);

// Full 2^k orientation scan without pruning.
std::vector<std::uint32_t> dual_orientations(const PocSet& p);

}  // namespace ggt::reference
