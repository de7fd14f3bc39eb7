#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggt/median.hpp"

namespace ggt {

// A finite system of walls: wall w has halfspaces 2w (plus) and 2w+1
// (minus), with a containment partial order on halfspaces. The order is
// stored non-strict (reflexive) as a dense matrix.
class PocSet {
public:
    PocSet(int wall_count, std::vector<std::vector<char>> order);

    int wall_count() const { return walls_; }
    int halfspace_count() const { return 2 * walls_; }
    static int complement(int halfspace) { return halfspace ^ 1; }
    bool leq(int a, int b) const { return order_[a][b]; }
    const std::vector<std::vector<char>>& order() const { return order_; }

private:
    int walls_;
    std::vector<std::vector<char>> order_;

    void validate() const;
};

// k pairwise-crossing walls (no containments).
PocSet crossing_walls(int k);
// A nested chain: plus(0) < plus(1) < ... < plus(k-1).
PocSet chain_walls(int k);

struct DualComplex {
    MedianGraph complex;
    std::vector<std::uint32_t> orientations;  // bit w set = plus chosen at wall w
    bool connected = true;
};

// All consistent orientations (one halfspace per wall, closed upward
// under containment), sorted. Exhaustive with pruning; wall_count <= 24.
std::vector<std::uint32_t> consistent_orientations(const PocSet& p);

// Sageev dual: vertices are the consistent orientations, edges join
// orientations differing on a single wall.
DualComplex dual_cube_complex(const PocSet& p);

std::string pocset_to_json(const PocSet& p);
PocSet pocset_from_json(const std::string& text);

}  // namespace ggt
