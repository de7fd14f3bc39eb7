#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggt/median.hpp"

namespace ggt {

// A finite window of a Z-periodic cube complex: a median graph whose
// vertices carry integer coordinates, plus the restriction of the shift
// generator. Every query answers about the window only; results carry
// explicit verified/inconclusive flags instead of extrapolating.
class WindowedShiftComplex {
public:
    WindowedShiftComplex(MedianGraph window, std::vector<std::pair<int, int>> coords,
                         std::pair<int, int> shift);

    const MedianGraph& window() const { return window_; }
    const std::vector<Hyperplane>& planes() const { return planes_; }
    const std::pair<int, int>& shift() const { return shift_; }
    const std::vector<std::pair<int, int>>& coords() const { return coords_; }

    std::optional<int> vertex_at(std::pair<int, int> coord) const;
    // sigma^power of a vertex, straight from the coordinates.
    std::optional<int> shifted_vertex(int v, int power) const;
    bool in_interior(int v) const { return interior_[v]; }

    int plane_of_edge(int u, int v) const;

    // Image of a hyperplane under sigma^power, with the orientation of h
    // transported along. Unresolvable when the image leaves the window or
    // fails to land in a single edge class.
    struct PlaneImage {
        int plane = -1;
        int orientation = 1;  // +1: image plus-side is plane's plus
        bool resolvable = false;
    };
    PlaneImage image_plane(int plane, int power) const;

    // The plus side of an oriented image as a vertex set.
    const std::vector<int>& image_plus(const PlaneImage& image) const;
    const std::vector<int>& image_minus(const PlaneImage& image) const;

private:
    MedianGraph window_;
    std::vector<std::pair<int, int>> coords_;
    std::pair<int, int> shift_;
    std::vector<int> sigma_, sigma_inv_;  // -1 where undefined
    std::vector<char> interior_;
    std::vector<Hyperplane> planes_;
    std::vector<int> edge_plane_;  // edge id -> plane id
    std::map<std::pair<int, int>, int> coord_index_;
    std::map<std::pair<int, int>, int> edge_index_;
};

// A segment of the line: vertices at x = -N..N, shift x+1.
WindowedShiftComplex line_window(int N);
// A monotone staircase of unit squares around the origin, 2N cells each
// way, with the diagonal (1,1) shift.
WindowedShiftComplex staircase_window(int N);
// A ladder on 2N+1 rungs with a horizontal shift by `step`.
WindowedShiftComplex ladder_window(int N, int step);

struct SkewerResult {
    enum class Kind { Skewers, StabilisesPower, Inconclusive } kind;
    int power = 0;  // first n with the reported behaviour
    enum class Direction { None, PlusInPlus, MinusInMinus } direction = Direction::None;
};

// Looks for the first n <= N with sigma^n(h+) strictly inside h+ (or the
// minus analogue), or a power stabilising h; Inconclusive when the window
// runs out first.
SkewerResult skewer_check(const WindowedShiftComplex& w, int plane, int N);

// Hyperplanes crossing the support of `plane` (the hyperplane itself
// excluded).
std::vector<int> crossing_set(const WindowedShiftComplex& w, int plane);

struct SymDiffResult {
    std::vector<int> planes;  // symmetric difference, sorted
    bool verified = false;    // both supports fully inside the interior
};

// Symmetric difference of the crossing sets of h and sigma^power(h).
SymDiffResult hyperplane_symdiff(const WindowedShiftComplex& w, int plane, int power);

// Least |n1 - n2| over pairs with sigma^n1(h), sigma^n2(h) strictly
// separated by k; 0 when no pair with |n| <= N separates.
int separation_index(const WindowedShiftComplex& w, int k_plane, int h_plane, int N);

struct TransferResult {
    bool inconclusive = false;
    int value = 0;
    bool verified = false;
    std::vector<int> left_difference;   // M+ minus g^-1 M+
    std::vector<int> right_difference;  // g^-1 M+ minus M+
};

// tr(sigma^power) = |M+ - g^-1 M+| - |g^-1 M+ - M+| where M+ is the set
// of hyperplanes whose support lies in h+.
TransferResult transfer(const WindowedShiftComplex& w, int plane, int power);

}  // namespace ggt
