#pragma once

// Independent pointwise oracles for the tests: the generator actions are
// written out as direct case analysis and words are evaluated point by
// point, with no use of the element algebra under test.

#include <stdexcept>
#include <string>
#include <vector>

#include "ggt/point.hpp"

namespace oracle {

using ggt::RayPoint;

inline RayPoint g_forward(int i, RayPoint p)
{
    if (p.ray == 1 && p.position > 1) return {1, p.position - 1};
    if (p.ray == 1 && p.position == 1) return {i + 1, 1};
    if (p.ray == i + 1) return {p.ray, p.position + 1};
    return p;
}

inline RayPoint g_backward(int i, RayPoint p)
{
    if (p.ray == 1) return {1, p.position + 1};
    if (p.ray == i + 1 && p.position > 1) return {p.ray, p.position - 1};
    if (p.ray == i + 1 && p.position == 1) return {1, 1};
    return p;
}

inline RayPoint beta_swap(RayPoint p)
{
    if (p.ray == 1 && p.position == 1) return {2, 1};
    if (p.ray == 2 && p.position == 1) return {1, 1};
    return p;
}

inline RayPoint alpha_permute(const std::vector<int>& sigma, RayPoint p)
{
    return {sigma[p.ray - 1], p.position};
}

inline RayPoint alpha_unpermute(const std::vector<int>& sigma, RayPoint p)
{
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i)
        if (sigma[i - 1] == p.ray) return {i, p.position};
    throw std::logic_error("alpha oracle: ray not hit");
}

// One letter, e.g. {"g1", +1} or {"beta", -1}; alpha uses the given sigma.
struct Letter {
    std::string label;
    int exponent;
};

inline RayPoint apply_letters(const std::vector<Letter>& word, RayPoint p,
                              const std::vector<int>& sigma = {})
{
    for (const auto& [label, exponent] : word) {
        if (label == "beta") {
            p = beta_swap(p);  // involution, exponent irrelevant
        } else if (label == "alpha") {
            p = exponent > 0 ? alpha_permute(sigma, p) : alpha_unpermute(sigma, p);
        } else if (label.size() >= 2 && label[0] == 'g') {
            int i = std::stoi(label.substr(1));
            p = exponent > 0 ? g_forward(i, p) : g_backward(i, p);
        } else {
            throw std::logic_error("oracle: unknown label " + label);
        }
    }
    return p;
}

}  // namespace oracle
