#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggt/point.hpp"

namespace ggt {

// An eventually-affine bijection of X_n: outside a finite set it acts as
//   (i, m) |-> (sigma(i), m + translation[sigma(i)])
// and the finite exceptions are listed in `correction`. Pure Houghton
// elements have sigma = identity; the ray-permuting extension needs sigma.
//
// The representation is canonical: correction entries are sorted by
// (ray, position) and none of them agrees with the eventual rule, so
// equality of functions is equality of representations.
class HoughtonElement {
public:
    // Builds and canonicalizes; throws std::invalid_argument unless the
    // data describes a bijection of X_n (injective on a margin box, every
    // image position >= 1, translation entries summing to zero).
    HoughtonElement(int ray_count,
                    std::vector<int> ray_permutation,
                    std::vector<int> translation,
                    std::map<RayPoint, RayPoint> correction);

    static HoughtonElement identity(int ray_count);

    int ray_count() const { return ray_count_; }
    const std::vector<int>& ray_permutation() const { return sigma_; }
    const std::vector<int>& translation() const { return translation_; }
    const std::map<RayPoint, RayPoint>& correction() const { return correction_; }

    RayPoint apply(const RayPoint& p) const;

    bool is_identity() const;

    bool operator==(const HoughtonElement& other) const = default;

private:
    int ray_count_;
    std::vector<int> sigma_;        // sigma_[i-1] = image ray of ray i
    std::vector<int> translation_;  // translation_[j-1] = shift applied on target ray j
    std::map<RayPoint, RayPoint> correction_;

    RayPoint eventual(const RayPoint& p) const;
    void canonicalize_and_validate();
};

// Generator g_i of the Houghton group on n rays: a unit translation along
// the line formed by ray 1 and ray i+1. Requires 1 <= i <= n-1.
HoughtonElement houghton_generator(int i, int n);

// The transposition of (1,1) and (2,1), needed to generate G_2.
HoughtonElement beta(int ray_count = 2);

// Ray permutation alpha(i,m) = (sigma(i), m). sigma is given in one-line
// notation (sigma[i-1] = image of ray i) and must fix ray 1.
HoughtonElement alpha(const std::vector<int>& sigma);

HoughtonElement compose(const HoughtonElement& f, const HoughtonElement& g);
HoughtonElement invert(const HoughtonElement& f);
bool canonical_equal(const HoughtonElement& f, const HoughtonElement& g);

// Round-trip stable text form, e.g.
//   "n=2; sigma=id; t=-1,1; corr=(1,1)->(2,1)"
std::string format_element(const HoughtonElement& f);
HoughtonElement parse_element(const std::string& text);

// Permutation cycle helpers ("(2,3)" or "id", one-line vector form).
std::vector<int> permutation_from_cycles(const std::string& cycles, int n);
std::string cycles_from_permutation(const std::vector<int>& sigma);

// A finite list of labelled generators acting on X_n; inverses are implied.
struct MarkedAction {
    int ray_count;
    std::vector<std::pair<std::string, HoughtonElement>> generators;

    const HoughtonElement& generator(const std::string& label) const;
};

// The standard marked actions: S_2 = {g1, beta}, S_n = {g1..g(n-1)} for
// n >= 3, the extension S_n + {alpha(sigma)}, and the plain shift line
// (the subgroup <g1> of G_2, whose Schreier graph is a bare line).
MarkedAction houghton_action(int n);
MarkedAction extended_action(int n, const std::vector<int>& sigma);
MarkedAction line_action();

// One letter of a generator word: a label plus an exponent of +1 or -1.
struct WordLetter {
    std::string label;
    int exponent = 1;

    bool operator==(const WordLetter&) const = default;
};
using Word = std::vector<WordLetter>;

// Parses "g1 g2^-1 beta" (whitespace separated, optional ^k powers).
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Applies the word to a point, first letter first (the path-following
// convention used by Schreier graphs).
RayPoint apply_word(const MarkedAction& action, const Word& w, RayPoint p);

// The element realizing the word under the same convention.
HoughtonElement word_element(const MarkedAction& action, const Word& w);

}  // namespace ggt
