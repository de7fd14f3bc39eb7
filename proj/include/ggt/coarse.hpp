#pragma once

#include <string>
#include <vector>

#include "ggt/ball.hpp"

namespace ggt {

// Deep-component counts at finite scale: for each inner radius r, the
// number of components of B(R) - B(r) (simple view) meeting the outer
// sphere S(R). Computed on the ball, so every count is scale-qualified.
struct EndsProfile {
    int radius;
    std::vector<std::pair<int, int>> counts;  // (r, deep component count)
};

EndsProfile ends_profile(const BallGraph& ball, const std::vector<int>& r_values);

// mu-coarse components of a vertex subset: u ~ v when their distance in
// the full ball is at most mu, transitively closed. Vertex indices.
std::vector<std::vector<int>> coarse_components(const BallGraph& ball,
                                                const std::vector<int>& subset, int mu);

// Witnesses for the annulus B(R) - B(r): pairwise disjoint mu-coarsely
// connected sets, each reaching from within mu of the inner boundary to
// within mu of the outer sphere. witness_count is the exact maximum,
// computed as a maximum vertex-disjoint chain packing; cut_certificate
// is a vertex cut of the same size proving maximality.
struct NarrownessReport {
    int mu = 1;
    int inner_radius = 0;
    int outer_radius = 0;
    int witness_count = 0;
    std::vector<std::vector<RayPoint>> witnesses;
    std::vector<RayPoint> cut_certificate;
    std::string method;
    int coarse_component_count = 0;
};

NarrownessReport narrowness_profile(const BallGraph& ball, int mu, int r);

// Linear-growth evidence: C_estimate = max |B(r)|/r over r >= 1, holds
// when the ratio maximum is already attained before the last quarter of
// radii. Evidence at this scale, not a proof.
struct LinearGrowthCheck {
    long long c_numerator = 0;
    long long c_denominator = 1;
    double c_estimate = 0.0;
    bool holds = false;
};

LinearGrowthCheck linear_growth_check(const GrowthTable& table);

// Schreier generator words read off the non-tree edges of a deterministic
// BFS spanning tree; every word fixes the basepoint and has length <= budget.
std::vector<Word> loop_words(const BallGraph& ball, int budget);

struct DoubleCosetPartition {
    int budget = 0;
    bool stable = false;
    std::vector<int> class_of;   // class id per vertex, ids by first vertex
    int class_count = 0;
    std::vector<char> trusted;   // sphere(v) + budget within radius
};

// Orbits of ball vertices under all loop words (union-find closure);
// classes approximate the double cosets H\G/H on the trusted region.
DoubleCosetPartition double_coset_orbits(const BallGraph& ball, int budget);

enum class ProbeVerdict { BoundedSoFar, GrowingSoFar };

struct CommensuratorProbe {
    RayPoint start;
    std::vector<long long> image_sizes;  // |class ∩ B(r)| for r = 1..R
    ProbeVerdict verdict = ProbeVerdict::BoundedSoFar;
};

// Growth of the image of the coset g·H in the Schreier ball; evidence for
// or against commensurator membership, never a theorem.
CommensuratorProbe commensurator_probe(const BallGraph& ball, const Word& g, int budget);

struct CosetDistanceResult {
    bool exact = false;  // false means "at least `value`"
    int value = 0;
    bool trusted = false;
};

// Distance from the basepoint coset to the coset gH, capped at D.
CosetDistanceResult coset_distance_probe(const BallGraph& ball, const Word& g, int D,
                                         int budget);

std::string ends_to_json(const EndsProfile& profile);
std::string narrowness_to_json(const NarrownessReport& report, const BallGraph& ball);
std::string growth_check_to_json(const LinearGrowthCheck& check, const GrowthTable& table);
std::string double_cosets_to_json(const DoubleCosetPartition& partition, const BallGraph& ball);
std::string comm_probe_to_json(const CommensuratorProbe& probe, const BallGraph& ball,
                               int budget);
std::string coset_distance_to_json(const CosetDistanceResult& result, const BallGraph& ball,
                                   const Word& g, int D, int budget);

}  // namespace ggt
