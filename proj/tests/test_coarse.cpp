#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ggt/coarse.hpp"

using namespace ggt;

namespace {

// Independent witness-family certificate: the reported witnesses must be
// valid and pairwise disjoint (so the maximum is at least the count), and
// the reported cut must intercept every possible witness (so the maximum
// is at most its size).
void check_narrowness_certificate(const BallGraph& ball, const NarrownessReport& report)
{
    int R = ball.radius();
    auto sphere = [&](const RayPoint& p) { return ball.sphere_of(ball.index_of(p).value()); };

    std::set<RayPoint> seen;
    for (const auto& witness : report.witnesses) {
        REQUIRE(!witness.empty());
        for (const auto& p : witness) {
            REQUIRE(sphere(p) > report.inner_radius);  // inside the annulus
            REQUIRE(seen.insert(p).second);            // pairwise disjoint
        }
        // meets the inner and outer collars
        CHECK(std::any_of(witness.begin(), witness.end(), [&](const RayPoint& p) {
            return sphere(p) <= report.inner_radius + report.mu;
        }));
        CHECK(std::any_of(witness.begin(), witness.end(),
                          [&](const RayPoint& p) { return sphere(p) > R - report.mu; }));
        // mu-coarsely connected, witnessed by consecutive chain steps
        for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
            auto d = graph_distance(ball, witness[i], witness[i + 1]);
            REQUIRE(d.has_value());
            CHECK(d->distance <= report.mu);
        }
    }
    CHECK(static_cast<int>(report.witnesses.size()) == report.witness_count);
    CHECK(static_cast<int>(report.cut_certificate.size()) == report.witness_count);

    // Removing the cut must kill every inner-to-outer mu-chain.
    std::vector<int> annulus;
    std::set<RayPoint> cut(report.cut_certificate.begin(), report.cut_certificate.end());
    for (int v = 0; v < ball.size(); ++v)
        if (ball.sphere_of(v) > report.inner_radius && !cut.count(ball.vertices()[v]))
            annulus.push_back(v);
    std::set<int> alive(annulus.begin(), annulus.end());
    std::queue<int> frontier;
    std::set<int> reached;
    for (int v : annulus)
        if (ball.sphere_of(v) <= report.inner_radius + report.mu) {
            frontier.push(v);
            reached.insert(v);
        }
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : annulus) {
            if (reached.count(v)) continue;
            auto d = graph_distance(ball, ball.vertices()[u], ball.vertices()[v]);
            if (d && d->distance <= report.mu) {
                reached.insert(v);
                frontier.push(v);
            }
        }
    }
    for (int v : reached) CHECK(ball.sphere_of(v) <= R - report.mu);
}

}  // namespace

TEST_CASE("ends of the Houghton Schreier graphs count the rays")
{
    auto y2 = ends_profile(build_ball(houghton_action(2), {1, 1}, 10), {2});
    CHECK(y2.counts[0] == std::pair{2, 2});

    auto y3 = ends_profile(build_ball(houghton_action(3), {1, 1}, 10), {2});
    CHECK(y3.counts[0] == std::pair{2, 3});
}

TEST_CASE("ends of the bare line")
{
    auto line = ends_profile(build_ball(line_action(), {1, 1}, 8), {1});
    CHECK(line.counts[0] == std::pair{1, 2});
}

TEST_CASE("ends counts are stable across the outer radius on quasi-trees")
{
    for (int n : {2, 3, 4})
        for (int R : {8, 16, 32}) {
            auto profile = ends_profile(build_ball(houghton_action(n), {1, 1}, R), {2});
            CHECK(profile.counts[0].second == n);
        }
}

TEST_CASE("ends profile rejects r too close to the radius")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 5);
    CHECK_THROWS_AS(ends_profile(ball, {4}), std::invalid_argument);
}

TEST_CASE("ends profile over several inner radii at once")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 12);
    auto profile = ends_profile(ball, {2, 4, 6});
    REQUIRE(profile.counts.size() == 3);
    for (const auto& [r, deep] : profile.counts) CHECK(deep == 3);
}

TEST_CASE("an extension element fixing the basepoint probes as bounded")
{
    auto action = extended_action(3, permutation_from_cycles("(2,3)", 3));
    auto ball = build_ball(action, {1, 1}, 12);
    auto probe = commensurator_probe(ball, parse_word("alpha"), 6);
    CHECK(probe.verdict == ProbeVerdict::BoundedSoFar);
    CHECK(probe.start == RayPoint{1, 1});
}

TEST_CASE("extended action has one end per sigma-orbit")
{
    auto action = extended_action(3, permutation_from_cycles("(2,3)", 3));
    auto profile = ends_profile(build_ball(action, {1, 1}, 12), {2});
    CHECK(profile.counts[0] == std::pair{2, 2});  // orbits {1}, {2,3}
}

TEST_CASE("coarse components on the whole ball")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 8);
    std::vector<int> all(ball.size());
    for (int v = 0; v < ball.size(); ++v) all[v] = v;
    CHECK(coarse_components(ball, all, 1).size() == 1);
}

TEST_CASE("coarse components of parity subsets of the line")
{
    auto ball = build_ball(line_action(), {1, 1}, 20);
    // right-hand ray: ray 2 positions are at distance = position
    std::vector<int> evens;
    for (int v = 0; v < ball.size(); ++v) {
        const auto& p = ball.vertices()[v];
        if (p.ray == 2 && p.position % 2 == 0 && p.position >= 2 && p.position <= 20)
            evens.push_back(v);
    }
    CHECK(coarse_components(ball, evens, 2).size() == 1);   // consecutive evens
    CHECK(coarse_components(ball, evens, 1).size() == evens.size());  // isolated
}

TEST_CASE("narrowness of the line: two witnesses at mu=1, four at mu=2")
{
    auto ball = build_ball(line_action(), {1, 1}, 16);

    auto mu1 = narrowness_profile(ball, 1, 1);
    CHECK(mu1.witness_count == 2);
    check_narrowness_certificate(ball, mu1);

    auto mu2 = narrowness_profile(ball, 2, 1);
    CHECK(mu2.witness_count == 4);
    check_narrowness_certificate(ball, mu2);
}

TEST_CASE("narrowness of Y_3: one witness per branch")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 12);
    auto report = narrowness_profile(ball, 1, 2);
    CHECK(report.witness_count == 3);
    check_narrowness_certificate(ball, report);
}

TEST_CASE("narrowness witness count matches ends on tree-like graphs")
{
    for (int n : {2, 3, 4}) {
        auto ball = build_ball(houghton_action(n), {1, 1}, 12);
        auto ends = ends_profile(ball, {2});
        auto narrow = narrowness_profile(ball, 1, 2);
        CHECK(ends.counts[0].second == narrow.witness_count);
    }
}

TEST_CASE("narrowness rejects an annulus thinner than mu")
{
    auto ball = build_ball(line_action(), {1, 1}, 4);
    CHECK_THROWS_AS(narrowness_profile(ball, 3, 2), std::invalid_argument);
}

TEST_CASE("linear growth check accepts the decorated lines")
{
    auto y2 = linear_growth_check(growth_table(build_ball(houghton_action(2), {1, 1}, 64)));
    CHECK(y2.holds);
    CHECK(y2.c_estimate <= 3.0);

    auto y3 = linear_growth_check(growth_table(build_ball(houghton_action(3), {1, 1}, 64)));
    CHECK(y3.holds);
    CHECK(y3.c_estimate <= 4.0);
}

TEST_CASE("linear growth check rejects the binary tree")
{
    GrowthTable tree;
    for (int r = 0; r <= 10; ++r)
        tree.entries.emplace_back(r, (1LL << (r + 1)) - 1);
    CHECK_FALSE(linear_growth_check(tree).holds);
}

TEST_CASE("linear growth check needs enough data")
{
    GrowthTable tiny;
    for (int r = 0; r <= 2; ++r) tiny.entries.emplace_back(r, r + 1);
    CHECK_THROWS_AS(linear_growth_check(tiny), std::invalid_argument);
}

TEST_CASE("loop words fix the basepoint")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 4);
    auto words = loop_words(ball, 8);
    CHECK(!words.empty());
    for (const auto& w : words)
        CHECK(ball.follow_word(w, ball.basepoint_index()) == ball.basepoint_index());
}

TEST_CASE("loop words of the radius-0 ball are empty")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 0);
    CHECK(loop_words(ball, 0).empty());
}

TEST_CASE("beta conjugates appear among the Y_2 loop words")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 4);
    auto words = loop_words(ball, 8);
    bool beta_seen = false;
    for (const auto& w : words)
        for (const auto& letter : w) beta_seen |= (letter.label == "beta");
    CHECK(beta_seen);
}

TEST_CASE("double cosets of the Houghton pairs: basepoint plus one big class")
{
    for (int n : {2, 3}) {
        auto ball = build_ball(houghton_action(n), {1, 1}, 12);
        auto partition = double_coset_orbits(ball, 6);
        CHECK(partition.class_count == 2);
        CHECK(partition.stable);
        int base_class = partition.class_of[ball.basepoint_index()];
        int singles = 0;
        for (int v = 0; v < ball.size(); ++v)
            if (partition.class_of[v] == base_class) ++singles;
        CHECK(singles == 1);
    }
}

TEST_CASE("double coset partitions only merge as the budget grows")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 12);
    auto coarse = double_coset_orbits(ball, 4);
    auto finer = double_coset_orbits(ball, 2);
    // every class of the small-budget partition sits inside one class
    std::map<int, int> image;
    for (int v = 0; v < ball.size(); ++v) {
        auto [it, fresh] = image.emplace(finer.class_of[v], coarse.class_of[v]);
        CHECK(it->second == coarse.class_of[v]);
    }
}

TEST_CASE("double coset classes are closed under loop words")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 10);
    auto partition = double_coset_orbits(ball, 6);
    for (const auto& w : loop_words(ball, 6))
        for (int v = 0; v < ball.size(); ++v)
            if (auto image = ball.follow_word(w, v))
                CHECK(partition.class_of[v] == partition.class_of[*image]);
}

TEST_CASE("radius-0 ball has a single trivial class")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 0);
    auto partition = double_coset_orbits(ball, 0);
    CHECK(partition.class_count == 1);
    CHECK(partition.stable);
}

TEST_CASE("commensurator probe: g_1 grows, identity stays put")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 16);

    auto probe = commensurator_probe(ball, parse_word("g1"), 6);
    CHECK(probe.verdict == ProbeVerdict::GrowingSoFar);

    auto trivial = commensurator_probe(ball, {}, 6);
    CHECK(trivial.verdict == ProbeVerdict::BoundedSoFar);
    for (long long s : trivial.image_sizes) CHECK(s == 1);

    // beta moves the basepoint, so its coset image is the big class
    auto b = commensurator_probe(ball, parse_word("beta"), 6);
    CHECK(b.verdict == ProbeVerdict::GrowingSoFar);
}

TEST_CASE("coset distance probe")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 10);

    auto zero = coset_distance_probe(ball, {}, 4, 4);
    CHECK(zero.exact);
    CHECK(zero.value == 0);

    auto squared = coset_distance_probe(ball, parse_word("g1 g1"), 4, 4);
    CHECK(squared.exact);
    CHECK(squared.value == 1);

    auto single = coset_distance_probe(ball, parse_word("beta"), 4, 4);
    CHECK(single.exact);
    CHECK(single.value <= 1);

    CHECK_THROWS_AS(coset_distance_probe(ball, parse_word("g1"), 12, 4),
                    std::invalid_argument);
}

TEST_CASE("the bare line has a trivial stabiliser: every vertex its own class")
{
    // Stab((1,1)) in <t> is trivial, so the loop word set is empty and the
    // double cosets are the group elements themselves.
    auto ball = build_ball(line_action(), {1, 1}, 12);
    CHECK(loop_words(ball, 12).empty());
    auto partition = double_coset_orbits(ball, 6);
    CHECK(partition.class_count == ball.size());
    CHECK(partition.stable);

    // the image of t^5 H is a single far-away vertex
    auto far = coset_distance_probe(ball, parse_word("t^5"), 3, 3);
    CHECK_FALSE(far.exact);
    CHECK(far.value == 3);

    auto probe = commensurator_probe(ball, parse_word("t"), 6);
    CHECK(probe.verdict == ProbeVerdict::BoundedSoFar);
}
