#include <doctest.h>

#include <set>

#include "ggt/ball.hpp"
#include "ggt/reference.hpp"

using namespace ggt;

TEST_CASE("radius-1 ball of G_2 matches the hand enumeration")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 1);
    std::set<RayPoint> expect{{1, 1}, {2, 1}, {1, 2}};
    std::set<RayPoint> got(ball.vertices().begin(), ball.vertices().end());
    CHECK(got == expect);
}

TEST_CASE("radius-2 ball of G_2 adds (2,2) and (1,3)")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 2);
    std::set<RayPoint> expect{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}};
    std::set<RayPoint> got(ball.vertices().begin(), ball.vertices().end());
    CHECK(got == expect);
    CHECK(ball.size() == 5);
}

TEST_CASE("radius-0 ball is a single vertex without edges")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 0);
    CHECK(ball.size() == 1);
    CHECK(ball.edges().empty());
    auto table = growth_table(ball);
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries[0] == std::pair{0, 1LL});
}

TEST_CASE("generators fixing a point leave loops in the multigraph")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 5);
    auto v = ball.index_of({2, 4});
    REQUIRE(v.has_value());
    auto g2 = std::find(ball.labels().begin(), ball.labels().end(), "g2");
    REQUIRE(g2 != ball.labels().end());
    CHECK(ball.move(*v, static_cast<int>(g2 - ball.labels().begin()), 1) == *v);
}

TEST_CASE("growth of Y_2 and Y_3")
{
    auto y2 = growth_table(build_ball(houghton_action(2), {1, 1}, 8));
    CHECK(y2.entries[0].second == 1);
    CHECK(y2.entries[1].second == 3);
    CHECK(y2.entries[2].second == 5);

    auto y3 = growth_table(build_ball(houghton_action(3), {1, 1}, 8));
    CHECK(y3.entries[1].second == 4);  // three generator images plus the basepoint
    for (std::size_t r = 1; r < y3.entries.size(); ++r)
        CHECK(y3.entries[r].second == 3 * static_cast<long long>(r) + 1);
}

TEST_CASE("ball monotonicity in the radius")
{
    auto small = build_ball(houghton_action(3), {1, 1}, 5);
    auto large = build_ball(houghton_action(3), {1, 1}, 6);
    std::set<RayPoint> small_set(small.vertices().begin(), small.vertices().end());
    std::set<RayPoint> large_set(large.vertices().begin(), large.vertices().end());
    for (const auto& p : small_set) CHECK(large_set.count(p) == 1);
}

TEST_CASE("spheres agree with an independent BFS")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 9);
    auto dist = reference::distance_matrix(ball.simple_view());
    const auto& from_base = dist[ball.basepoint_index()];
    for (int v = 0; v < ball.size(); ++v) CHECK(from_base[v] == ball.sphere_of(v));
}

TEST_CASE("label coherence: a move followed by its inverse returns")
{
    auto ball = build_ball(houghton_action(3), {1, 1}, 6);
    for (const auto& e : ball.edges()) {
        CHECK(ball.move(e.src, e.label, 1) == e.dst);
        CHECK(ball.move(e.dst, e.label, -1) == e.src);
    }
}

TEST_CASE("completeness below the boundary sphere")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 7);
    for (int v = 0; v < ball.size(); ++v) {
        if (ball.sphere_of(v) >= ball.radius()) continue;
        for (std::size_t s = 0; s < ball.labels().size(); ++s) {
            CHECK(ball.move(v, static_cast<int>(s), 1) >= 0);
            CHECK(ball.move(v, static_cast<int>(s), -1) >= 0);
        }
    }
}

TEST_CASE("away from the junction Y_n looks like a line")
{
    for (int n : {2, 3, 4}) {
        auto ball = build_ball(houghton_action(n), {1, 1}, 10);
        const auto& simple = ball.simple_view();
        for (int v = 0; v < ball.size(); ++v) {
            const auto& p = ball.vertices()[v];
            bool junction = p.position <= 2;
            bool frontier = ball.sphere_of(v) >= ball.radius() - 1;
            if (!junction && !frontier)
                CHECK(simple.adj[v].size() == 2);
        }
    }
}

TEST_CASE("graph distances inside the ball")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 8);
    auto same = graph_distance(ball, {1, 1}, {1, 1});
    REQUIRE(same.has_value());
    CHECK(same->distance == 0);
    CHECK(same->exact);

    auto two = graph_distance(ball, {1, 1}, {2, 2});
    REQUIRE(two.has_value());
    CHECK(two->distance == 2);
    CHECK(two->exact);

    CHECK_FALSE(graph_distance(ball, {1, 1}, {1, 100}).has_value());
}

TEST_CASE("distances between frontier vertices are flagged as bounds only")
{
    // the two tips of a radius-6 line ball: a shortcut outside the ball
    // cannot be ruled out, so the result is not marked exact
    auto ball = build_ball(line_action(), {1, 1}, 6);
    auto tips = graph_distance(ball, {1, 7}, {2, 6});
    REQUIRE(tips.has_value());
    CHECK(tips->distance == 12);
    CHECK_FALSE(tips->exact);
}

TEST_CASE("JSON export round-trips byte-identically")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 3);
    auto text = ball_to_json(ball);
    auto reimported = ball_from_json(text);
    CHECK(ball_to_json(reimported) == text);
    CHECK(reimported.size() == ball.size());
    CHECK(reimported.basepoint() == ball.basepoint());
}

TEST_CASE("DOT export of the radius-2 ball")
{
    auto ball = build_ball(houghton_action(2), {1, 1}, 2);
    auto dot = ball_to_dot(ball);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"1_1\" -> \"2_1\" [label=\"g1\"]") != std::string::npos);
    CHECK(dot.find("label=\"beta\"") != std::string::npos);
    // five nodes
    int nodes = 0;
    for (std::size_t at = dot.find("\";\n"); at != std::string::npos;
         at = dot.find("\";\n", at + 1))
        ++nodes;
    CHECK(nodes == 5);
}

TEST_CASE("CSV growth export")
{
    auto table = growth_table(build_ball(houghton_action(2), {1, 1}, 2));
    CHECK(growth_to_csv(table) == "r,ball_size\n0,1\n1,3\n2,5\n");
}

TEST_CASE("extended action ball contains the alpha rungs")
{
    auto action = extended_action(3, permutation_from_cycles("(2,3)", 3));
    auto ball = build_ball(action, {1, 1}, 4);
    auto v23 = ball.index_of({2, 3});
    auto v33 = ball.index_of({3, 3});
    REQUIRE(v23.has_value());
    REQUIRE(v33.has_value());
    auto alpha_label = std::find(ball.labels().begin(), ball.labels().end(), "alpha");
    REQUIRE(alpha_label != ball.labels().end());
    CHECK(ball.move(*v23, static_cast<int>(alpha_label - ball.labels().begin()), 1) == *v33);
}
