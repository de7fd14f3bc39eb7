#include <doctest.h>

#include <algorithm>

#include "ggt/window.hpp"

using namespace ggt;

namespace {

int line_plane(const WindowedShiftComplex& w, int x)
{
    int u = w.vertex_at({x, 0}).value();
    int v = w.vertex_at({x + 1, 0}).value();
    return w.plane_of_edge(u, v);
}

}  // namespace

TEST_CASE("window builders produce median graphs")
{
    CHECK(is_median(line_window(8).window()).ok);
    CHECK(is_median(staircase_window(3).window()).ok);
    CHECK(is_median(ladder_window(5, 2).window()).ok);
}

TEST_CASE("the shift skewers every line hyperplane at the first power")
{
    auto w = line_window(20);
    auto result = skewer_check(w, line_plane(w, 0), 3);
    CHECK(result.kind == SkewerResult::Kind::Skewers);
    CHECK(result.power == 1);
    CHECK(result.direction == SkewerResult::Direction::PlusInPlus);
}

TEST_CASE("a rung hyperplane of the ladder is stabilised by the shift")
{
    auto w = ladder_window(6, 2);
    int rung = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({0, 1}).value());
    auto result = skewer_check(w, rung, 3);
    CHECK(result.kind == SkewerResult::Kind::StabilisesPower);
    CHECK(result.power == 1);
}

TEST_CASE("a tiny window runs out before deciding")
{
    auto w = line_window(2);
    auto result = skewer_check(w, line_plane(w, 1), 5);
    CHECK(result.kind == SkewerResult::Kind::Inconclusive);
}

TEST_CASE("hyperplanes with no interior support are rejected")
{
    auto w = ladder_window(2, 4);  // shift so long that the interior is empty
    int rung = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({0, 1}).value());
    CHECK_THROWS_AS(skewer_check(w, rung, 2), std::invalid_argument);
}

TEST_CASE("symmetric difference on the line is empty")
{
    auto w = line_window(10);
    auto diff = hyperplane_symdiff(w, line_plane(w, 0), 1);
    CHECK(diff.planes.empty());
    CHECK(diff.verified);
}

TEST_CASE("symmetric difference on the staircase is nonempty and skewered")
{
    auto w = staircase_window(6);
    int vertical = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({1, 0}).value());
    auto diff = hyperplane_symdiff(w, vertical, 1);
    REQUIRE(diff.verified);
    CHECK(!diff.planes.empty());
    for (int member : diff.planes) {
        auto result = skewer_check(w, member, 4);
        CHECK(result.kind == SkewerResult::Kind::Skewers);
    }
}

TEST_CASE("every verified staircase symdiff member is skewered")
{
    auto w = staircase_window(5);
    int resolved = 0;
    for (const auto& h : w.planes()) {
        if (!w.image_plane(h.id, 1).resolvable) continue;
        SymDiffResult diff;
        try {
            diff = hyperplane_symdiff(w, h.id, 1);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!diff.verified) continue;
        ++resolved;
        for (int member : diff.planes)
            CHECK(skewer_check(w, member, 4).kind == SkewerResult::Kind::Skewers);
    }
    CHECK(resolved > 0);
}

TEST_CASE("separation index on the line")
{
    auto w = line_window(20);
    // images of h_0 at 4 and 6 are the nearest pair separated by h_5
    CHECK(separation_index(w, line_plane(w, 5), line_plane(w, 0), 8) == 2);
    CHECK(separation_index(w, line_plane(w, 5), line_plane(w, 0), 0) == 0);
}

TEST_CASE("separation index on the staircase")
{
    auto w = staircase_window(6);
    int col0 = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({1, 0}).value());
    int row0 = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({0, 1}).value());
    // within one diagonal step row_0 crosses every visible image of col_0
    CHECK(separation_index(w, row0, col0, 1) == 0);
    // further out it separates col_{-1} from col_2
    CHECK(separation_index(w, row0, col0, 3) == 3);
    // col_0 itself separates its neighbours on both sides
    CHECK(separation_index(w, col0, col0, 2) == 2);
}

TEST_CASE("transfer on the line window")
{
    auto w = line_window(20);
    int h = line_plane(w, 0);

    auto tr1 = transfer(w, h, 1);
    REQUIRE_FALSE(tr1.inconclusive);
    CHECK(tr1.value == -1);
    CHECK(tr1.verified);
    CHECK(tr1.left_difference.empty());
    CHECK(tr1.right_difference.size() == 1);

    auto tr2 = transfer(w, h, 2);
    CHECK(tr2.value == -2);
    CHECK(tr2.verified);

    auto tr0 = transfer(w, h, 0);
    CHECK(tr0.value == 0);
    CHECK(tr0.verified);
}

TEST_CASE("transfer additivity within the window")
{
    auto w = line_window(16);
    int h = line_plane(w, 0);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            auto ta = transfer(w, h, a);
            auto tb = transfer(w, h, b);
            auto tab = transfer(w, h, a + b);
            if (ta.verified && tb.verified && tab.verified)
                CHECK(tab.value == ta.value + tb.value);
        }
}

TEST_CASE("transfer sign matches the skewer direction")
{
    auto w = line_window(12);
    int h = line_plane(w, 0);
    auto skewer = skewer_check(w, h, 2);
    REQUIRE(skewer.kind == SkewerResult::Kind::Skewers);
    REQUIRE(skewer.direction == SkewerResult::Direction::PlusInPlus);
    auto tr = transfer(w, h, 1);
    CHECK(tr.value < 0);
}

TEST_CASE("transfer reports inconclusive when the preimage leaves the window")
{
    auto w = line_window(3);
    int h = line_plane(w, 0);
    auto tr = transfer(w, h, 5);
    CHECK(tr.inconclusive);
}

TEST_CASE("transfer near the window boundary is a flagged estimate")
{
    auto w = line_window(6);
    auto tr = transfer(w, line_plane(w, 5), 1);  // support touches the last vertex
    REQUIRE_FALSE(tr.inconclusive);
    CHECK_FALSE(tr.verified);
}

TEST_CASE("relations between staircase walls")
{
    auto w = staircase_window(4);
    int col0 = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({1, 0}).value());
    int row0 = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({0, 1}).value());
    int col2 = w.plane_of_edge(w.vertex_at({2, 1}).value(), w.vertex_at({3, 1}).value());
    CHECK(relation(w.planes()[col0], w.planes()[row0]) == Relation::Cross);
    CHECK(relation(w.planes()[col0], w.planes()[col2]) != Relation::Cross);
}

TEST_CASE("transfer on the staircase diagonal")
{
    auto w = staircase_window(6);
    int vertical = w.plane_of_edge(w.vertex_at({0, 0}).value(), w.vertex_at({1, 0}).value());
    auto skewer = skewer_check(w, vertical, 2);
    REQUIRE(skewer.kind == SkewerResult::Kind::Skewers);
    auto tr = transfer(w, vertical, skewer.power);
    REQUIRE_FALSE(tr.inconclusive);
    CHECK(tr.verified);
    CHECK(tr.value != 0);
    if (skewer.direction == SkewerResult::Direction::PlusInPlus)
        CHECK(tr.value < 0);
    else
        CHECK(tr.value > 0);
}
