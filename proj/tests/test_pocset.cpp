#include <doctest.h>

#include <algorithm>

#include "ggt/pocset.hpp"
#include "ggt/reference.hpp"

using namespace ggt;

TEST_CASE("dual of crossing walls is the cube")
{
    auto dual = dual_cube_complex(crossing_walls(3));
    CHECK(dual.complex.vertex_count() == 8);
    CHECK(dual.complex.edge_count() == 12);
    CHECK(dual.connected);
    CHECK(is_median(dual.complex).ok);
}

TEST_CASE("dual vertex counts are 2^k for crossing walls")
{
    for (int k = 0; k <= 10; ++k) {
        auto dual = dual_cube_complex(crossing_walls(k));
        CHECK(dual.complex.vertex_count() == (1 << k));
    }
}

TEST_CASE("dual of a nested chain is a path")
{
    auto dual = dual_cube_complex(chain_walls(3));
    CHECK(dual.complex.vertex_count() == 4);
    CHECK(dual.complex.edge_count() == 3);
    CHECK(is_median(dual.complex).ok);
    // a path: two vertices of degree 1, rest degree 2
    int leaves = 0;
    for (const auto& nb : dual.complex.graph.adj) leaves += (nb.size() == 1);
    CHECK(leaves == 2);
}

TEST_CASE("single wall gives a single edge")
{
    auto dual = dual_cube_complex(crossing_walls(1));
    CHECK(dual.complex.vertex_count() == 2);
    CHECK(dual.complex.edge_count() == 1);
}

TEST_CASE("duals are median at desk scale")
{
    for (int k : {2, 4, 5}) CHECK(is_median(dual_cube_complex(crossing_walls(k)).complex).ok);
    for (int k : {2, 5, 8}) CHECK(is_median(dual_cube_complex(chain_walls(k)).complex).ok);
}

TEST_CASE("crossing in the input shows up as crossing hyperplanes of the dual")
{
    for (int k : {2, 3, 4, 5}) {
        auto dual = dual_cube_complex(crossing_walls(k));
        auto planes = hyperplanes(dual.complex);
        REQUIRE(static_cast<int>(planes.size()) == k);
        for (std::size_t i = 0; i < planes.size(); ++i)
            for (std::size_t j = i + 1; j < planes.size(); ++j)
                CHECK(relation(planes[i], planes[j]) == Relation::Cross);
    }
    auto chain_dual = dual_cube_complex(chain_walls(5));
    auto planes = hyperplanes(chain_dual.complex);
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j)
            CHECK(relation(planes[i], planes[j]) != Relation::Cross);
}

TEST_CASE("no facing triples in the dual of a chain")
{
    auto dual = dual_cube_complex(chain_walls(6));
    CHECK(facing_triples(dual.complex, hyperplanes(dual.complex)).empty());
}

TEST_CASE("orientation enumeration matches the serial reference")
{
    for (const auto& p : {crossing_walls(6), chain_walls(6), chain_walls(1)}) {
        auto dual = dual_cube_complex(p);
        CHECK(dual.orientations == reference::dual_orientations(p));
    }
}

TEST_CASE("poc-set axioms are enforced")
{
    // a halfspace inside its own complement
    auto bad = crossing_walls(2).order();
    bad[0][1] = 1;
    CHECK_THROWS_AS(PocSet(2, bad), std::invalid_argument);

    // broken involution: plus(0) <= plus(1) without minus(1) <= minus(0)
    auto lopsided = crossing_walls(2).order();
    lopsided[0][2] = 1;
    CHECK_THROWS_AS(PocSet(2, lopsided), std::invalid_argument);

    CHECK_THROWS_AS(dual_cube_complex(crossing_walls(25)), std::invalid_argument);
}

TEST_CASE("poc-set JSON round-trip")
{
    auto p = chain_walls(4);
    auto text = pocset_to_json(p);
    auto back = pocset_from_json(text);
    CHECK(back.wall_count() == 4);
    CHECK(back.order() == p.order());
    CHECK(pocset_to_json(back) == text);
}
