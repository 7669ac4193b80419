#include <cmath>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "hullchain/errors.hpp"
#include "hullchain/geometry.hpp"

using namespace hullchain;

namespace {

std::vector<std::vector<double>> random_points(std::mt19937_64& rng,
                                               std::size_t count) {
    std::vector<std::vector<double>> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        pts.push_back({fixtures::uniform01(rng), fixtures::uniform01(rng)});
    }
    return pts;
}

}  // namespace

TEST_CASE("convex_hull_2d drops interior points") {
    const auto hull =
        convex_hull_2d({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}});
    CHECK(hull == std::vector<std::vector<double>>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("convex_hull_2d of a single point is that point") {
    const auto hull = convex_hull_2d({{0.5, 0.5}});
    CHECK(hull == std::vector<std::vector<double>>{{0.5, 0.5}});
}

TEST_CASE("convex_hull_2d drops the center of a square") {
    const auto hull =
        convex_hull_2d({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    CHECK(hull ==
          std::vector<std::vector<double>>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
}

TEST_CASE("convex_hull_2d collapses collinear input to its endpoints") {
    const auto hull = convex_hull_2d({{0, 0}, {1, 0}, {2, 0}, {0.5, 0}});
    CHECK(hull == std::vector<std::vector<double>>{{0, 0}, {2, 0}});
}

TEST_CASE("convex_hull_2d errors") {
    CHECK_THROWS_AS(convex_hull_2d({}), EmptyInput);
    CHECK_THROWS_AS(convex_hull_2d({{1, 2, 3}}), DimensionError);
}

TEST_CASE("hull idempotence and membership on random sets") {
    std::mt19937_64 rng(7101);
    for (int round = 0; round < 50; ++round) {
        const auto pts = random_points(rng, 2 + rng() % 60);
        const auto hull = convex_hull_2d(pts);
        CHECK(convex_hull_2d(hull) == hull);

        const Polytope poly = make_polytope(pts, ClassLabel::Pos, 1);
        for (const auto& q : pts) {
            CAPTURE(round);
            REQUIRE(polytope_contains(poly, q));
        }
    }
}

TEST_CASE("cuts_from_hull matches the edge formula") {
    const auto square = convex_hull_2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto cuts = cuts_from_hull(square);
    REQUIRE(cuts.size() == 4);
    // edge (0,0)->(1,0): below the square
    CHECK(cuts[0].weights == std::vector<double>{0, -1, 0});
    // edge (1,0)->(1,1): right of the square
    CHECK(cuts[1].weights == std::vector<double>{1, 0, -1});

    const auto tri = cuts_from_hull({{0, 0}, {1, 0}, {0, 1}});
    REQUIRE(tri.size() == 3);
    // edge (1,0)->(0,1): fires iff x+y-1 > tol
    CHECK(tri[1].weights == std::vector<double>{1, 1, -1});
}

TEST_CASE("cuts_from_hull rejects degenerate vertex lists") {
    CHECK_THROWS_AS(cuts_from_hull({{0, 0}, {1, 0}}), DegenerateHull);
    CHECK_THROWS_AS(cuts_from_hull({{0, 0}, {1, 0}, {2, 0}}), DegenerateHull);
    // clockwise
    CHECK_THROWS_AS(cuts_from_hull({{0, 0}, {0, 1}, {1, 0}}), DegenerateHull);
}

TEST_CASE("cut orientation points away from the centroid") {
    std::mt19937_64 rng(7102);
    for (int round = 0; round < 30; ++round) {
        const auto pts = random_points(rng, 3 + rng() % 40);
        const auto hull = convex_hull_2d(pts);
        if (hull.size() < 3) continue;
        std::vector<double> centroid{0, 0};
        for (const auto& v : hull) {
            centroid[0] += v[0];
            centroid[1] += v[1];
        }
        centroid[0] /= static_cast<double>(hull.size());
        centroid[1] /= static_cast<double>(hull.size());
        const auto lifted = lift(centroid);
        for (const Cut& cut : cuts_from_hull(hull)) {
            CHECK(cut.value(lifted) < 0.0);
        }
    }
}

TEST_CASE("degenerate_cuts for a point pin exactly that point") {
    const auto cuts = degenerate_cuts({{2, 2}});
    REQUIRE(cuts.size() == 4);
    CHECK(cuts[0].weights == std::vector<double>{1, 0, -2});
    CHECK(cuts[1].weights == std::vector<double>{-1, 0, 2});
    CHECK(cuts[2].weights == std::vector<double>{0, 1, -2});
    CHECK(cuts[3].weights == std::vector<double>{0, -1, 2});

    Polytope p{{{2, 2}}, cuts, ClassLabel::Pos, 1};
    CHECK(polytope_contains(p, std::vector<double>{2, 2}));
    // false at p+(delta,0) for every |delta| > 2*tolerance
    for (double delta : {3e-9, 1e-6, 0.5, -3e-9, -0.25}) {
        CAPTURE(delta);
        CHECK_FALSE(polytope_contains(p, std::vector<double>{2 + delta, 2}));
    }

    const auto origin = degenerate_cuts({{0, 0}});
    CHECK(origin[0].weights == std::vector<double>{1, 0, 0});
    CHECK(origin[1].weights == std::vector<double>{-1, 0, 0});
    CHECK(origin[2].weights == std::vector<double>{0, 1, 0});
    CHECK(origin[3].weights == std::vector<double>{0, -1, 0});
}

TEST_CASE("degenerate_cuts for a segment are lines plus end caps") {
    const auto cuts = degenerate_cuts({{0, 0}, {1, 0}});
    REQUIRE(cuts.size() == 4);
    CHECK(cuts[0].weights == std::vector<double>{0, 1, 0});
    CHECK(cuts[1].weights == std::vector<double>{0, -1, 0});
    CHECK(cuts[2].weights == std::vector<double>{-1, 0, 0});
    CHECK(cuts[3].weights == std::vector<double>{1, 0, -1});

    Polytope seg{{{0, 0}, {1, 0}}, cuts, ClassLabel::Pos, 1};
    CHECK(polytope_contains(seg, std::vector<double>{0.5, 0}));
    CHECK(polytope_contains(seg, std::vector<double>{0, 0}));
    CHECK(polytope_contains(seg, std::vector<double>{1, 0}));
    CHECK_FALSE(polytope_contains(seg, std::vector<double>{1.5, 0}));
    CHECK_FALSE(polytope_contains(seg, std::vector<double>{0.5, 0.1}));
}

TEST_CASE("polytope_contains on the unit square") {
    const Polytope square = make_polytope({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                          ClassLabel::Pos, 1);
    CHECK(polytope_contains(square, std::vector<double>{0.5, 0.5}));
    CHECK_FALSE(polytope_contains(square, std::vector<double>{2, 0.5}));
    // closed membership includes vertices
    CHECK(polytope_contains(square, std::vector<double>{1, 1}));
    CHECK_THROWS_AS(polytope_contains(square, std::vector<double>{1, 2, 3}),
                    DimensionError);
}

TEST_CASE("polytope_contains agrees with the vertex-route oracle") {
    std::mt19937_64 rng(7103);
    for (int round = 0; round < 40; ++round) {
        const auto pts = random_points(rng, 1 + rng() % 30);
        const Polytope poly = make_polytope(pts, ClassLabel::Pos, 1);
        for (int q = 0; q < 50; ++q) {
            const std::vector<double> x{2 * fixtures::uniform01(rng) - 0.5,
                                        2 * fixtures::uniform01(rng) - 0.5};
            // Skip the tolerance band where the two routes may disagree.
            if (nearest_cut_distance({poly}, x) < 1e-7) continue;
            CAPTURE(round, q);
            REQUIRE(polytope_contains(poly, x) ==
                    fixtures::point_in_hull_vertices(poly.vertices, x));
        }
    }
}

TEST_CASE("nearest_cut_distance is the true hyperplane distance") {
    const Polytope square = make_polytope({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                          ClassLabel::Pos, 1);
    CHECK(nearest_cut_distance({square}, std::vector<double>{0.5, 0.5}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(nearest_cut_distance({square}, std::vector<double>{1, 0.5}) ==
          doctest::Approx(0.0).epsilon(1e-12));

    const Polytope tri =
        make_polytope({{0, 0}, {1, 0}, {0, 1}}, ClassLabel::Pos, 1);
    CHECK(nearest_cut_distance({tri}, std::vector<double>{0, 0}) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(nearest_cut_distance({}, std::vector<double>{0, 0}),
                    EmptyInput);
}
