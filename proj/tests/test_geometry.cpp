#include <cmath>
#include <random>

#include "doctest.h"
#include "geokiss/geometry.hpp"

using namespace geokiss::geom;

namespace {

Shape unit_disk(double x, double y) { return Ball{{x, y}, 1.0}; }

}  // namespace

TEST_CASE("disk pair contact classes") {
    CHECK(intersects(unit_disk(0, 0), unit_disk(2, 0)));
    CHECK_FALSE(intersects(unit_disk(0, 0), unit_disk(2.001, 0)));
    CHECK(classify(unit_disk(0, 0), unit_disk(2, 0)) == Contact::touching);
    CHECK(classify(unit_disk(0, 0), unit_disk(2.001, 0)) == Contact::disjoint);
    CHECK(classify(unit_disk(0, 0), unit_disk(1, 0)) == Contact::overlapping);

    CHECK_FALSE(non_touching(unit_disk(0, 0), unit_disk(2, 0)));
    CHECK(non_touching(unit_disk(0, 0), unit_disk(2 + 1e-6, 0)));
    CHECK_FALSE(non_touching(unit_disk(0, 0), unit_disk(0, 0)));

    CHECK_FALSE(interiors_overlap(unit_disk(0, 0), unit_disk(2, 0)));
    CHECK(interiors_overlap(unit_disk(0, 0), unit_disk(1, 0)));
    CHECK_FALSE(interiors_overlap(unit_disk(0, 0), unit_disk(3, 0)));
}

TEST_CASE("tolerance band around tangency") {
    // inside the default 1e-9 band counts as touching
    CHECK(classify(unit_disk(0, 0), unit_disk(2 + 1e-10, 0)) == Contact::touching);
    CHECK(classify(unit_disk(0, 0), unit_disk(2 - 1e-10, 0)) == Contact::touching);
    CHECK(classify(unit_disk(0, 0), unit_disk(2 + 1e-8, 0)) == Contact::disjoint);
    CHECK(classify(unit_disk(0, 0), unit_disk(2 - 1e-8, 0)) == Contact::overlapping);
    // and the band is adjustable per call
    CHECK(classify(unit_disk(0, 0), unit_disk(2 + 1e-8, 0), 1e-7) == Contact::touching);
}

TEST_CASE("axis box pairs") {
    const Shape a = AxisHypercube{{0.0, 0.0}, 1.0};
    CHECK(intersects(a, AxisHypercube{{1.0, 0.0}, 1.0}));  // shared edge
    CHECK(classify(a, AxisHypercube{{1.0, 0.0}, 1.0}) == Contact::touching);
    CHECK(classify(a, AxisHypercube{{0.9, 0.0}, 1.0}) == Contact::overlapping);
    CHECK(classify(a, AxisHypercube{{1.1, 0.3}, 1.0}) == Contact::disjoint);
    // corner-to-corner contact is still touching
    CHECK(classify(a, AxisHypercube{{1.0, 1.0}, 1.0}) == Contact::touching);

    const Shape c3 = AxisHypercube{{0.0, 0.0, 0.0}, 1.0};
    CHECK(classify(c3, AxisHypercube{{1.0, 0.0, 0.0}, 1.0}) == Contact::touching);
    CHECK(classify(c3, AxisHypercube{{0.5, 0.5, 0.5}, 1.0}) == Contact::overlapping);
    CHECK(classify(c3, AxisHypercube{{2.0, 0.0, 0.0}, 1.0}) == Contact::disjoint);
}

TEST_CASE("balls in higher dimension") {
    const Shape a = Ball{{0.0, 0.0, 0.0}, 1.0};
    CHECK(classify(a, Ball{{2.0, 0.0, 0.0}, 1.0}) == Contact::touching);
    CHECK(classify(a, Ball{{1.0, 1.0, 1.0}, 1.0}) == Contact::overlapping);
    const Shape b4 = Ball{{0.0, 0.0, 0.0, 0.0}, 1.5};
    CHECK(classify(b4, Ball{{3.0, 0.0, 0.0, 0.0}, 1.5}) == Contact::touching);
}

TEST_CASE("regular polygons and mixed pairs") {
    // k=4 with circumradius sqrt(1/2) rotated 45 degrees is the axis unit square
    const Shape sq = RegularKGon{{0.0, 0.0}, 4, std::sqrt(0.5), std::acos(-1.0) / 4};
    const Shape box = AxisHypercube{{1.0, 0.0}, 1.0};
    CHECK(classify(sq, box) == Contact::touching);
    CHECK(classify(sq, AxisHypercube{{0.9, 0.0}, 1.0}) == Contact::overlapping);
    CHECK(classify(sq, AxisHypercube{{1.2, 0.0}, 1.0}) == Contact::disjoint);

    const Shape hex = RegularKGon{{0.0, 0.0}, 6, 1.0, 0.0};
    CHECK(classify(hex, unit_disk(3.0, 0.0)) == Contact::disjoint);
    // hexagon vertex at (1,0) meets a disk of radius 1 centered at (2,0)
    CHECK(classify(hex, unit_disk(2.0, 0.0)) == Contact::touching);
    CHECK(classify(hex, unit_disk(1.5, 0.0)) == Contact::overlapping);

    const Shape tri = ConvexPolygon{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}};
    CHECK(classify(tri, ConvexPolygon{{{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}}}) ==
          Contact::touching);
    CHECK(classify(tri, ConvexPolygon{{{2.0, 2.0}, {3.0, 2.0}, {2.0, 3.0}}}) ==
          Contact::disjoint);
    // vertex resting on the hypotenuse
    CHECK(classify(tri, ConvexPolygon{{{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}}}) ==
          Contact::touching);
}

TEST_CASE("prisms") {
    const std::vector<Point> base{{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
    const Shape a = Prism{base, {{-0.5, 0.5}}};
    const Shape b = Prism{base, {{0.5, 1.5}}};  // stacked on top, shares a face
    CHECK(a.dimension() == 3);
    CHECK(classify(a, b) == Contact::touching);
    CHECK(classify(a, Prism{base, {{0.4, 1.4}}}) == Contact::overlapping);
    CHECK(classify(a, Prism{base, {{0.6, 1.6}}}) == Contact::disjoint);
    // axis cubes take the same path in 3-D
    CHECK(classify(a, AxisHypercube{{1.0, 0.0, 0.0}, 1.0}) == Contact::touching);
}

TEST_CASE("unsupported and mismatched pairs") {
    CHECK_THROWS_AS(classify(unit_disk(0, 0), Ball{{0.0, 0.0, 0.0}, 1.0}), DimensionMismatch);
    // no exact predicate for ball against box above the plane
    CHECK_THROWS_AS(classify(Ball{{0.0, 0.0, 0.0}, 1.0}, AxisHypercube{{0.0, 0.0, 0.0}, 1.0}),
                    UnsupportedPair);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS((Shape{Ball{{0.0, 0.0}, -1.0}}), GeometryError);
    CHECK_THROWS_AS((Shape{AxisHypercube{{0.0, 0.0}, 0.0}}), GeometryError);
    CHECK_THROWS_AS((Shape{RegularKGon{{0.0, 0.0}, 2, 1.0, 0.0}}), GeometryError);
    // clockwise winding is rejected
    CHECK_THROWS_AS((Shape{ConvexPolygon{{{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}}}}),
                    GeometryError);
    // reflex chain is rejected
    CHECK_THROWS_AS(
        (Shape{ConvexPolygon{{{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.1}, {0.0, 2.0}}}}),
        GeometryError);
}

TEST_CASE("convex distance") {
    const Shape disk = Ball{{0.0, 0.0}, 1.0};
    CHECK(convex_distance(disk, {0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(convex_distance(disk, {2, 2}, {2, 2}) == 0.0);

    const Shape square2 = AxisHypercube{{0.0, 0.0}, 2.0};
    CHECK(convex_distance(square2, {0, 0}, {2, 0}) == doctest::Approx(2.0));
    CHECK(convex_distance(square2, {0, 0}, {2, 2}) == doctest::Approx(2.0));

    const Shape hex = RegularKGon{{0.0, 0.0}, 6, 1.0, 0.0};
    // vertex direction: boundary hit at distance 1
    CHECK(convex_distance(hex, {0, 0}, {2, 0}) == doctest::Approx(2.0));
    // edge-midpoint direction: boundary at the inradius
    const double inr = std::cos(std::acos(-1.0) / 6);
    CHECK(convex_distance(hex, {0, 0}, {0, 2}) == doctest::Approx(2.0 / inr));

    // reference shape must contain the origin strictly inside
    CHECK_THROWS_AS(convex_distance(Shape{Ball{{5.0, 5.0}, 1.0}}, {0, 0}, {1, 1}),
                    GeometryError);
    CHECK_THROWS_AS(convex_distance(Shape{Ball{{1.0, 0.0}, 1.0}}, {0, 0}, {1, 1}),
                    GeometryError);
}

TEST_CASE("convex distance properties") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    std::uniform_real_distribution<double> t01(0.0, 1.0);
    const Shape disk = Ball{{0.0, 0.0}, 1.0};
    const Shape square = AxisHypercube{{0.0, 0.0}, 2.0};
    for (int it = 0; it < 200; ++it) {
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)}, z{u(rng), u(rng)};
        for (const Shape* c : {&disk, &square}) {
            const double dxy = convex_distance(*c, x, y);
            const double dyz = convex_distance(*c, y, z);
            const double dxz = convex_distance(*c, x, z);
            CHECK(dxz <= dxy + dyz + 1e-9);
            const double t = 2.0 * t01(rng);
            const Point mid{x[0] + t * (y[0] - x[0]), x[1] + t * (y[1] - x[1])};
            CHECK(convex_distance(*c, x, mid) == doctest::Approx(t * dxy).epsilon(1e-9));
        }
    }
}

TEST_CASE("convex distance to a set") {
    const Shape disk = Ball{{0.0, 0.0}, 1.0};
    CHECK(convex_distance_to_set(disk, {3, 0}, disk) == doctest::Approx(2.0));
    CHECK(convex_distance_to_set(disk, {0.5, 0}, disk) == 0.0);
    CHECK(convex_distance_to_set(disk, {4, 0}, Shape{Ball{{0.0, 0.0}, 2.0}}) ==
          doctest::Approx(2.0));

    // square reference measures a scaled Chebyshev distance
    const Shape square2 = AxisHypercube{{0.0, 0.0}, 2.0};
    const Shape target = AxisHypercube{{0.0, 0.0}, 1.0};
    CHECK(convex_distance_to_set(square2, {3, 0}, target) == doctest::Approx(2.5).epsilon(1e-6));
    CHECK(convex_distance_to_set(square2, {0, 0}, target) == 0.0);

    // numeric fallback for polygon targets
    const Shape tri = ConvexPolygon{{{1.0, -1.0}, {1.0, 1.0}, {-1.0, 0.0}}};
    CHECK(convex_distance_to_set(disk, {3, 0}, tri) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("fatness metadata") {
    const FatMeta ball = fat_meta(Shape{Ball{{0.0, 0.0}, 1.5}});
    CHECK(ball.alpha == doctest::Approx(1.0));
    CHECK(ball.width == doctest::Approx(1.5));
    CHECK(ball.height == doctest::Approx(1.5));

    const FatMeta sq = fat_meta(Shape{AxisHypercube{{0.0, 0.0}, 2.0}});
    CHECK(sq.alpha == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(sq.width == doctest::Approx(1.0));
    CHECK(sq.height == doctest::Approx(std::sqrt(2.0)));

    const FatMeta hex = fat_meta(Shape{RegularKGon{{0.0, 0.0}, 6, 1.0, 0.0}});
    CHECK(hex.alpha == doctest::Approx(std::cos(std::acos(-1.0) / 6)));
    CHECK(hex.width == doctest::Approx(std::cos(std::acos(-1.0) / 6)));
    CHECK(hex.height == doctest::Approx(1.0));

    CHECK_THROWS_AS(fat_meta(Shape{ConvexPolygon{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}}}),
                    UnsupportedPair);
}

TEST_CASE("containment") {
    CHECK(contains_point(Shape{Ball{{0.0, 0.0}, 1.0}}, {0.5, 0.5}));
    CHECK(contains_point(Shape{Ball{{0.0, 0.0}, 1.0}}, {1.0, 0.0}));
    CHECK_FALSE(contains_point(Shape{Ball{{0.0, 0.0}, 1.0}}, {1.1, 0.0}));
    CHECK(contains_point(Shape{AxisHypercube{{0.0, 0.0}, 1.0}}, {0.5, 0.5}));
    CHECK_FALSE(contains_point(Shape{AxisHypercube{{0.0, 0.0}, 1.0}}, {0.6, 0.0}));
    CHECK(contains_point(Shape{RegularKGon{{0.0, 0.0}, 3, 1.0, 0.0}}, {0.0, 0.0}));
    CHECK_FALSE(contains_point(Shape{RegularKGon{{0.0, 0.0}, 3, 1.0, 0.0}}, {-0.9, 0.0}));
}

namespace {

Shape random_shape_2d(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-3.0, 3.0), size(0.3, 1.6), ang(0.0, 6.28);
    std::uniform_int_distribution<int> kind(0, 2), sides(3, 8);
    const Point c{pos(rng), pos(rng)};
    switch (kind(rng)) {
        case 0: return Ball{c, size(rng)};
        case 1: return AxisHypercube{c, size(rng)};
        default: return RegularKGon{c, sides(rng), size(rng), ang(rng)};
    }
}

}  // namespace

TEST_CASE("predicate symmetry and trichotomy on random pairs") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 400; ++it) {
        const Shape a = random_shape_2d(rng), b = random_shape_2d(rng);
        CHECK(classify(a, b) == classify(b, a));
        const int hits = int(non_touching(a, b)) +
                         int(intersects(a, b) && !interiors_overlap(a, b)) +
                         int(interiors_overlap(a, b));
        CHECK(hits == 1);
    }
}

TEST_CASE("polygon square path agrees with the exact box path") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> pos(-2.0, 2.0), side(0.4, 1.5);
    const double quarter = std::acos(-1.0) / 4;
    int same = 0;
    for (int it = 0; it < 300; ++it) {
        const Point c1{pos(rng), pos(rng)}, c2{pos(rng), pos(rng)};
        const double s1 = side(rng), s2 = side(rng);
        const Contact exact =
            classify(Shape{AxisHypercube{c1, s1}}, Shape{AxisHypercube{c2, s2}});
        const Contact poly = classify(
            Shape{RegularKGon{c1, 4, s1 * std::sqrt(0.5), quarter}},
            Shape{RegularKGon{c2, 4, s2 * std::sqrt(0.5), quarter}});
        same += exact == poly;
    }
    CHECK(same == 300);
}
