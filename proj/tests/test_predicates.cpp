#include <catch2/catch_amalgamated.hpp>

#include "islands/predicates.hpp"
#include "test_helpers.hpp"

using namespace islands;
using islands::testing::pt;
using islands::testing::ptq;

TEST_CASE("orientation basic signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orient::ccw);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orient::collinear);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, -1)) == Orient::cw);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Point a(make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)),
                make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)));
        Point b(make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)),
                make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)));
        Point c(make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)),
                make_rat(islands::testing::rand_below(rng, 41) - 20, 1 + islands::testing::rand_below(rng, 7)));
        Orient o = orientation(a, b, c);
        Orient swapped = orientation(b, a, c);
        CHECK(static_cast<int>(o) == -static_cast<int>(swapped));
        Orient rotated = orientation(b, c, a);
        CHECK(o == rotated);
    }
}

TEST_CASE("orientation is translation invariant") {
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        auto coord = [&rng]() {
            return make_rat(islands::testing::rand_below(rng, 2001) - 1000, 1 + islands::testing::rand_below(rng, 97));
        };
        Point a(coord(), coord()), b(coord(), coord()), c(coord(), coord());
        Rat tx = coord(), ty = coord();
        Point at(a.x + tx, a.y + ty), bt(b.x + tx, b.y + ty), ct(c.x + tx, c.y + ty);
        CHECK(orientation(a, b, c) == orientation(at, bt, ct));
    }
}

TEST_CASE("orientation exact on nearly-degenerate rationals") {
    // differences far below double resolution around a large offset:
    // a sits a hair left of the downward line b->c, i.e. on its right side
    Point a(parse_rat("1000000000/1") - parse_rat("1/1000000000000"), make_rat(0));
    Point b(make_rat(1000000000), make_rat(1));
    Point c(make_rat(1000000000), make_rat(-1));
    CHECK(orientation(b, c, a) == Orient::cw);
    Point a2(parse_rat("1000000000/1") + parse_rat("1/1000000000000"), make_rat(0));
    CHECK(orientation(b, c, a2) == Orient::ccw);
    Point on_line(parse_rat("1/3"), parse_rat("1/3"));
    CHECK(orientation(pt(0, 0), pt(3, 3), on_line) == Orient::collinear);
}

TEST_CASE("cross_sign matches orientation") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        Point a = pt(islands::testing::rand_below(rng, 21) - 10, islands::testing::rand_below(rng, 21) - 10);
        Point b = pt(islands::testing::rand_below(rng, 21) - 10, islands::testing::rand_below(rng, 21) - 10);
        Point c = pt(islands::testing::rand_below(rng, 21) - 10, islands::testing::rand_below(rng, 21) - 10);
        CHECK(cross_sign(a, b, a, c) == orientation(a, b, c));
    }
}

TEST_CASE("direction_less orders the full circle") {
    Point o = pt(0, 0);
    std::vector<Point> dirs = {pt(1, 0), pt(2, 1), pt(0, 1), pt(-3, 1), pt(-1, 0), pt(-2, -1), pt(0, -2), pt(5, -1)};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j) {
            if (i < j) CHECK(direction_less(o, dirs[i], dirs[j]));
            if (i >= j) CHECK_FALSE(direction_less(o, dirs[i], dirs[j]));
        }
}

TEST_CASE("rational parse and format round-trip") {
    CHECK(format_rat(parse_rat("3/6")) == "1/2");
    CHECK(format_rat(parse_rat("-2.75")) == "-11/4");
    CHECK(format_rat(parse_rat("7")) == "7/1");
    CHECK(parse_rat("0.5") == make_rat(1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
    CHECK(decimal_string(make_rat(-11, 4), 3) == "-2.750");
}

TEST_CASE("sqrt bounds bracket the root") {
    Rat q = make_rat(2);
    auto [lo, hi] = sqrt_bounds(q, 40);
    CHECK(lo * lo <= q);
    CHECK(hi * hi >= q);
    CHECK(hi - lo <= pow2(-39));
}
