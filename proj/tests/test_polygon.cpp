#include <catch2/catch_amalgamated.hpp>

#include "islands/polygon.hpp"
#include "test_helpers.hpp"

using namespace islands;
using islands::testing::pt;
using islands::testing::ptq;

TEST_CASE("convex hull drops interior points and handles degeneracy") {
    ConvexPolygon square = convex_hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), ptq("1/2", "1/2")});
    CHECK(square.size() == 4);

    ConvexPolygon seg = convex_hull({pt(1, 0), pt(1, 1), pt(1, 2)});
    REQUIRE(seg.is_segment());
    CHECK(seg.verts[0] == pt(1, 0));
    CHECK(seg.verts[1] == pt(1, 2));

    ConvexPolygon single = convex_hull({pt(0, 0)});
    CHECK(single.is_point());

    CHECK_THROWS_AS(convex_hull({}), Error);
}

TEST_CASE("convex hull is idempotent") {
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 9; ++i)
            pts.push_back(pt(islands::testing::rand_below(rng, 15), islands::testing::rand_below(rng, 15)));
        ConvexPolygon h = convex_hull(pts);
        ConvexPolygon h2 = convex_hull(h.verts);
        REQUIRE(h.size() == h2.size());
        for (size_t i = 0; i < h.size(); ++i) CHECK(h.verts[i] == h2.verts[i]);
        for (const Point& p : pts) CHECK(point_in_hull(p, h, Containment::closed));
    }
}

TEST_CASE("point_in_hull open vs closed") {
    ConvexPolygon square = convex_hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    CHECK(point_in_hull(ptq("1/2", "1/2"), square, Containment::closed));
    CHECK(point_in_hull(ptq("1/2", "1/2"), square, Containment::open));
    CHECK(point_in_hull(ptq("0", "1/2"), square, Containment::closed));
    CHECK_FALSE(point_in_hull(ptq("0", "1/2"), square, Containment::open));
    CHECK_FALSE(point_in_hull(pt(2, 2), square, Containment::closed));

    ConvexPolygon seg = convex_hull({pt(1, 0), pt(1, 2)});
    CHECK(point_in_hull(pt(1, 1), seg, Containment::closed));
    CHECK_FALSE(point_in_hull(pt(1, 1), seg, Containment::open));
}

TEST_CASE("hulls_intersect covers degenerate combinations") {
    ConvexPolygon square = convex_hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    ConvexPolygon far_square = convex_hull({pt(5, 5), pt(6, 5), pt(6, 6), pt(5, 6)});
    CHECK_FALSE(hulls_intersect(square, far_square));

    ConvexPolygon seg_v = convex_hull({pt(1, 0), pt(1, 2)});
    ConvexPolygon seg_h = convex_hull({pt(0, 1), pt(2, 1)});
    CHECK(hulls_intersect(seg_v, seg_h));

    ConvexPolygon corner = convex_hull({pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)});
    CHECK(hulls_intersect(square, corner));  // touch at (1,1)

    CHECK(hulls_intersect(square, square));
    ConvexPolygon point_inside = convex_hull({ptq("1/2", "1/2")});
    CHECK(hulls_intersect(point_inside, square));
    CHECK(hulls_intersect(square, point_inside));

    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        std::vector<Point> a, b;
        for (int i = 0; i < 5; ++i) {
            a.push_back(pt(islands::testing::rand_below(rng, 9), islands::testing::rand_below(rng, 9)));
            b.push_back(pt(islands::testing::rand_below(rng, 9), islands::testing::rand_below(rng, 9)));
        }
        ConvexPolygon ha = convex_hull(a), hb = convex_hull(b);
        CHECK(hulls_intersect(ha, hb) == hulls_intersect(hb, ha));
    }
}

TEST_CASE("boundary intersection counts") {
    // two axis-aligned bars crossing in a plus: four boundary points
    ConvexPolygon wide = convex_hull({pt(-2, 0), pt(2, 0), pt(2, 1), pt(-2, 1)});
    ConvexPolygon tall = convex_hull({pt(0, -2), pt(1, -2), pt(1, 3), pt(0, 3)});
    CHECK(boundary_intersection_count(wide, tall) == 4);
    CHECK(boundary_intersection_count(tall, wide) == 4);

    // square against a rotated square: every side crosses two of the other's
    ConvexPolygon square8 = convex_hull({pt(-3, -3), pt(3, -3), pt(3, 3), pt(-3, 3)});
    ConvexPolygon diamond = convex_hull({pt(0, -4), pt(4, 0), pt(0, 4), pt(-4, 0)});
    CHECK(boundary_intersection_count(square8, diamond) == 8);

    ConvexPolygon far_square = convex_hull({pt(10, 10), pt(11, 10), pt(11, 11), pt(10, 11)});
    CHECK(boundary_intersection_count(wide, far_square) == 0);

    ConvexPolygon seg_v = convex_hull({pt(1, 0), pt(1, 2)});
    ConvexPolygon seg_h = convex_hull({pt(0, 1), pt(2, 1)});
    CHECK(boundary_intersection_count(seg_v, seg_h) == 1);

    ConvexPolygon seg_overlap = convex_hull({pt(1, 1), pt(1, 3)});
    CHECK_THROWS_AS(boundary_intersection_count(seg_v, seg_overlap), Error);
}

TEST_CASE("segment_intersection kinds") {
    SegmentIntersection si = segment_intersection(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0));
    REQUIRE(si.kind == SegmentIntersection::Kind::point);
    CHECK(si.p == pt(1, 1));

    CHECK(segment_intersection(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)).kind == SegmentIntersection::Kind::none);
    CHECK(segment_intersection(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)).kind == SegmentIntersection::Kind::overlap);

    // collinear touching at one point
    SegmentIntersection touch = segment_intersection(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0));
    REQUIRE(touch.kind == SegmentIntersection::Kind::point);
    CHECK(touch.p == pt(1, 0));

    // endpoint on interior
    SegmentIntersection tee = segment_intersection(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5));
    REQUIRE(tee.kind == SegmentIntersection::Kind::point);
    CHECK(tee.p == pt(1, 0));
}

TEST_CASE("boundary count equals brute force on random polygon pairs") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 30) {
        std::vector<Point> a, b;
        for (int i = 0; i < 6; ++i) {
            a.push_back(pt(islands::testing::rand_below(rng, 12), islands::testing::rand_below(rng, 12)));
            b.push_back(pt(islands::testing::rand_below(rng, 12), islands::testing::rand_below(rng, 12)));
        }
        ConvexPolygon ha = convex_hull(a), hb = convex_hull(b);
        if (ha.size() < 3 || hb.size() < 3) continue;
        long count;
        try {
            count = boundary_intersection_count(ha, hb);
        } catch (const Error&) {
            continue;  // collinear overlap, rejected by contract
        }
        // independent recount: collect intersection points of all edge pairs
        std::vector<Point> found;
        for (size_t i = 0; i < ha.size(); ++i)
            for (size_t j = 0; j < hb.size(); ++j) {
                SegmentIntersection si =
                    segment_intersection(ha.verts[i], ha.verts[(i + 1) % ha.size()], hb.verts[j],
                                         hb.verts[(j + 1) % hb.size()]);
                if (si.kind == SegmentIntersection::Kind::point) {
                    bool dup = false;
                    for (const Point& q : found) dup = dup || q == si.p;
                    if (!dup) found.push_back(si.p);
                }
            }
        CHECK(count == static_cast<long>(found.size()));
        ++done;
    }
}

TEST_CASE("area and clipping") {
    ConvexPolygon square = convex_hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
    CHECK(area2(square) == make_rat(8));
    // the big triangle covers the square's upper-right unit cell
    ConvexPolygon tri = convex_hull({pt(1, 1), pt(5, 1), pt(1, 5)});
    CHECK(intersection_area2(square.verts, tri) == make_rat(2));
    // a triangle fully inside clips to itself
    ConvexPolygon corner = convex_hull({pt(1, 1), pt(2, 1), pt(1, 2)});
    CHECK(intersection_area2(square.verts, corner) == make_rat(1));
}
