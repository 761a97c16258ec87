#include <catch2/catch_amalgamated.hpp>

#include "islands/arrangement.hpp"
#include "test_helpers.hpp"

using namespace islands;
using islands::testing::crossing_fixture;
using islands::testing::make_instance;
using islands::testing::pt;

namespace {

bool euler_holds(const Subdivision& sub) {
    return sub.vertex_count - sub.edge_count + sub.face_count == 1 + sub.component_count;
}

}  // namespace

TEST_CASE("empty subdivision") {
    Subdivision sub = empty_subdivision();
    CHECK(sub.vertex_count == 0);
    CHECK(sub.edge_count == 0);
    CHECK(sub.face_count == 1);
    CHECK(sub.component_count == 0);
    CHECK(euler_holds(sub));
    CHECK(faces(sub).empty());
    CHECK(validate(sub).pass);
}

TEST_CASE("inserting one triangle") {
    Instance inst = make_instance({pt(0, 0), pt(4, 0), pt(0, 4)}, {0, 0, 0}, 1);
    Island tri = Island::of(inst, {0, 1, 2});
    Subdivision sub = bold_augment(empty_subdivision(), tri);
    CHECK(sub.vertex_count == 3);
    CHECK(sub.edge_count == 3);
    CHECK(sub.face_count == 2);
    CHECK(sub.component_count == 1);
    CHECK(euler_holds(sub));
    CHECK(sub.last_step.face_increase == 1);
    CHECK(sub.last_step.component_change == 1);
    CHECK(sub.last_step.faces_equal_new_hull == 1);
    CHECK(validate(sub).pass);
    std::vector<FaceRecord> recs = faces(sub);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].owner == 0);
    CHECK(polygons_equal(recs[0].closure, tri.hull));
}

TEST_CASE("two disjoint triangles") {
    Instance inst = make_instance({pt(0, 0), pt(4, 0), pt(0, 4), pt(10, 0), pt(14, 0), pt(10, 4)},
                                  {0, 0, 0, 0, 0, 0}, 1);
    Subdivision sub = empty_subdivision();
    sub = bold_augment(sub, Island::of(inst, {0, 1, 2}));
    sub = bold_augment(sub, Island::of(inst, {3, 4, 5}), 1);  // disjoint insertion within any bound
    CHECK(sub.face_count == 3);
    CHECK(sub.component_count == 2);
    CHECK(euler_holds(sub));
    CHECK(sub.last_step.face_increase == 1);
    CHECK(sub.last_step.component_change == 1);
    CHECK(faces(sub).size() == 2);
    CHECK(validate(sub).pass);
}

TEST_CASE("clipping one corner of an earlier triangle") {
    // T2's single edge cuts the corner of T1 at (6,0) and (7,1)
    Instance inst = make_instance(
        {pt(0, 0), pt(8, 0), pt(0, 8), pt(5, -1), pt(9, 3), pt(9, -1)},
        {0, 0, 0, 1, 1, 1}, 2);
    Island t1 = Island::of(inst, {0, 1, 2});
    Island t2 = Island::of(inst, {3, 4, 5});
    Subdivision sub = bold_augment(empty_subdivision(), t1);
    sub = bold_augment(sub, t2);
    CHECK(euler_holds(sub));
    CHECK(sub.last_step.contact_points == 2);
    CHECK(validate(sub).pass);

    std::vector<FaceRecord> recs = faces(sub);
    REQUIRE(recs.size() == 2);
    CHECK(sub.last_step.faces_equal_new_hull == 1);
    bool saw_t1 = false, saw_t2 = false;
    for (const FaceRecord& r : recs) {
        if (r.owner == 0) {
            saw_t1 = true;
            // T1's face lost the clipped corner: quad (0,0),(6,0),(7,1),(0,8)
            REQUIRE(r.closure.size() == 4);
            CHECK(r.closure.verts[0] == pt(0, 0));
            CHECK(r.closure.verts[1] == pt(6, 0));
            CHECK(r.closure.verts[2] == pt(7, 1));
            CHECK(r.closure.verts[3] == pt(0, 8));
        }
        if (r.owner == 1) {
            saw_t2 = true;
            CHECK(polygons_equal(r.closure, t2.hull));
        }
    }
    CHECK(saw_t1);
    CHECK(saw_t2);
}

TEST_CASE("bound violations are reported") {
    Instance inst = make_instance(
        {pt(0, 0), pt(8, 0), pt(0, 8), pt(5, -1), pt(9, 3), pt(9, -1)},
        {0, 0, 0, 1, 1, 1}, 2);
    Subdivision sub = bold_augment(empty_subdivision(), Island::of(inst, {0, 1, 2}));
    CHECK_THROWS_AS(bold_augment(sub, Island::of(inst, {3, 4, 5}), 0), Error);
}

TEST_CASE("validator flags corrupted twins") {
    Instance inst = make_instance({pt(0, 0), pt(4, 0), pt(0, 4)}, {0, 0, 0}, 1);
    Subdivision sub = bold_augment(empty_subdivision(), Island::of(inst, {0, 1, 2}));
    REQUIRE(validate(sub).pass);
    Subdivision corrupted = sub;
    corrupted.half[0].twin = 0;
    Report r = validate(corrupted);
    CHECK_FALSE(r.pass);
    CHECK(r.violation == "twin involution");
}

TEST_CASE("validator flags a reflex face") {
    // a later island whose corner pokes into an earlier one leaves a reflex remainder
    Instance inst = make_instance(
        {pt(0, 0), pt(10, 0), pt(0, 10), pt(3, 3), pt(12, 3), pt(3, 12)},
        {0, 0, 0, 1, 1, 1}, 2);
    Subdivision sub = bold_augment(empty_subdivision(), Island::of(inst, {0, 1, 2}));
    sub = bold_augment(sub, Island::of(inst, {3, 4, 5}));
    CHECK(euler_holds(sub));
    Report r = validate(sub);
    CHECK_FALSE(r.pass);
    CHECK(r.violation == "non-convex face");
}

TEST_CASE("crossing segment islands split earlier pieces only") {
    Instance inst = crossing_fixture(2);
    // greedy selection order: columns, then rows
    std::vector<Island> order = {Island::of(inst, {0, 1, 2}), Island::of(inst, {3, 4, 5}),
                                 Island::of(inst, {6, 7, 8}), Island::of(inst, {9, 10, 11})};
    Subdivision sub = empty_subdivision();
    std::vector<long long> expected_fstar = {1, 2, 5, 8};
    for (size_t i = 0; i < order.size(); ++i) {
        sub = bold_augment(sub, order[i], 5);
        CHECK(euler_holds(sub));
        CHECK(sub.last_step.faces_equal_new_hull == 1);
        CHECK(sub.f_star == expected_fstar[i]);
        CHECK(validate(sub).pass);
    }
    std::vector<FaceRecord> recs = faces(sub);
    CHECK(recs.size() == 8);
    // the rows were inserted last and stay whole
    long long row_pieces = 0;
    for (const FaceRecord& r : recs)
        if (r.owner >= 2) ++row_pieces;
    CHECK(row_pieces == 2);
}

TEST_CASE("triple crossings are rejected") {
    Instance inst = make_instance(
        {pt(-2, 0), pt(2, 0), pt(0, -2), pt(0, 2), pt(-2, -2), pt(2, 2)},
        {0, 0, 1, 1, 2, 2}, 3);
    Subdivision sub = empty_subdivision();
    sub = bold_augment(sub, Island::of(inst, {0, 1}));
    sub = bold_augment(sub, Island::of(inst, {2, 3}));
    CHECK_THROWS_AS(bold_augment(sub, Island::of(inst, {4, 5})), Error);
}

TEST_CASE("collinear overlap is rejected") {
    Instance inst = make_instance({pt(0, 0), pt(4, 0), pt(2, 0), pt(6, 0)}, {0, 0, 1, 1}, 2);
    Subdivision sub = bold_augment(empty_subdivision(), Island::of(inst, {0, 1}));
    CHECK_THROWS_AS(bold_augment(sub, Island::of(inst, {2, 3})), Error);
}

TEST_CASE("debug dump is deterministic and complete") {
    Instance inst = crossing_fixture(1);
    Subdivision sub = empty_subdivision();
    sub = bold_augment(sub, Island::of(inst, {0, 1}));
    sub = bold_augment(sub, Island::of(inst, {2, 3}));
    std::string d1 = debug_dump(sub);
    std::string d2 = debug_dump(bold_augment(bold_augment(empty_subdivision(), Island::of(inst, {0, 1})),
                                             Island::of(inst, {2, 3})));
    CHECK(d1 == d2);
    CHECK(d1.find("subdivision islands=2") != std::string::npos);
    CHECK(d1.find("halfedge") != std::string::npos);
    CHECK(d1.find("piece") != std::string::npos);
}

TEST_CASE("point islands survive or merge into later hulls") {
    Instance inst = make_instance({pt(5, 5), pt(0, 0), pt(20, 0), pt(0, 20)}, {0, 1, 1, 1}, 2);
    Subdivision sub = bold_augment(empty_subdivision(), Island::of(inst, {0}));
    CHECK(sub.f_star == 1);
    CHECK(sub.vertex_count == 1);
    CHECK(euler_holds(sub));
    CHECK(validate(sub).pass);
    sub = bold_augment(sub, Island::of(inst, {1, 2, 3}));
    // the isolated point sits strictly inside the triangle and is absorbed
    CHECK(sub.vertex_count == 3);
    CHECK(sub.f_star == 1);
    CHECK(euler_holds(sub));
    CHECK(validate(sub).pass);
}
