#include <catch2/catch_amalgamated.hpp>

#include "islands/algos.hpp"
#include "test_helpers.hpp"

using namespace islands;
using islands::testing::crossing_fixture;
using islands::testing::make_instance;
using islands::testing::pt;
using islands::testing::random_test_instance;
using islands::testing::rbrb_square;

TEST_CASE("disjoint greedy on a single color") {
    Instance inst = make_instance({pt(0, 0), pt(3, 1), pt(1, 4), pt(2, 2)}, {0, 0, 0, 0}, 1);
    Partition p = disjoint_greedy(inst);
    REQUIRE(p.parts.size() == 1);
    CHECK(p.parts[0].members == std::vector<int>{0, 1, 2, 3});
    CHECK(verify_partition(inst, p).pass);
}

TEST_CASE("disjoint greedy on the four-corner fixture") {
    Instance inst = rbrb_square();
    Partition p = disjoint_greedy(inst);
    REQUIRE(p.parts.size() == 3);
    CHECK(p.parts[0].members == std::vector<int>{0, 2});  // lexicographic winner of the tie
    CHECK(p.parts[1].members.size() == 1);
    CHECK(p.parts[2].members.size() == 1);
    CHECK(verify_partition(inst, p).pass);
}

TEST_CASE("disjoint greedy always returns a valid partition") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Instance inst = random_test_instance(4 + seed % 9, 2 + seed % 2, 4000 + seed, seed % 2 == 0);
        Partition p = disjoint_greedy(inst);
        Report r = verify_partition(inst, p);
        INFO("seed " << seed << ": " << r.violation);
        CHECK(r.pass);
    }
}

TEST_CASE("overlap greedy on the four-corner fixture") {
    Instance inst = rbrb_square();
    Cover c = overlap_greedy(inst);
    REQUIRE(c.islands.size() == 2);
    CHECK(c.islands[0].members == std::vector<int>{0, 2});
    CHECK(c.islands[1].members == std::vector<int>{1, 3});
    CHECK(c.uncovered_counts == std::vector<long long>{2, 2});
    CHECK(verify_cover(inst, c).pass);
}

TEST_CASE("overlap greedy covers the crossing fixture with the four lines") {
    Instance inst = crossing_fixture(2);
    Cover c = overlap_greedy(inst);
    REQUIRE(c.islands.size() == 4);
    CHECK(c.islands[0].members == std::vector<int>{0, 1, 2});
    CHECK(c.islands[1].members == std::vector<int>{3, 4, 5});
    CHECK(c.islands[2].members == std::vector<int>{6, 7, 8});
    CHECK(c.islands[3].members == std::vector<int>{9, 10, 11});
    CHECK(verify_cover(inst, c).pass);
    CHECK(max_pairwise_boundary_intersections(c) == 1);
}

TEST_CASE("overlap greedy gains are non-increasing and islands valid") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        Instance inst = random_test_instance(4 + seed % 9, 2 + seed % 2, 5000 + seed, seed % 2 == 0);
        Cover c = overlap_greedy(inst);
        CHECK(verify_cover(inst, c).pass);
        for (size_t i = 0; i + 1 < c.uncovered_counts.size(); ++i)
            CHECK(c.uncovered_counts[i] >= c.uncovered_counts[i + 1]);
        for (const Island& isl : c.islands) CHECK(is_island(isl.members, inst));
    }
}

TEST_CASE("bold overlap greedy on the four-corner fixture") {
    Instance inst = rbrb_square();
    BoldResult r = bold_overlap_greedy(inst);
    REQUIRE(r.partition.parts.size() == 3);
    CHECK(verify_partition(inst, r.partition).pass);
    CHECK(verify_compatible(inst, r.cover, r.families).pass);
    // the first diagonal was split by the second; the later one stays whole
    CHECK(r.families.families[0].size() == 2);
    CHECK(r.families.families[1].size() == 1);
    CHECK(r.families.families[1][0].members == std::vector<int>{1, 3});
}

TEST_CASE("bold overlap greedy on the crossing fixture") {
    Instance inst = crossing_fixture(2);
    BoldResult r = bold_overlap_greedy(inst, 5);
    CHECK(r.partition.parts.size() == 8);
    CHECK(verify_partition(inst, r.partition).pass);
    CHECK(verify_compatible(inst, r.cover, r.families).pass);
}

TEST_CASE("extraction keeps disjoint covers unchanged") {
    Instance inst = make_instance({pt(0, 0), pt(1, 0), pt(10, 10), pt(11, 10)}, {0, 0, 1, 1}, 2);
    Cover c = overlap_greedy(inst);
    REQUIRE(c.islands.size() == 2);
    Subdivision sub = empty_subdivision();
    for (const Island& isl : c.islands) sub = bold_augment(sub, isl);
    auto [partition, fams] = extract_compatible_partition(sub, c, inst);
    REQUIRE(partition.parts.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        REQUIRE(fams.families[i].size() == 1);
        CHECK(fams.families[i][0].members == c.islands[i].members);
    }
}

TEST_CASE("set-cover guarantee against the exact cover optimum") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Instance inst = random_test_instance(4 + seed % 7, 2, 6000 + seed, false);
        Cover c = overlap_greedy(inst);
        ExactCoverResult opt = exact_min_cover(inst);
        Rat bound = harmonic(inst.size()) * Rat(static_cast<long>(opt.value));
        CHECK(cmp(Rat(static_cast<long>(c.islands.size())), bound) <= 0);
    }
}

TEST_CASE("scaling coordinates changes no algorithm output") {
    Instance inst = random_test_instance(9, 2, 7777, true);
    Instance scaled = inst;
    Rat factor = make_rat(3, 7);
    for (Point& p : scaled.pts) p = Point(p.x * factor, p.y * factor);

    Partition p1 = disjoint_greedy(inst);
    Partition p2 = disjoint_greedy(scaled);
    REQUIRE(p1.parts.size() == p2.parts.size());
    for (size_t i = 0; i < p1.parts.size(); ++i) CHECK(p1.parts[i].members == p2.parts[i].members);

    Cover c1 = overlap_greedy(inst);
    Cover c2 = overlap_greedy(scaled);
    REQUIRE(c1.islands.size() == c2.islands.size());
    for (size_t i = 0; i < c1.islands.size(); ++i) CHECK(c1.islands[i].members == c2.islands[i].members);
}

TEST_CASE("crossing-bound property on small random instances") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        Instance inst = random_test_instance(5 + seed % 6, 2 + seed % 2, 8000 + seed, true);
        Cover c = overlap_greedy(inst);
        long long opt = exact_min_partition(inst).value;
        CHECK(max_pairwise_boundary_intersections(c) <= 2 * opt);
    }
}
