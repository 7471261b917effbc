#include <doctest.h>

#include <random>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"
#include "diskiso/graphs.hpp"
#include "diskiso/instance_io.hpp"
#include "diskiso/oracle.hpp"
#include "support.hpp"

using namespace diskiso;
using testing::kRing3Centroid;

TEST_CASE("exact_min_separator examples") {
    const auto ring = testing::ring3();
    const std::vector<Point> pts{kRing3Centroid, {5, 5}};
    const auto r = exact_min_separator(ring, pts);
    CHECK(r.ids == std::vector<int>{0, 1, 2});
    // Every subset of sizes 0..2 was tried first: 1 + 3 + 3, then the full set.
    CHECK(r.subsets_checked == 8);
    CHECK(grid_flood_separates(ring, pts[0], pts[1]));
    for (int drop = 0; drop < 3; ++drop) {
        std::vector<int> two;
        for (int id = 0; id < 3; ++id)
            if (id != drop) two.push_back(id);
        CHECK_FALSE(grid_flood_separates(testing::subset(ring, two), pts[0], pts[1]));
        CHECK_FALSE(subset_separates(ring, two, pts));
    }

    CHECK(exact_min_separator(testing::ring4(), std::vector<Point>{{0, 0}, {9, 9}}).ids.size() == 4);
    CHECK(exact_min_separator(ring, std::vector<Point>{kRing3Centroid}).ids.empty());
}

TEST_CASE("exact_min_two_point examples") {
    CHECK(exact_min_two_point(testing::ring3(), kRing3Centroid, {5, 5}).ids.size() == 3);
    CHECK(exact_min_two_point(testing::ring4(), {0, 0}, {9, 9}).ids.size() == 4);
}

TEST_CASE("exact_min_separator: errors") {
    std::vector<Disk> many;
    for (int i = 0; i < 21; ++i) many.push_back({i, {3.0 * i, 0}, 1});
    try {
        exact_min_separator(many, std::vector<Point>{{0, 5}});
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
    try {
        exact_min_separator(testing::ring3(), std::vector<Point>{{5, 5}, {6, 6}});
        FAIL("expected InvalidInstance");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInstance);
    }
}

TEST_CASE("exact_min_separator: minimality certificate and serial agreement") {
    int runs = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const std::size_t n = 8 + seed % 6;
        Instance inst;
        try {
            inst = generate_random_instance(n, 3, 1.3 * std::sqrt(static_cast<double>(n)), seed);
        } catch (const Error&) {
            continue;
        }
        OracleOptions par, ser;
        ser.execution = Execution::Serial;
        const auto a = exact_min_separator(inst.disks, inst.points, par);
        const auto b = exact_min_separator(inst.disks, inst.points, ser);
        CHECK(a.ids == b.ids);
        CHECK(a.subsets_checked == b.subsets_checked);
        CHECK(subset_separates(inst.disks, a.ids, inst.points));
        for (std::size_t drop = 0; drop < a.ids.size(); ++drop) {
            auto fewer = a.ids;
            fewer.erase(fewer.begin() + static_cast<long>(drop));
            CHECK_FALSE(subset_separates(inst.disks, fewer, inst.points));
        }
        ++runs;
    }
    CHECK(runs >= 20);
}

TEST_CASE("exact_min_separator: sampled subsets") {
    OracleOptions options;
    options.sample_stride = 2;
    const auto r = exact_min_separator(testing::ring3(), std::vector<Point>{kRing3Centroid, {5, 5}}, options);
    // Subsets 0, 2, 4, 6 of the 8 enumerated.
    CHECK(r.sampled_subsets.size() == 4);
    CHECK(r.sampled_subsets[0].empty());
}

TEST_CASE("forest pre-check never skips a separating subset") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(0, 4);
    int forests = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Disk> disks;
        const int n = 2 + trial % 8;
        for (int i = 0; i < n; ++i) disks.push_back({i, {c(rng), c(rng)}, 1});
        disks = perturb_to_general_position(disks, {}, {}, trial).first;
        if (!is_forest(intersection_graph(disks))) continue;
        ++forests;
        CHECK(complement_face_count(disks) == 1);
    }
    CHECK(forests > 1000);
}

TEST_CASE("grid_flood_separates examples") {
    const std::vector<Disk> one{{0, {0, 0}, 1}};
    CHECK_FALSE(grid_flood_separates(one, {-3, 0}, {3, 0}));
    CHECK(grid_flood_separates(testing::ring3(), kRing3Centroid, {5, 5}));
    CHECK_FALSE(grid_flood_separates(std::vector<Disk>{}, {0, 0}, {1, 1}));
    CHECK(grid_flood_separates(testing::ring4(), {0, 0}, {9, 9}));
    CHECK(grid_flood_separates(testing::double_ring(), {0, 0}, {20, 20}));
}

TEST_CASE("grid_flood_verdict refines and gives up") {
    // The ring hole is narrow: the first cell size is capped by the clearance.
    const auto v = grid_flood_verdict(testing::ring3(), kRing3Centroid, {5, 5});
    CHECK(v.separated);
    CHECK(v.resolution < 0.02);

    const std::vector<Disk> one{{0, {0, 0}, 1}};
    try {
        grid_flood_verdict(one, {1 + 1e-5, 0}, {5, 5});
        FAIL("expected ResolutionExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResolutionExhausted);
    }
}
