#include <doctest.h>

#include <random>

#include "diskiso/error.hpp"
#include "diskiso/graphs.hpp"
#include "diskiso/instance_io.hpp"
#include "support.hpp"

using namespace diskiso;
using testing::kRing3Centroid;

TEST_CASE("intersection_graph examples") {
    const auto g = intersection_graph(testing::ring3());
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));

    const std::vector<Disk> two{{0, {0, 0}, 1}, {1, {5, 0}, 1}};
    const auto g2 = intersection_graph(two);
    CHECK(g2.edge_count() == 0);
    CHECK_FALSE(g2.has_edge(0, 1));

    CHECK(intersection_graph(std::vector<Disk>{}).size() == 0);
}

TEST_CASE("connected_components examples") {
    CHECK(connected_components(intersection_graph(testing::ring3())) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    const std::vector<Disk> two{{4, {0, 0}, 1}, {2, {5, 0}, 1}};
    CHECK(connected_components(intersection_graph(two)) == std::vector<std::vector<int>>{{2}, {4}});
    CHECK(connected_components(intersection_graph(std::vector<Disk>{})).empty());
    CHECK(connected_components(intersection_graph(testing::two_rings())) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("is_forest") {
    CHECK_FALSE(is_forest(intersection_graph(testing::ring3())));
    const std::vector<Disk> chain{{0, {0, 0}, 1}, {1, {1.5, 0}, 1}, {2, {3, 0}, 1}};
    CHECK(is_forest(intersection_graph(chain)));
}

TEST_CASE("augmented_st_graph examples") {
    const auto ring = testing::ring3();
    const auto g = augmented_st_graph(ring, kRing3Centroid, {5, 5});
    CHECK(g.source_neighbors == std::vector<std::size_t>{0, 1, 2});
    CHECK(g.target_neighbors == std::vector<std::size_t>{0, 1, 2});

    const auto dr = testing::double_ring();
    const auto g2 = augmented_st_graph(dr, {0, 0}, {20, 20});
    CHECK(g2.source_neighbors == std::vector<std::size_t>{0, 1, 2});
    CHECK(g2.target_neighbors == std::vector<std::size_t>{3, 4, 5, 6, 7, 8, 9, 10});

    const std::vector<Disk> one{{0, {0, 0}, 1}};
    try {
        augmented_st_graph(one, {-3, 0}, {3, 0});
        FAIL("expected NotSeparated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSeparated);
    }
}

TEST_CASE("shortest_disk_sequence examples") {
    const auto ring = testing::ring3();
    const auto sigma = shortest_disk_sequence(augmented_st_graph(ring, kRing3Centroid, {5, 5}));
    CHECK(sigma.disk_ids == std::vector<int>{0});

    const auto dr = testing::double_ring();
    const auto g = augmented_st_graph(dr, {0, 0}, {20, 20});
    const auto s2 = shortest_disk_sequence(g);
    REQUIRE(s2.size() == 2);
    CHECK(s2.disk_ids[0] < 3);
    CHECK(s2.disk_ids[1] >= 3);
    CHECK(sigma_path_valid(s2, dr));
    // Lexicographically smallest: disk 0 first, then its smallest outer neighbour.
    CHECK(s2.disk_ids[0] == 0);
    int smallest = -1;
    for (std::size_t j = 3; j < dr.size(); ++j) {
        if (disks_overlap(dr[0], dr[j])) {
            smallest = dr[j].id;
            break;
        }
    }
    CHECK(s2.disk_ids[1] == smallest);
}

TEST_CASE("shortest_disk_sequence: NoPath") {
    AugmentedSTGraph g;
    g.graph = intersection_graph(std::vector<Disk>{{0, {0, 0}, 1}, {1, {5, 0}, 1}});
    g.source_neighbors = {0};
    g.target_neighbors = {1};
    try {
        shortest_disk_sequence(g);
        FAIL("expected NoPath");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoPath);
    }
}

TEST_CASE("sigma invariant on generated instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 6 + seed % 10;
        Instance inst;
        try {
            inst = generate_random_instance(n, 2, 1.3 * std::sqrt(static_cast<double>(n)), seed);
        } catch (const Error&) {
            continue;
        }
        const auto g = augmented_st_graph(inst.disks, inst.points[0], inst.points[1]);
        const auto sigma = shortest_disk_sequence(g);
        CHECK(sigma_path_valid(sigma, inst.disks));
    }
}
