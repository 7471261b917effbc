#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/arrangement.hpp"
#include "diskiso/geom.hpp"

namespace diskiso {

/// Vertices are positions into `disks`; `adjacency` lists are sorted.
struct IntersectionGraph {
    std::vector<Disk> disks;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t size() const { return disks.size(); }
    std::size_t edge_count() const;
    bool has_edge(std::size_t a, std::size_t b) const;
};

IntersectionGraph intersection_graph(std::span<const Disk> disks, const Tolerance& tol = {});

/// Components as sorted disk-id lists, ordered by their smallest id.
std::vector<std::vector<int>> connected_components(const IntersectionGraph& g);

/// True if the intersection graph has no cycle. A union of disks whose
/// intersection graph is a forest has a connected complement.
bool is_forest(const IntersectionGraph& g);

/// Intersection graph plus terminals s and t (cost 0) joined to the disks
/// bounding the complement faces of s and t.
struct AugmentedSTGraph {
    IntersectionGraph graph;
    Point s, t;
    std::vector<std::size_t> source_neighbors;  // indices into graph.disks
    std::vector<std::size_t> target_neighbors;
};

AugmentedSTGraph augmented_st_graph(std::span<const Disk> disks, Point s, Point t,
                                    const Tolerance& tol = {});
AugmentedSTGraph augmented_st_graph(const UnionBoundary& ub, Point s, Point t);

struct SigmaPath {
    std::vector<int> disk_ids;

    std::size_t size() const { return disk_ids.size(); }
    bool empty() const { return disk_ids.empty(); }
};

/// Fewest-disk s-t path by breadth-first search; among shortest paths the
/// lexicographically smallest disk-id sequence wins.
SigmaPath shortest_disk_sequence(const AugmentedSTGraph& g);

/// Consecutive disks overlap and disks two or more apart do not.
bool sigma_path_valid(const SigmaPath& sigma, std::span<const Disk> disks,
                      const Tolerance& tol = {});

}  // namespace diskiso
