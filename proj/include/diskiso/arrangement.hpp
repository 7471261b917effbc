#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/geom.hpp"

namespace diskiso {

/// A maximal piece of one circle that lies on the boundary of the union.
/// Arcs run counterclockwise on their own circle, so the union is always on
/// the left: outer boundaries come out counterclockwise and holes clockwise.
struct Arc {
    int disk_id = 0;
    std::size_t disk_index = 0;  // position in UnionBoundary::disks()
    double start_angle = 0.0;    // in [0, 2π)
    double sweep = 0.0;          // counterclockwise extent, (0, 2π]
    Point start, end;
    bool full_circle = false;
    int start_vertex = -1;  // -1 for full circles
    int end_vertex = -1;

    double end_angle() const { return normalize_angle(start_angle + sweep); }
    double mid_angle() const { return normalize_angle(start_angle + sweep / 2); }
};

struct BoundaryCycle {
    int cycle_id = 0;
    std::vector<Arc> arcs;
    double signed_area = 0.0;  // > 0 for outer boundaries, < 0 for holes

    bool is_hole() const { return signed_area < 0; }
};

/// Identity of a complement face: the set of boundary cycles enclosing it.
struct FaceSignature {
    bool covered = false;
    std::vector<int> enclosing_cycles;  // sorted; empty when covered

    friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
    friend auto operator<=>(const FaceSignature&, const FaceSignature&) = default;
};

class UnionBoundary {
public:
    explicit UnionBoundary(std::span<const Disk> disks, const Tolerance& tol = {});

    const std::vector<Disk>& disks() const { return disks_; }
    const std::vector<BoundaryCycle>& cycles() const { return cycles_; }
    const Tolerance& tolerance() const { return tol_; }
    std::size_t arc_count() const;

    /// Containment of p in the union: Inside if p is strictly inside some disk.
    /// Throws DegenerateInput if p is within eps of a circle and inside none.
    bool covers(Point p) const;

    FaceSignature signature(Point p) const;

    /// Signature of the complement face on the outer side of a cycle, and the
    /// probe point (just off the cycle's longest arc) used to compute it.
    const FaceSignature& cycle_face(int cycle_id) const { return cycle_faces_.at(cycle_id); }
    Point cycle_probe(int cycle_id) const { return cycle_probes_.at(cycle_id); }

    /// Ids of disks owning an arc on some cycle that bounds p's face.
    std::vector<int> face_boundary_disks(Point p) const;

    /// Cycles (ids) that bound the complement face with the given signature.
    std::vector<int> cycles_bounding(const FaceSignature& face) const;

    std::size_t complement_face_count() const;

private:
    std::vector<Disk> disks_;
    Tolerance tol_;
    std::vector<BoundaryCycle> cycles_;
    std::vector<FaceSignature> cycle_faces_;
    std::vector<Point> cycle_probes_;
};

inline UnionBoundary union_boundary(std::span<const Disk> disks, const Tolerance& tol = {}) {
    return UnionBoundary(disks, tol);
}

inline FaceSignature enclosure_signature(const UnionBoundary& ub, Point p) {
    return ub.signature(p);
}

/// True iff every path from p to q meets a disk: either point is covered or
/// the two lie in different complement faces.
bool separates(std::span<const Disk> disks, Point p, Point q, const Tolerance& tol = {});
bool separates(const UnionBoundary& ub, Point p, Point q);

/// Groups point indices by complement face, in order of first appearance.
/// Every point must be uncovered.
std::vector<std::vector<std::size_t>> partition_by_face(std::span<const Disk> disks,
                                                        std::span<const Point> points,
                                                        const Tolerance& tol = {});
std::vector<std::vector<std::size_t>> partition_by_face(const UnionBoundary& ub,
                                                        std::span<const Point> points);

std::vector<int> face_boundary_disks(std::span<const Disk> disks, Point p,
                                     const Tolerance& tol = {});

std::size_t complement_face_count(std::span<const Disk> disks, const Tolerance& tol = {});

namespace detail {

/// Parameters λ > 0 where the ray p + λu crosses the circle of d. Sets
/// `degenerate` when the ray is within eps of tangency.
struct RayHits {
    double lambda[2];
    int count = 0;
    const double* begin() const { return lambda; }
    const double* end() const { return lambda + count; }
};
RayHits ray_circle_hits(Point p, Point u, const Disk& d, const Tolerance& tol, bool& degenerate);

/// Unit direction drawn from a fixed-seed generator; attempt selects the draw.
Point ray_direction(int attempt);

inline constexpr int kRayRetries = 32;

}  // namespace detail

}  // namespace diskiso
