#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "diskiso/geom.hpp"

namespace diskiso {

/// Pins a chain endpoint to a point of a circle (given by disk position and
/// angle) so the endpoint becomes a vertex of that circle.
struct ChainAnchor {
    std::size_t disk_index = 0;
    double angle = 0.0;
};

/// A polyline; consecutive waypoints are joined by straight segments.
struct Chain {
    std::vector<Point> waypoints;
    std::optional<ChainAnchor> head;
    std::optional<ChainAnchor> tail;

    std::size_t segment_count() const { return waypoints.size() < 2 ? 0 : waypoints.size() - 1; }
};

/// Planar arrangement of a set of circles and one chain, stored as a
/// half-edge structure. Faces of this arrangement have constant disk
/// membership, which is what disk pieces are assembled from.
class CutArrangement {
public:
    struct HalfEdge {
        int origin = -1;
        int dest = -1;
        int circle = -1;   // disk position, or -1 for a chain segment
        int segment = -1;  // chain segment index, or -1 for an arc
        double start_angle = 0.0;
        double sweep = 0.0;  // signed: > 0 counterclockwise on the circle
        Point from, to;
        int twin = -1;
        int next = -1;
        int cycle = -1;
        double direction = 0.0;  // tangent angle at the origin
    };

    struct Face {
        bool unbounded = false;
        std::vector<int> cycles;
        std::vector<char> inside;  // per disk position
        Point sample;              // a point near the boundary, inside the face
    };

    /// Two faces meeting along an edge; `circle` is -1 when the edge is part
    /// of the chain.
    struct Adjacency {
        std::size_t a = 0;
        std::size_t b = 0;
        int circle = -1;
    };

    CutArrangement(std::span<const Disk> disks, const Chain& chain, const Tolerance& tol = {});

    const std::vector<Disk>& disks() const { return disks_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Adjacency>& adjacencies() const { return adjacencies_; }

    std::size_t face_of_half_edge(int h) const { return face_of_cycle_[half_edges_[h].cycle]; }

private:
    void build_vertices(const Chain& chain);
    void build_edges(const Chain& chain);
    void link_vertices();
    void trace_cycles();
    void assign_faces();
    void label_faces();

    bool ray_hits_cycle_odd(Point p, Point u, int cycle, bool& degenerate) const;

    std::vector<Disk> disks_;
    Tolerance tol_;

    std::vector<Point> vertices_;
    // (parameter, vertex) incidences per curve
    std::vector<std::vector<std::pair<double, int>>> on_circle_;
    std::vector<std::vector<std::pair<double, int>>> on_segment_;

    std::vector<HalfEdge> half_edges_;
    std::vector<std::vector<int>> outgoing_;

    std::vector<std::vector<int>> cycles_;  // half-edge ids per cycle
    std::vector<double> cycle_area_;
    std::vector<std::size_t> face_of_cycle_;

    std::vector<Face> faces_;
    std::vector<Adjacency> adjacencies_;
};

}  // namespace diskiso
