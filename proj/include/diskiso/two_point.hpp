#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/arrangement.hpp"
#include "diskiso/cut_arrangement.hpp"
#include "diskiso/geom.hpp"
#include "diskiso/graphs.hpp"

namespace diskiso {

/// The cutting path. Only the chain s' -> x_1 -> ... -> t' is materialized;
/// the legs from s to s' and from t' to t run through complement faces and
/// cut nothing.
struct PiPath {
    std::vector<Point> waypoints;  // s', x_1, ..., x_{|σ|-1}, t'
    FaceSignature source_face;
    FaceSignature target_face;
    ChainAnchor head;  // s' on the circle of the first σ disk
    ChainAnchor tail;  // t' on the circle of the last σ disk

    Chain chain() const { return Chain{waypoints, head, tail}; }
};

struct DiskPiece {
    int disk_id = 0;
    int piece_id = 0;
    std::vector<std::size_t> faces;  // faces of the cut arrangement
    Point representative;
};

struct PieceGraph {
    std::vector<DiskPiece> pieces;                  // indexed by piece_id
    std::vector<std::vector<std::size_t>> adjacency;  // sorted piece ids

    std::vector<int> pieces_of(int disk_id) const;
};

/// Picks s' and t' as midpoints of the longest arcs of the first and last σ
/// disks that bound the faces of s and t, and each x_i as the centre of the
/// lens d_i ∩ d_{i+1}. Throws PiConstructionFailed if the chain is not
/// covered by σ or meets some σ disk in more than one interval.
PiPath choose_waypoints(const SigmaPath& sigma, const UnionBoundary& ub, Point s, Point t);

/// True if the chain parameters inside `disk` form a single interval.
bool chain_meets_disk_connectedly(const Chain& chain, const Disk& disk, const Tolerance& tol = {});

/// Connected components of each disk minus the chain, with piece ids
/// assigned disk by disk in input order.
std::vector<DiskPiece> cut_into_pieces(const CutArrangement& arrangement);
std::vector<DiskPiece> cut_into_pieces(std::span<const Disk> disks, const PiPath& pi,
                                       const Tolerance& tol = {});

/// Pieces of different disks are adjacent iff they share an arrangement face.
PieceGraph piece_graph(std::vector<DiskPiece> pieces);

struct PieceCycle {
    int disk_id = 0;                  // the σ disk whose two pieces are joined
    std::vector<std::size_t> pieces;  // piece ids along the path, endpoints included
    std::vector<int> disk_ids;        // owners of those pieces, sorted and unique
};

/// Over all σ disks, the shortest path in H between the disk's two pieces.
PieceCycle best_piece_cycle(const PieceGraph& h, const SigmaPath& sigma);

struct TwoPointResult {
    std::vector<int> ids;  // B, sorted
    std::vector<int> component;
    SigmaPath sigma;
    PiPath pi;
    PieceGraph pieces;
    PieceCycle cycle;
};

/// Separates s from t with a subset of G. Every connected component of the
/// intersection graph that separates the points is solved on its own and the
/// smallest answer is returned. The result is re-verified before returning.
TwoPointResult separate_two_points(std::span<const Disk> disks, Point s, Point t,
                                   const Tolerance& tol = {});

}  // namespace diskiso
