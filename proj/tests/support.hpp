#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "diskiso/geom.hpp"

namespace diskiso::testing {

// Equilateral ring of three unit disks with side 1.8; the hole contains the centroid.
inline std::vector<Disk> ring3(Point offset = {}, int first_id = 0) {
    const double h = 0.9 * std::sqrt(3.0);
    return {{first_id, Point{0, 0} + offset, 1},
            {first_id + 1, Point{1.8, 0} + offset, 1},
            {first_id + 2, Point{0.9, h} + offset, 1}};
}
inline const Point kRing3Centroid{0.9, 0.5196152};

// Unit disks at (±1.2, 0), (0, ±1.2) around the origin.
inline std::vector<Disk> ring4() {
    return {{0, {1.2, 0}, 1}, {1, {-1.2, 0}, 1}, {2, {0, 1.2}, 1}, {3, {0, -1.2}, 1}};
}

// Three unit disks at radius 1.04 around the origin inside a ring of eight
// unit disks at radius 2.5.
inline std::vector<Disk> double_ring() {
    std::vector<Disk> out;
    for (int i = 0; i < 3; ++i) {
        const double a = std::numbers::pi / 2 + i * 2 * std::numbers::pi / 3;
        out.push_back({i, {1.04 * std::cos(a), 1.04 * std::sin(a)}, 1});
    }
    for (int i = 0; i < 8; ++i) {
        const double a = 0.1 + i * std::numbers::pi / 4;
        out.push_back({3 + i, {2.5 * std::cos(a), 2.5 * std::sin(a)}, 1});
    }
    return out;
}

// Two copies of ring3, the second shifted by dx.
inline std::vector<Disk> two_rings(double dx = 10) {
    auto out = ring3();
    for (const Disk& d : ring3({dx, 0}, 3)) out.push_back(d);
    return out;
}

inline std::vector<Disk> subset(const std::vector<Disk>& disks, const std::vector<int>& ids) {
    std::vector<Disk> out;
    for (const Disk& d : disks) {
        if (std::find(ids.begin(), ids.end(), d.id) != ids.end()) out.push_back(d);
    }
    return out;
}

inline std::vector<int> ids_of(const std::vector<Disk>& disks) {
    std::vector<int> out;
    for (const Disk& d : disks) out.push_back(d.id);
    return out;
}

}  // namespace diskiso::testing
