#pragma once

// Shared map builders for the test suites.

#include <stdexcept>
#include <vector>

#include "reuleaux/planar_map.hpp"

namespace testmaps {

inline reuleaux::PlanarMap k4() {
    return reuleaux::PlanarMap::from_rotations({
        {1, 2, 3},
        {0, 3, 2},
        {0, 1, 3},
        {0, 2, 1},
    });
}

// Hub 0 plus rim 1..k.
inline reuleaux::PlanarMap wheel(int k) {
    std::vector<std::vector<int>> rot(k + 1);
    for (int i = 1; i <= k; ++i) rot[0].push_back(i);
    auto rim = [k](int i) { return (i - 1 + k) % k + 1; };
    for (int i = 1; i <= k; ++i) rot[i] = {0, rim(i + 1), rim(i - 1)};
    try {
        return reuleaux::PlanarMap::from_rotations(rot);
    } catch (const reuleaux::InvalidMap&) {
        for (int i = 1; i <= k; ++i) rot[i] = {0, rim(i - 1), rim(i + 1)};
        return reuleaux::PlanarMap::from_rotations(rot);
    }
}

// Prism over a k-gon: inner ring 0..k-1, outer ring k..2k-1.
inline reuleaux::PlanarMap prism(int k) {
    std::vector<std::vector<int>> rot(2 * k);
    for (int i = 0; i < k; ++i) {
        const int succ = (i + 1) % k, pred = (i + k - 1) % k;
        rot[i] = {i + k, succ, pred};
        rot[i + k] = {succ + k, i, pred + k};
    }
    return reuleaux::PlanarMap::from_rotations(rot);
}

inline reuleaux::PlanarMap cube() { return prism(4); }

// Two triangles glued along an edge; {1,2} is a 2-cut.
inline reuleaux::PlanarMap diamond() {
    return reuleaux::PlanarMap::from_rotations({
        {1, 2},
        {0, 2, 3},
        {3, 1, 0},
        {1, 2},
    });
}

// Permutes vertex labels of a map, preserving the rotation system.
inline reuleaux::PlanarMap relabel(const reuleaux::PlanarMap& m, const std::vector<int>& perm) {
    std::vector<std::vector<int>> rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (const int w : m.neighbors(v)) rot[perm[v]].push_back(perm[w]);
    }
    return reuleaux::PlanarMap::from_rotations(rot);
}

}  // namespace testmaps
