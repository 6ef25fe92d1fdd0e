#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reuleaux/planar_map.hpp"

namespace reuleaux {

// Labeled candidate: n vertices, exactly 2n-2 edges, min degree >= 3.
struct CandidateGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographic

    std::vector<std::vector<int>> adjacency() const;
    bool connected() const;
};

// Internal generation is desk-scale only; larger n must come from
// planar_code files.
struct SizeCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kInternalGenerationCap = 9;

// Yields every simple labeled graph on {0..n-1} with 2n-2 edges and min
// degree >= 3, in lexicographic edge-set order. The visitor returns false
// to stop early.
void enumerate_candidates(int n, const std::function<bool(const CandidateGraph&)>& visit);

// Returns a rotation system realizing g in the sphere, or nullopt if g is
// not planar. Face-by-face insertion (Demoucron-Malgrange-Pertuiset) per
// biconnected block, quadratic and embedding-producing.
std::optional<PlanarMap> planarity_embed(const CandidateGraph& g);

// All 3-connected planar maps with n vertices and 2n-2 edges, up to
// isomorphism, sorted by canonical form.
std::vector<PlanarMap> census_internal(int n);
std::vector<PlanarMap> census_from_maps(int n, const std::vector<PlanarMap>& maps);
std::vector<PlanarMap> census_from_file(int n, const std::string& path);

}  // namespace reuleaux
