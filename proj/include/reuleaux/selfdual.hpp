#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "reuleaux/planar_map.hpp"

namespace reuleaux {

// A vertex -> face assignment certifying strong involutive self-duality.
struct SelfDualIso {
    std::vector<int> tau;
};

// Graph on V(M) whose edges are the pairs {u,v} with v on the face tau(u).
struct DiameterGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<uint64_t> adjacency;         // bitmask per vertex

    bool has_edge(int u, int v) const { return (adjacency[u] >> v) & 1u; }
    int degree(int v) const;
};

// Per-vertex sets of still-possible faces plus the worklist of directed
// edges to re-check. Face sets are bitmasks (the pipeline never needs
// more than 64 faces).
struct CandidateDomains {
    std::vector<uint64_t> face_sets;
    std::deque<std::pair<int, int>> worklist;

    bool any_empty() const;
};

// Support structure shared by propagation and search.
struct DualityContext {
    std::vector<uint64_t> vertex_adj;      // vertex -> vertex mask
    std::vector<uint64_t> face_adj;        // face -> face mask (shared edge)
    std::vector<uint64_t> face_members;    // face -> vertex mask
    std::vector<uint64_t> faces_with;      // vertex -> face mask (faces containing it)

    explicit DualityContext(const PlanarMap& map);
};

CandidateDomains init_domains(const PlanarMap& map);

// AC-3 over the isomorphism constraint: a face stays in F_u only while
// every neighboring variable still has a dually adjacent candidate.
CandidateDomains propagate_arc_consistency(CandidateDomains domains, const PlanarMap& map);

// Backtracking search for strongly involutive self-dualities. Branches on
// the smallest remaining domain, faces in ascending id order; results are
// deterministic. limit == 0 means unlimited.
std::vector<SelfDualIso> search_strong_involutions(const PlanarMap& map, size_t limit = 0);

// Independent re-check of all five invariants: bijection, degree match,
// adjacency preservation, fixed-point freeness, involutivity.
bool certify_strong_involution(const PlanarMap& map, const std::vector<int>& tau);

DiameterGraph diameter_graph(const PlanarMap& map, const SelfDualIso& iso);

}  // namespace reuleaux
