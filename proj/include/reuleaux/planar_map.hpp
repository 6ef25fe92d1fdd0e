#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reuleaux {

// Raised when a dart structure does not describe a connected genus-0 map.
struct InvalidMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One face of a map, as traced from the rotation system.
struct Face {
    int id = -1;
    std::vector<int> darts;              // boundary darts in face order
    std::vector<int> boundary_vertices;  // origin of each boundary dart
    int size = 0;                        // edge count (with multiplicity)

    bool contains_vertex(int v) const;
};

// Dart-based combinatorial embedding of a connected planar multigraph.
//
// Darts 2k and 2k+1 are the two halves of edge k, so twin(d) == d ^ 1.
// next(d) is the dart following d counter-clockwise around origin(d).
// Instances are immutable after construction; faces are traced eagerly.
class PlanarMap {
public:
    // Builds a map from raw permutations. Throws InvalidMap unless `next`
    // is a permutation whose orbits are exactly the darts grouped by
    // origin, the map is connected, and Euler's formula V - E + F = 2
    // holds (i.e. the rotation system has genus 0).
    static PlanarMap from_permutations(int vertex_count,
                                       std::vector<int> next,
                                       std::vector<int> origin);

    // Builds a map of a simple graph from per-vertex neighbor lists in
    // counter-clockwise rotation order.
    static PlanarMap from_rotations(const std::vector<std::vector<int>>& neighbors_ccw);

    int vertex_count() const { return vertex_count_; }
    int dart_count() const { return static_cast<int>(next_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int twin(int d) const { return d ^ 1; }
    int next(int d) const { return next_[d]; }
    int prev(int d) const { return prev_[d]; }
    int origin(int d) const { return origin_[d]; }
    int head(int d) const { return origin_[d ^ 1]; }
    // Face permutation: successor of d along the boundary of face_of(d).
    int face_next(int d) const { return next_[d ^ 1]; }
    int face_of(int d) const { return face_of_[d]; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }

    int degree(int v) const { return degree_[v]; }
    // Some dart with the given origin.
    int dart_at(int v) const { return first_dart_[v]; }
    // Darts out of v in counter-clockwise order, starting at dart_at(v).
    std::vector<int> rotation(int v) const;
    // Heads of rotation(v), i.e. the neighbor list in rotation order.
    std::vector<int> neighbors(int v) const;

    bool simple() const { return simple_; }
    bool adjacent(int u, int v) const;

    PlanarMap dual() const;
    bool is_three_connected() const;
    std::string canonical_form() const;

private:
    PlanarMap() = default;
    void trace_and_validate();

    int vertex_count_ = 0;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> origin_;
    std::vector<int> first_dart_;
    std::vector<int> degree_;
    std::vector<int> face_of_;
    std::vector<Face> faces_;
    bool simple_ = false;
};

// Spec-level operation aliases (the members carry the implementation).
inline const std::vector<Face>& trace_faces(const PlanarMap& m) { return m.faces(); }
inline PlanarMap dual(const PlanarMap& m) { return m.dual(); }
inline bool is_three_connected(const PlanarMap& m) { return m.is_three_connected(); }
inline std::string canonical_form(const PlanarMap& m) { return m.canonical_form(); }

// True when both maps have the same vertex count and, per vertex, equal
// neighbor sequences up to cyclic rotation (same rotation system).
bool same_rotation_system(const PlanarMap& a, const PlanarMap& b);

// Canonical labeling of a simple graph given as adjacency lists; returns
// a byte string equal for two graphs iff they are isomorphic.
std::string canonical_graph_bytes(int n, const std::vector<std::vector<int>>& adj);

// Exhaustive 2-subset deletion + connectivity scan on a simple graph.
bool graph_three_connected(int n, const std::vector<std::vector<int>>& adj);

}  // namespace reuleaux
