#include "reuleaux/planar_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reuleaux {

bool Face::contains_vertex(int v) const {
    return std::find(boundary_vertices.begin(), boundary_vertices.end(), v) !=
           boundary_vertices.end();
}

PlanarMap PlanarMap::from_permutations(int vertex_count,
                                       std::vector<int> next,
                                       std::vector<int> origin) {
    PlanarMap m;
    m.vertex_count_ = vertex_count;
    m.next_ = std::move(next);
    m.origin_ = std::move(origin);
    m.trace_and_validate();
    return m;
}

PlanarMap PlanarMap::from_rotations(const std::vector<std::vector<int>>& neighbors_ccw) {
    const int n = static_cast<int>(neighbors_ccw.size());
    if (n == 0) throw InvalidMap("empty map");

    // position of v in u's list; simple graphs only, so it is unique
    std::vector<std::map<int, int>> pos(n);
    int total_darts = 0;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(neighbors_ccw[u].size()); ++i) {
            const int v = neighbors_ccw[u][i];
            if (v < 0 || v >= n) throw InvalidMap("neighbor out of range");
            if (v == u) throw InvalidMap("loop in rotation list");
            if (!pos[u].emplace(v, i).second)
                throw InvalidMap("duplicate neighbor in rotation list");
            ++total_darts;
        }
    }
    if (total_darts == 0) throw InvalidMap("empty map");

    // dart id at (u, position i); edge k gets darts 2k, 2k+1
    std::vector<std::vector<int>> dart_at(n);
    for (int u = 0; u < n; ++u) dart_at[u].assign(neighbors_ccw[u].size(), -1);
    int edge = 0;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(neighbors_ccw[u].size()); ++i) {
            const int v = neighbors_ccw[u][i];
            auto it = pos[v].find(u);
            if (it == pos[v].end()) throw InvalidMap("asymmetric adjacency");
            if (u < v) {
                dart_at[u][i] = 2 * edge;
                dart_at[v][it->second] = 2 * edge + 1;
                ++edge;
            }
        }
    }
    if (2 * edge != total_darts) throw InvalidMap("asymmetric adjacency");

    std::vector<int> next(total_darts, -1), origin(total_darts, -1);
    for (int u = 0; u < n; ++u) {
        const int deg = static_cast<int>(dart_at[u].size());
        for (int i = 0; i < deg; ++i) {
            const int d = dart_at[u][i];
            origin[d] = u;
            next[d] = dart_at[u][(i + 1) % deg];
        }
    }
    return from_permutations(n, std::move(next), std::move(origin));
}

void PlanarMap::trace_and_validate() {
    const int D = dart_count();
    if (vertex_count_ < 1) throw InvalidMap("vertex count must be positive");
    if (D == 0 || D % 2 != 0) throw InvalidMap("dart count must be positive and even");
    if (origin_.size() != next_.size()) throw InvalidMap("array size mismatch");

    std::vector<int> seen(D, 0);
    for (int d = 0; d < D; ++d) {
        if (next_[d] < 0 || next_[d] >= D) throw InvalidMap("next out of range");
        if (origin_[d] < 0 || origin_[d] >= vertex_count_)
            throw InvalidMap("origin out of range");
        seen[next_[d]]++;
    }
    for (int d = 0; d < D; ++d)
        if (seen[d] != 1) throw InvalidMap("next is not a permutation");

    prev_.assign(D, -1);
    for (int d = 0; d < D; ++d) prev_[next_[d]] = d;

    // orbits of next must be exactly the darts grouped by origin
    degree_.assign(vertex_count_, 0);
    first_dart_.assign(vertex_count_, -1);
    std::vector<int> orbit_of(D, -1);
    int orbits = 0;
    for (int d = 0; d < D; ++d) {
        if (orbit_of[d] >= 0) continue;
        const int v = origin_[d];
        int e = d;
        do {
            if (origin_[e] != v) throw InvalidMap("rotation orbit spans two vertices");
            orbit_of[e] = orbits;
            ++degree_[v];
            e = next_[e];
        } while (e != d);
        ++orbits;
    }
    int vertices_with_darts = 0;
    for (int v = 0; v < vertex_count_; ++v)
        if (degree_[v] > 0) ++vertices_with_darts;
    if (vertices_with_darts != vertex_count_)
        throw InvalidMap("isolated vertex");
    if (orbits != vertex_count_)
        throw InvalidMap("vertex has a disconnected rotation");
    for (int d = D - 1; d >= 0; --d) first_dart_[origin_[d]] = d;

    // connectivity of the dart orbit under {twin, next}
    std::vector<int> stack{0};
    std::vector<char> reached(D, 0);
    reached[0] = 1;
    int reach_count = 1;
    while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (const int e : {d ^ 1, next_[d]}) {
            if (!reached[e]) {
                reached[e] = 1;
                ++reach_count;
                stack.push_back(e);
            }
        }
    }
    if (reach_count != D) throw InvalidMap("map is not connected");

    // face orbits of d -> next(twin(d))
    face_of_.assign(D, -1);
    faces_.clear();
    for (int d = 0; d < D; ++d) {
        if (face_of_[d] >= 0) continue;
        Face f;
        f.id = static_cast<int>(faces_.size());
        int e = d;
        do {
            face_of_[e] = f.id;
            f.darts.push_back(e);
            f.boundary_vertices.push_back(origin_[e]);
            e = next_[e ^ 1];
        } while (e != d);
        f.size = static_cast<int>(f.darts.size());
        faces_.push_back(std::move(f));
    }

    const int euler = vertex_count_ - edge_count() + face_count();
    if (euler != 2) throw InvalidMap("rotation system is not spherical (V-E+F = " +
                                     std::to_string(euler) + ")");

    simple_ = true;
    for (int v = 0; v < vertex_count_ && simple_; ++v) {
        auto nb = neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (size_t i = 0; i < nb.size() && simple_; ++i) {
            if (nb[i] == v) simple_ = false;
            if (i + 1 < nb.size() && nb[i] == nb[i + 1]) simple_ = false;
        }
    }
}

std::vector<int> PlanarMap::rotation(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    const int d0 = first_dart_[v];
    int d = d0;
    do {
        out.push_back(d);
        d = next_[d];
    } while (d != d0);
    return out;
}

std::vector<int> PlanarMap::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    for (const int d : rotation(v)) out.push_back(head(d));
    return out;
}

bool PlanarMap::adjacent(int u, int v) const {
    const int d0 = first_dart_[u];
    int d = d0;
    do {
        if (head(d) == v) return true;
        d = next_[d];
    } while (d != d0);
    return false;
}

PlanarMap PlanarMap::dual() const {
    const int D = dart_count();
    std::vector<int> next(D), origin(D);
    for (int d = 0; d < D; ++d) {
        next[d] = face_next(d);
        origin[d] = face_of_[d];
    }
    return from_permutations(face_count(), std::move(next), std::move(origin));
}

namespace {

std::vector<std::vector<int>> simple_adjacency(const PlanarMap& m) {
    std::vector<std::vector<int>> adj(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto nb = m.neighbors(v);
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        nb.erase(std::remove(nb.begin(), nb.end(), v), nb.end());
        adj[v] = std::move(nb);
    }
    return adj;
}

}  // namespace

bool PlanarMap::is_three_connected() const {
    return graph_three_connected(vertex_count_, simple_adjacency(*this));
}

bool graph_three_connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n < 4) return false;
    std::vector<char> blocked(n, 0), reached(n, 0);
    std::vector<int> stack;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            blocked[a] = blocked[b] = 1;
            int start = -1;
            for (int v = 0; v < n; ++v)
                if (!blocked[v]) { start = v; break; }
            std::fill(reached.begin(), reached.end(), 0);
            stack.assign(1, start);
            reached[start] = 1;
            int count = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (const int w : adj[v]) {
                    if (!blocked[w] && !reached[w]) {
                        reached[w] = 1;
                        ++count;
                        stack.push_back(w);
                    }
                }
            }
            blocked[a] = blocked[b] = 0;
            if (count != n - 2) return false;
        }
    }
    return true;
}

namespace {

// Equitable refinement of an ordered partition. Cells are lists of
// vertices; the cell order is isomorphism-invariant because splits are
// ordered by neighbor-count signatures, never by vertex ids.
struct Refiner {
    const std::vector<std::vector<int>>& adj;
    int n;

    explicit Refiner(const std::vector<std::vector<int>>& a)
        : adj(a), n(static_cast<int>(a.size())) {}

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        std::vector<int> cell_of(n);
        while (changed) {
            changed = false;
            for (size_t c = 0; c < cells.size(); ++c)
                for (const int v : cells[c]) cell_of[v] = static_cast<int>(c);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() <= 1) continue;
                // signature: per-cell neighbor counts
                std::map<std::vector<int>, std::vector<int>> groups;
                for (const int v : cells[c]) {
                    std::vector<int> sig(cells.size(), 0);
                    for (const int w : adj[v]) sig[cell_of[w]]++;
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1) {
                    std::vector<std::vector<int>> replacement;
                    for (auto& [sig, verts] : groups) replacement.push_back(std::move(verts));
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c),
                                 std::make_move_iterator(replacement.begin()),
                                 std::make_move_iterator(replacement.end()));
                    changed = true;
                    break;
                }
            }
        }
    }

    std::string code_for(const std::vector<std::vector<int>>& cells) const {
        std::vector<int> label(n, -1);
        int next_label = 0;
        for (const auto& cell : cells) label[cell[0]] = next_label++;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v)
            for (const int w : adj[v])
                if (label[v] < label[w]) edges.emplace_back(label[v], label[w]);
        std::sort(edges.begin(), edges.end());
        std::string code;
        code.reserve(3 + edges.size() * 2);
        code.push_back(static_cast<char>(n));
        code.push_back(static_cast<char>(edges.size() & 0xff));
        code.push_back(static_cast<char>((edges.size() >> 8) & 0xff));
        for (const auto& [u, v] : edges) {
            code.push_back(static_cast<char>(u));
            code.push_back(static_cast<char>(v));
        }
        return code;
    }

    void search(std::vector<std::vector<int>> cells, std::string& best) const {
        refine(cells);
        size_t branch = cells.size();
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) { branch = c; break; }
        if (branch == cells.size()) {
            std::string code = code_for(cells);
            if (best.empty() || code < best) best = std::move(code);
            return;
        }
        for (const int v : cells[branch]) {
            std::vector<std::vector<int>> child = cells;
            auto& cell = child[branch];
            cell.erase(std::remove(cell.begin(), cell.end(), v), cell.end());
            child.insert(child.begin() + static_cast<long>(branch), {v});
            search(std::move(child), best);
        }
    }
};

}  // namespace

std::string canonical_graph_bytes(int n, const std::vector<std::vector<int>>& adj) {
    if (n > 255) throw InvalidMap("canonical form limited to 255 vertices");
    Refiner ref(adj);
    // initial partition: one cell per degree, ascending
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n; ++v) by_degree[static_cast<int>(adj[v].size())].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [deg, verts] : by_degree) cells.push_back(std::move(verts));
    std::string best;
    ref.search(std::move(cells), best);
    return best;
}

std::string PlanarMap::canonical_form() const {
    return canonical_graph_bytes(vertex_count_, simple_adjacency(*this));
}

bool same_rotation_system(const PlanarMap& a, const PlanarMap& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.dart_count() != b.dart_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        const auto na = a.neighbors(v);
        const auto nb = b.neighbors(v);
        if (na.size() != nb.size()) return false;
        // cyclic equality
        const size_t k = na.size();
        bool ok = false;
        for (size_t shift = 0; shift < k && !ok; ++shift) {
            bool match = true;
            for (size_t i = 0; i < k && match; ++i)
                if (na[i] != nb[(i + shift) % k]) match = false;
            ok = match;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace reuleaux
