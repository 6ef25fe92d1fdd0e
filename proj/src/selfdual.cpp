#include "reuleaux/selfdual.hpp"

#include <algorithm>
#include <bit>

namespace reuleaux {

int DiameterGraph::degree(int v) const {
    return std::popcount(adjacency[v]);
}

bool CandidateDomains::any_empty() const {
    return std::any_of(face_sets.begin(), face_sets.end(),
                       [](uint64_t s) { return s == 0; });
}

DualityContext::DualityContext(const PlanarMap& map) {
    const int n = map.vertex_count();
    const int F = map.face_count();
    if (n > 64 || F > 64)
        throw InvalidMap("self-duality search supports at most 64 vertices/faces");
    vertex_adj.assign(n, 0);
    face_adj.assign(F, 0);
    face_members.assign(F, 0);
    faces_with.assign(n, 0);
    for (int d = 0; d < map.dart_count(); d += 2) {
        const int u = map.origin(d), v = map.head(d);
        vertex_adj[u] |= 1ull << v;
        vertex_adj[v] |= 1ull << u;
        const int f = map.face_of(d), g = map.face_of(d ^ 1);
        if (f != g) {
            face_adj[f] |= 1ull << g;
            face_adj[g] |= 1ull << f;
        }
    }
    for (const auto& face : map.faces())
        for (const int v : face.boundary_vertices) {
            face_members[face.id] |= 1ull << v;
            faces_with[v] |= 1ull << face.id;
        }
}

CandidateDomains init_domains(const PlanarMap& map) {
    const DualityContext ctx(map);
    const int n = map.vertex_count();
    CandidateDomains dom;
    dom.face_sets.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        for (const auto& face : map.faces()) {
            if (face.size == map.degree(v) && !((ctx.face_members[face.id] >> v) & 1u))
                dom.face_sets[v] |= 1ull << face.id;
        }
    }
    for (int u = 0; u < n; ++u) {
        uint64_t nb = ctx.vertex_adj[u];
        while (nb) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            dom.worklist.emplace_back(u, v);
        }
    }
    return dom;
}

CandidateDomains propagate_arc_consistency(CandidateDomains domains, const PlanarMap& map) {
    const DualityContext ctx(map);
    auto& sets = domains.face_sets;
    auto& work = domains.worklist;
    while (!work.empty()) {
        const auto [u, v] = work.front();
        work.pop_front();
        uint64_t removed = 0;
        uint64_t cand = sets[u];
        while (cand) {
            const int f = std::countr_zero(cand);
            cand &= cand - 1;
            if ((ctx.face_adj[f] & sets[v]) == 0) removed |= 1ull << f;
        }
        if (removed) {
            sets[u] &= ~removed;
            uint64_t nb = ctx.vertex_adj[u];
            while (nb) {
                const int x = std::countr_zero(nb);
                nb &= nb - 1;
                work.emplace_back(x, u);
            }
        }
    }
    return domains;
}

namespace {

struct Searcher {
    const PlanarMap& map;
    const DualityContext ctx;
    const int n;
    size_t limit;
    std::vector<int> tau;
    uint64_t used_faces = 0;
    std::vector<SelfDualIso> found;

    Searcher(const PlanarMap& m, size_t lim)
        : map(m), ctx(m), n(m.vertex_count()), limit(lim), tau(m.vertex_count(), -1) {}

    bool done() const { return limit != 0 && found.size() >= limit; }

    // Narrows the other domains after assigning tau(v) = f; all prunings
    // below are implied by the iso + strong-involution constraints.
    bool narrow(std::vector<uint64_t>& dom, int v, int f) const {
        const uint64_t fbit = 1ull << f;
        for (int w = 0; w < n; ++w) {
            if (tau[w] >= 0 || w == v) continue;
            uint64_t s = dom[w] & ~fbit;
            if ((ctx.vertex_adj[v] >> w) & 1u)
                s &= ctx.face_adj[f];
            else
                s &= ~ctx.face_adj[f];
            if ((ctx.face_members[f] >> w) & 1u)
                s &= ctx.faces_with[v];
            else
                s &= ~ctx.faces_with[v];
            if (s == 0) return false;
            dom[w] = s;
        }
        return true;
    }

    bool consistent(int v, int f) const {
        for (int u = 0; u < n; ++u) {
            if (tau[u] < 0 || u == v) continue;
            const bool edge = (ctx.vertex_adj[u] >> v) & 1u;
            const bool dual_edge = (ctx.face_adj[tau[u]] >> f) & 1u;
            if (edge != dual_edge) return false;
            const bool u_in_f = (ctx.face_members[f] >> u) & 1u;
            const bool v_in_fu = (ctx.face_members[tau[u]] >> v) & 1u;
            if (u_in_f != v_in_fu) return false;
        }
        return true;
    }

    void run(std::vector<uint64_t> dom) {
        if (done()) return;
        int best = -1, best_count = 65;
        for (int v = 0; v < n; ++v) {
            if (tau[v] >= 0) continue;
            const int c = std::popcount(dom[v]);
            if (c < best_count) {
                best = v;
                best_count = c;
            }
        }
        if (best < 0) {
            if (certify_strong_involution(map, tau)) found.push_back({tau});
            return;
        }
        uint64_t cand = dom[best] & ~used_faces;
        while (cand && !done()) {
            const int f = std::countr_zero(cand);
            cand &= cand - 1;
            if (!consistent(best, f)) continue;
            std::vector<uint64_t> child = dom;
            tau[best] = f;
            used_faces |= 1ull << f;
            if (narrow(child, best, f)) run(std::move(child));
            tau[best] = -1;
            used_faces &= ~(1ull << f);
        }
    }
};

}  // namespace

std::vector<SelfDualIso> search_strong_involutions(const PlanarMap& map, size_t limit) {
    if (map.face_count() != map.vertex_count()) return {};
    auto domains = propagate_arc_consistency(init_domains(map), map);
    if (domains.any_empty()) return {};
    Searcher s(map, limit);
    s.run(std::move(domains.face_sets));
    return std::move(s.found);
}

bool certify_strong_involution(const PlanarMap& map, const std::vector<int>& tau) {
    const int n = map.vertex_count();
    const int F = map.face_count();
    if (static_cast<int>(tau.size()) != n || F != n) return false;
    std::vector<char> hit(F, 0);
    for (int v = 0; v < n; ++v) {
        if (tau[v] < 0 || tau[v] >= F || hit[tau[v]]) return false;
        hit[tau[v]] = 1;
    }
    const DualityContext ctx(map);
    for (int v = 0; v < n; ++v) {
        if (map.face(tau[v]).size != map.degree(v)) return false;
        if ((ctx.face_members[tau[v]] >> v) & 1u) return false;  // v not in tau(v)
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool edge = (ctx.vertex_adj[u] >> v) & 1u;
            const bool dual_edge = (ctx.face_adj[tau[u]] >> tau[v]) & 1u;
            if (edge != dual_edge) return false;
        }
        for (int v = 0; v < n; ++v) {
            const bool u_in_tv = (ctx.face_members[tau[v]] >> u) & 1u;
            const bool v_in_tu = (ctx.face_members[tau[u]] >> v) & 1u;
            if (u_in_tv != v_in_tu) return false;
        }
    }
    return true;
}

DiameterGraph diameter_graph(const PlanarMap& map, const SelfDualIso& iso) {
    const DualityContext ctx(map);
    const int n = map.vertex_count();
    DiameterGraph d;
    d.n = n;
    d.adjacency.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const uint64_t partners = ctx.face_members[iso.tau[v]];
        if ((partners >> v) & 1u) throw InvalidMap("diameter graph would contain a loop");
        d.adjacency[v] |= partners;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool uv = (d.adjacency[u] >> v) & 1u;
            const bool vu = (d.adjacency[v] >> u) & 1u;
            if (uv != vu) throw InvalidMap("tau is not involutive");
            if (uv) d.edges.emplace_back(u, v);
        }
    return d;
}

}  // namespace reuleaux
