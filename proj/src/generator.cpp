#include "reuleaux/generator.hpp"

#include <algorithm>
#include <deque>
#include <list>
#include <map>
#include <set>

#include "reuleaux/codec.hpp"

namespace reuleaux {

std::vector<std::vector<int>> CandidateGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool CandidateGraph::connected() const {
    if (n == 0) return false;
    const auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

namespace {

struct Enumerator {
    int n, target;
    std::vector<std::pair<int, int>> all_edges;
    std::vector<int> degree;
    std::vector<int> potential;  // unskipped incident slots per vertex
    std::vector<std::pair<int, int>> chosen;
    const std::function<bool(const CandidateGraph&)>& visit;
    bool stopped = false;

    Enumerator(int n_, const std::function<bool(const CandidateGraph&)>& v)
        : n(n_), target(2 * n_ - 2), visit(v) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
        degree.assign(n, 0);
        potential.assign(n, n - 1);
    }

    void rec(size_t idx) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == target) {
            for (int v = 0; v < n; ++v)
                if (degree[v] < 3) return;
            CandidateGraph g{n, chosen};
            if (!visit(g)) stopped = true;
            return;
        }
        if (idx >= all_edges.size()) return;
        if (chosen.size() + (all_edges.size() - idx) < static_cast<size_t>(target)) return;

        const auto [a, b] = all_edges[idx];
        // take the edge
        degree[a]++;
        degree[b]++;
        chosen.push_back(all_edges[idx]);
        rec(idx + 1);
        chosen.pop_back();
        degree[a]--;
        degree[b]--;
        if (stopped) return;
        // skip the edge; both endpoints lose one slot of potential
        potential[a]--;
        potential[b]--;
        if (degree[a] + potential[a] >= 3 && degree[b] + potential[b] >= 3) rec(idx + 1);
        potential[a]++;
        potential[b]++;
    }
};

}  // namespace

void enumerate_candidates(int n, const std::function<bool(const CandidateGraph&)>& visit) {
    if (n > kInternalGenerationCap)
        throw SizeCap("internal generation capped at n <= " +
                      std::to_string(kInternalGenerationCap));
    if (n < 4) throw SizeCap("internal generation requires n >= 4");
    Enumerator e(n, visit);
    e.rec(0);
}

namespace {

// ---- biconnected components (Tarjan) -------------------------------------

struct BlockSplitter {
    const std::vector<std::vector<int>>& adj;
    int n;
    std::vector<int> num, low;
    int counter = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;

    explicit BlockSplitter(const std::vector<std::vector<int>>& a)
        : adj(a), n(static_cast<int>(a.size())), num(n, -1), low(n, 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        for (const int w : adj[v]) {
            if (w == parent) continue;  // simple inputs: at most one tree edge back
            if (num[w] < 0) {
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (num[w] < num[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::vector<std::pair<int, int>>> run() {
        for (int v = 0; v < n; ++v)
            if (num[v] < 0) dfs(v, -1);
        return std::move(blocks);
    }
};

// ---- DMP embedding of one 2-connected block -------------------------------

using DirEdge = std::pair<int, int>;

struct DmpEmbedder {
    std::set<DirEdge> remaining;           // undirected edges as (min,max)
    std::map<int, std::set<int>> graph_adj;
    std::set<int> h_vertices;
    std::map<int, std::set<int>> h_adj;
    // faces as cyclic sequences of directed edges
    std::vector<std::vector<DirEdge>> faces;

    bool embedded(int u, int v) const {
        auto it = h_adj.find(u);
        return it != h_adj.end() && it->second.count(v);
    }

    void add_face(std::vector<DirEdge> f) { faces.push_back(std::move(f)); }

    void embed_path(const std::vector<int>& path) {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const int u = path[i], v = path[i + 1];
            remaining.erase({std::min(u, v), std::max(u, v)});
            h_vertices.insert(u);
            h_vertices.insert(v);
            h_adj[u].insert(v);
            h_adj[v].insert(u);
        }
    }

    // Splits face `fi` along `path`, whose endpoints lie on the face.
    void split_face(size_t fi, const std::vector<int>& path) {
        const int a = path.front(), b = path.back();
        std::vector<DirEdge> face = std::move(faces[fi]);
        const size_t len = face.size();
        size_t ai = len, bi = len;
        for (size_t i = 0; i < len; ++i) {
            if (face[i].first == a) ai = i;
            if (face[i].first == b) bi = i;
        }
        std::vector<DirEdge> arc1, arc2;
        for (size_t i = ai; i != bi; i = (i + 1) % len) arc1.push_back(face[i]);
        for (size_t i = bi; i != ai; i = (i + 1) % len) arc2.push_back(face[i]);
        // arc1 runs a..b, arc2 runs b..a
        std::vector<DirEdge> f1 = std::move(arc1);
        for (size_t i = path.size(); i-- > 1;) f1.emplace_back(path[i], path[i - 1]);
        std::vector<DirEdge> f2 = std::move(arc2);
        for (size_t i = 0; i + 1 < path.size(); ++i) f2.emplace_back(path[i], path[i + 1]);
        faces[fi] = std::move(f1);
        add_face(std::move(f2));
        embed_path(path);
    }

    std::set<int> face_vertices(size_t fi) const {
        std::set<int> out;
        for (const auto& e : faces[fi]) out.insert(e.first);
        return out;
    }

    // A fragment: either a chord between embedded vertices or a component
    // of G - H with its attachment edges.
    struct Fragment {
        std::vector<int> attachments;       // sorted embedded vertices
        std::vector<int> interior;          // empty for chords
        DirEdge chord{-1, -1};
        std::vector<size_t> admissible;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        for (const auto& e : remaining) {
            if (h_vertices.count(e.first) && h_vertices.count(e.second)) {
                Fragment f;
                f.attachments = {e.first, e.second};
                f.chord = e;
                out.push_back(std::move(f));
            }
        }
        std::set<int> seen;
        for (const auto& [v, _] : graph_adj) {
            if (h_vertices.count(v) || seen.count(v)) continue;
            Fragment f;
            std::set<int> att;
            std::vector<int> stack{v};
            seen.insert(v);
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                f.interior.push_back(x);
                for (const int w : graph_adj.at(x)) {
                    if (h_vertices.count(w)) att.insert(w);
                    else if (!seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
                }
            }
            std::sort(f.interior.begin(), f.interior.end());
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    // An alpha-path through the fragment between two distinct attachments.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord.first >= 0) return {f.chord.first, f.chord.second};
        const int a = f.attachments[0];
        std::set<int> interior(f.interior.begin(), f.interior.end());
        std::map<int, int> parent;
        std::deque<int> queue;
        for (const int w : graph_adj.at(a))
            if (interior.count(w) && !parent.count(w)) {
                parent[w] = a;
                queue.push_back(w);
            }
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (const int w : graph_adj.at(x)) {
                if (w == a) continue;
                if (h_vertices.count(w)) {
                    // reached another attachment
                    std::vector<int> path{w, x};
                    int cur = x;
                    while (parent[cur] != a) {
                        cur = parent[cur];
                        path.push_back(cur);
                    }
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (interior.count(w) && !parent.count(w)) {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        return {};  // unreachable for 2-connected inputs
    }

    // Embeds the block; returns false when some fragment has no
    // admissible face (the graph is not planar).
    bool run(const std::vector<std::pair<int, int>>& block_edges) {
        for (const auto& [u, v] : block_edges) {
            remaining.insert({std::min(u, v), std::max(u, v)});
            graph_adj[u].insert(v);
            graph_adj[v].insert(u);
        }
        if (block_edges.size() == 1) {
            const auto [u, v] = *remaining.begin();
            embed_path({u, v});
            add_face({{u, v}, {v, u}});
            return true;
        }
        // initial cycle by walking never-repeating vertices
        std::vector<int> walk{graph_adj.begin()->first};
        std::map<int, int> pos{{walk[0], 0}};
        while (true) {
            const int v = walk.back();
            int chosen = -1;
            for (const int w : graph_adj.at(v)) {
                if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
                chosen = w;
                break;
            }
            if (chosen < 0) return false;  // not 2-connected after all
            if (pos.count(chosen)) {
                walk.erase(walk.begin(), walk.begin() + pos[chosen]);
                break;
            }
            pos[chosen] = static_cast<int>(walk.size());
            walk.push_back(chosen);
        }
        std::vector<DirEdge> inner, outer;
        for (size_t i = 0; i < walk.size(); ++i) {
            const int u = walk[i], v = walk[(i + 1) % walk.size()];
            inner.emplace_back(u, v);
            outer.emplace_back(v, u);
        }
        std::reverse(outer.begin(), outer.end());
        std::vector<int> cycle_path = walk;
        cycle_path.push_back(walk[0]);
        embed_path(cycle_path);
        add_face(std::move(inner));
        add_face(std::move(outer));

        while (!remaining.empty()) {
            auto frags = fragments();
            size_t pick = frags.size();
            for (size_t i = 0; i < frags.size(); ++i) {
                auto& f = frags[i];
                for (size_t fi = 0; fi < faces.size(); ++fi) {
                    const auto fv = face_vertices(fi);
                    if (std::all_of(f.attachments.begin(), f.attachments.end(),
                                    [&](int a) { return fv.count(a) > 0; }))
                        f.admissible.push_back(fi);
                }
                if (f.admissible.empty()) return false;
                if (f.admissible.size() == 1 && pick == frags.size()) pick = i;
            }
            if (pick == frags.size()) pick = 0;
            const auto& f = frags[pick];
            const auto path = alpha_path(f);
            split_face(f.admissible[0], path);
        }
        return true;
    }
};

}  // namespace

std::optional<PlanarMap> planarity_embed(const CandidateGraph& g) {
    if (!g.connected()) return std::nullopt;
    if (g.edges.size() > static_cast<size_t>(std::max(0, 3 * g.n - 6)) && g.n >= 3)
        return std::nullopt;

    const auto adj = g.adjacency();
    BlockSplitter splitter(adj);
    const auto blocks = splitter.run();

    // face successor of each directed edge, merged over blocks
    std::map<DirEdge, DirEdge> succ;
    for (const auto& block : blocks) {
        DmpEmbedder emb;
        if (!emb.run(block)) return std::nullopt;
        for (const auto& face : emb.faces)
            for (size_t i = 0; i < face.size(); ++i)
                succ[face[i]] = face[(i + 1) % face.size()];
    }

    // rotation at u: next(u->v) = successor of (v->u) in its face; cut
    // vertices get their per-block rotations concatenated by starting a
    // fresh cycle whenever one closes
    std::vector<std::vector<int>> rotations(g.n);
    std::vector<std::set<int>> placed(g.n);
    for (int u = 0; u < g.n; ++u) {
        for (const int v0 : adj[u]) {
            if (placed[u].count(v0)) continue;
            int v = v0;
            do {
                rotations[u].push_back(v);
                placed[u].insert(v);
                const DirEdge next = succ.at({v, u});
                v = next.second;
            } while (v != v0);
        }
    }
    try {
        return PlanarMap::from_rotations(rotations);
    } catch (const InvalidMap&) {
        return std::nullopt;
    }
}

std::vector<PlanarMap> census_from_maps(int n, const std::vector<PlanarMap>& maps) {
    std::map<std::string, PlanarMap> by_form;
    for (const auto& m : maps) {
        if (m.vertex_count() != n || !m.simple()) continue;
        if (m.edge_count() != 2 * n - 2) continue;
        if (!m.is_three_connected()) continue;
        by_form.emplace(m.canonical_form(), m);
    }
    std::vector<PlanarMap> out;
    out.reserve(by_form.size());
    for (auto& [form, m] : by_form) out.push_back(std::move(m));
    return out;
}

std::vector<PlanarMap> census_internal(int n) {
    std::map<std::string, PlanarMap> by_form;
    enumerate_candidates(n, [&](const CandidateGraph& g) {
        if (!g.connected()) return true;
        if (!graph_three_connected(g.n, g.adjacency())) return true;
        auto embedded = planarity_embed(g);
        if (!embedded) return true;
        by_form.emplace(embedded->canonical_form(), std::move(*embedded));
        return true;
    });
    std::vector<PlanarMap> out;
    out.reserve(by_form.size());
    for (auto& [form, m] : by_form) out.push_back(std::move(m));
    return out;
}

std::vector<PlanarMap> census_from_file(int n, const std::string& path) {
    return census_from_maps(n, read_planar_code_file(path));
}

}  // namespace reuleaux
