// Pool generator for the census fixtures.
//
// Grows every 3-connected simple planar map with at most --max-n vertices
// and faces from K4 by planar vertex splits. A split partitions the
// rotation of a vertex into two arcs joined by a fresh edge, optionally
// duplicating one or both arc-boundary darts (the inverse of contracting
// an edge whose endpoints share one or two face-corner neighbors). Every
// 3-connected graph reduces to K4 by such contractions, and both vertex
// and face counts are monotone along the expansion, so the bounded
// universe is exhausted. Slices with exactly 2n-2 edges are written as
// planar_code files, sorted by canonical rotation code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "reuleaux/codec.hpp"
#include "reuleaux/planar_map.hpp"

namespace {

using Rot = std::vector<std::vector<int>>;

int edge_count(const Rot& rot) {
    size_t darts = 0;
    for (const auto& r : rot) darts += r.size();
    return static_cast<int>(darts / 2);
}

// Canonical code of a connected embedded simple graph: minimum BFS label
// string over all root darts and both orientations. For 3-connected
// planar maps equal codes coincide with graph isomorphism (the sphere
// embedding is unique up to reflection).
std::string map_code(const Rot& rot) {
    const int n = static_cast<int>(rot.size());
    const int E = edge_count(rot);
    const int code_len = 1 + 2 * E + n;  // n byte, neighbor labels, terminators

    // neighbor position lookup
    std::vector<std::vector<std::pair<int, int>>> where(n);  // (neighbor, index)
    for (int v = 0; v < n; ++v) {
        where[v].reserve(rot[v].size());
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
            where[v].emplace_back(rot[v][i], i);
        std::sort(where[v].begin(), where[v].end());
    }
    auto position = [&](int v, int nb) {
        auto it = std::lower_bound(where[v].begin(), where[v].end(),
                                   std::make_pair(nb, -1));
        return it->second;
    };

    std::string best;
    std::string cand;
    std::vector<int> label(n), order(n), start_pos(n);
    for (int orient = 0; orient < 2; ++orient) {
        for (int root = 0; root < n; ++root) {
            const int deg_root = static_cast<int>(rot[root].size());
            for (int first = 0; first < deg_root; ++first) {
                cand.clear();
                cand.push_back(static_cast<char>(n));
                std::fill(label.begin(), label.end(), -1);
                label[root] = 0;
                order[0] = root;
                start_pos[root] = first;
                int assigned = 1;
                bool alive = true;
                for (int qi = 0; qi < assigned && alive; ++qi) {
                    const int v = order[qi];
                    const int deg = static_cast<int>(rot[v].size());
                    for (int k = 0; k < deg; ++k) {
                        const int idx = orient == 0
                                            ? (start_pos[v] + k) % deg
                                            : (start_pos[v] - k % deg + deg) % deg;
                        const int w = rot[v][idx];
                        if (label[w] < 0) {
                            label[w] = assigned;
                            order[assigned] = w;
                            // child rotations start at the dart back to v
                            start_pos[w] = position(w, v);
                            ++assigned;
                        }
                        cand.push_back(static_cast<char>(label[w] + 1));
                    }
                    cand.push_back(0);
                    if (!best.empty()) {
                        const size_t len = cand.size();
                        const int cmp = best.compare(0, len, cand);
                        if (cmp < 0) { alive = false; }
                    }
                }
                if (alive && (best.empty() || cand < best)) best = cand;
            }
        }
    }
    (void)code_len;
    return best;
}

// Split vertex w: the kept vertex takes the arc rot[w][i .. i+len-1] (mod
// deg), a new vertex takes the rest, and the arc-boundary darts may be
// shared (duplicated) into the new side.
Rot split_vertex(const Rot& rot, int w, int i, int len, bool share_first, bool share_last) {
    const int n = static_cast<int>(rot.size());
    const auto& r = rot[w];
    const int d = static_cast<int>(r.size());
    const int y = n;

    Rot child(n + 1);
    for (int v = 0; v < n; ++v)
        if (v != w) child[v] = rot[v];

    std::vector<int> xs, ys;
    for (int k = 0; k < len; ++k) xs.push_back(r[(i + k) % d]);
    const int c_first = r[i % d];
    const int c_last = r[(i + len - 1) % d];
    if (share_last) ys.push_back(c_last);
    for (int k = len; k < d; ++k) ys.push_back(r[(i + k) % d]);
    if (share_first) ys.push_back(c_first);

    // vertices moved to y update their view of w; shared corners see both
    for (int k = len; k < d; ++k) {
        const int v = r[(i + k) % d];
        for (auto& nb : child[v])
            if (nb == w) nb = y;
    }
    if (share_first) {
        auto& cr = child[c_first];
        std::vector<int> updated;
        for (const int nb : cr) {
            if (nb == w) {
                updated.push_back(w);  // x keeps the old id
                updated.push_back(y);
            } else {
                updated.push_back(nb);
            }
        }
        cr = std::move(updated);
    }
    if (share_last) {
        auto& cr = child[c_last];
        std::vector<int> updated;
        for (const int nb : cr) {
            if (nb == w) {
                updated.push_back(y);
                updated.push_back(w);
            } else {
                updated.push_back(nb);
            }
        }
        cr = std::move(updated);
    }

    xs.push_back(y);
    ys.push_back(w);
    child[w] = std::move(xs);
    child[y] = std::move(ys);
    return child;
}

bool three_connected(const Rot& rot) {
    std::vector<std::vector<int>> adj(rot.size());
    for (size_t v = 0; v < rot.size(); ++v) adj[v] = rot[v];
    return reuleaux::graph_three_connected(static_cast<int>(rot.size()), adj);
}

struct CodeSet {
    static constexpr size_t kShards = 64;
    std::unordered_set<std::string> shard[kShards];
    std::mutex lock[kShards];

    bool insert(const std::string& code) {
        const size_t h = std::hash<std::string>{}(code) % kShards;
        std::lock_guard<std::mutex> guard(lock[h]);
        return shard[h].insert(code).second;
    }
};

struct Accepted {
    std::mutex lock;
    std::vector<std::pair<std::string, Rot>> maps;

    void add(std::string code, Rot rot) {
        std::lock_guard<std::mutex> guard(lock);
        maps.emplace_back(std::move(code), std::move(rot));
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expansion generator for 3-connected planar map pools"};
    int max_n = 14;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string out_dir = ".";
    app.add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(4, 32));
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--out", out_dir, "output directory");
    CLI11_PARSE(app, argc, argv);
    if (jobs < 1) jobs = 1;

    std::string cmdline;
    for (int i = 0; i < argc; ++i) {
        if (i) cmdline += ' ';
        cmdline += argv[i];
    }

    std::filesystem::create_directories(out_dir);

    const Rot k4{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    std::vector<std::pair<std::string, Rot>> level{{map_code(k4), k4}};

    for (int v = 4; v <= max_n; ++v) {
        // emit the slice with exactly 2v-2 edges
        std::vector<std::pair<std::string, Rot>> slice;
        for (const auto& [code, rot] : level)
            if (edge_count(rot) == 2 * v - 2) slice.emplace_back(code, rot);
        std::sort(slice.begin(), slice.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<reuleaux::PlanarMap> maps;
        for (const auto& [code, rot] : slice)
            maps.push_back(reuleaux::PlanarMap::from_rotations(rot));
        char name[64];
        std::snprintf(name, sizeof name, "pool_n%02d.plc", v);
        const auto path = std::filesystem::path(out_dir) / name;
        reuleaux::write_planar_code_file(path.string(), maps);
        std::ofstream meta(path.string() + ".meta");
        meta << "generator: " << cmdline << "\n"
             << "content: all 3-connected simple planar graphs, " << v
             << " vertices, " << 2 * v - 2 << " edges, one embedding each\n"
             << "count: " << maps.size() << "\n";
        std::cerr << "n=" << v << " pool=" << maps.size() << " (universe level "
                  << level.size() << ")\n";
        if (v == max_n) break;

        CodeSet seen;
        Accepted next;
        std::vector<std::thread> workers;
        const size_t stride = std::max<size_t>(1, (level.size() + jobs - 1) / jobs);
        for (int t = 0; t < jobs; ++t) {
            const size_t lo = t * stride;
            const size_t hi = std::min(level.size(), lo + stride);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (size_t p = lo; p < hi; ++p) {
                    const Rot& parent = level[p].second;
                    const int pe = edge_count(parent);
                    const int pf = pe - static_cast<int>(parent.size()) + 2;
                    for (int w = 0; w < static_cast<int>(parent.size()); ++w) {
                        const int d = static_cast<int>(parent[w].size());
                        for (int i = 0; i < d; ++i) {
                            for (int len = 2; len <= d; ++len) {
                                for (int s = 0; s < 4; ++s) {
                                    const bool sf = s & 1, sl = s & 2;
                                    const int shares = int(sf) + int(sl);
                                    if (len == d && shares < 2) continue;
                                    if (len > d) continue;
                                    if (d - len + shares + 1 < 3) continue;
                                    if (pf + shares > max_n) continue;
                                    Rot child = split_vertex(parent, w, i, len, sf, sl);
                                    std::string code = map_code(child);
                                    if (!seen.insert(code)) continue;
                                    if (!three_connected(child)) continue;
                                    // validates simplicity and genus 0
                                    reuleaux::PlanarMap::from_rotations(child);
                                    next.add(std::move(code), std::move(child));
                                }
                            }
                        }
                    }
                }
            });
        }
        for (auto& th : workers) th.join();
        level = std::move(next.maps);
        std::sort(level.begin(), level.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return 0;
}
