#include "doctest.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "reuleaux/selfdual.hpp"
#include "test_maps.hpp"

using namespace reuleaux;

namespace {

// Independent oracle: try every bijection V -> F.
std::set<std::vector<int>> brute_force_involutions(const PlanarMap& m) {
    std::set<std::vector<int>> found;
    if (m.face_count() != m.vertex_count()) return found;
    std::vector<int> tau(m.vertex_count());
    std::iota(tau.begin(), tau.end(), 0);
    do {
        if (certify_strong_involution(m, tau)) found.insert(tau);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return found;
}

std::set<std::vector<int>> as_set(const std::vector<SelfDualIso>& isos) {
    std::set<std::vector<int>> out;
    for (const auto& i : isos) out.insert(i.tau);
    return out;
}

}  // namespace

TEST_CASE("K4 domains are the opposite-face singletons") {
    const auto m = testmaps::k4();
    const auto dom = init_domains(m);
    for (int v = 0; v < 4; ++v) {
        CHECK(std::popcount(dom.face_sets[v]) == 1);
        const int f = std::countr_zero(dom.face_sets[v]);
        CHECK_FALSE(m.face(f).contains_vertex(v));
    }
    CHECK(dom.worklist.size() == 12);  // both directions of 6 edges
}

TEST_CASE("wheel hub domain is the outer face") {
    const auto m = testmaps::wheel(5);
    const auto dom = init_domains(m);
    CHECK(std::popcount(dom.face_sets[0]) == 1);
    const int f = std::countr_zero(dom.face_sets[0]);
    CHECK(m.face(f).size == 5);
}

TEST_CASE("size-mismatched maps get empty domains") {
    const auto dom = init_domains(testmaps::cube());
    CHECK(dom.any_empty());
}

TEST_CASE("arc consistency leaves consistent singletons alone") {
    const auto m = testmaps::k4();
    const auto before = init_domains(m);
    const auto after = propagate_arc_consistency(before, m);
    CHECK(after.face_sets == before.face_sets);
    CHECK(after.worklist.empty());
}

TEST_CASE("arc consistency removes unsupported faces and cascades") {
    const auto m = testmaps::wheel(5);
    auto dom = init_domains(m);
    // force the hub onto a triangle; no rim assignment can support it
    int triangle = -1;
    for (const auto& f : m.faces())
        if (f.size == 3) { triangle = f.id; break; }
    dom.face_sets[0] = 1ull << triangle;
    const auto after = propagate_arc_consistency(std::move(dom), m);
    CHECK(after.any_empty());
}

TEST_CASE("K4 has the antipodal strong involution") {
    const auto m = testmaps::k4();
    const auto isos = search_strong_involutions(m);
    REQUIRE(!isos.empty());
    for (const auto& iso : isos) {
        CHECK(certify_strong_involution(m, iso.tau));
        const auto d = diameter_graph(m, iso);
        CHECK(d.edges.size() == 6);  // D(K4) = K4
    }
}

TEST_CASE("odd wheel admits a strong involution") {
    const auto m = testmaps::wheel(5);
    const auto isos = search_strong_involutions(m);
    REQUIRE(!isos.empty());
    const auto d = diameter_graph(m, isos[0]);
    CHECK(d.edges.size() == 10);
    std::vector<int> degs;
    for (int v = 0; v < d.n; ++v) degs.push_back(d.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 3, 3, 3, 3, 5});
}

TEST_CASE("cube is not even self-dual") {
    CHECK(search_strong_involutions(testmaps::cube()).empty());
}

TEST_CASE("search equals brute force at small n") {
    for (const auto& m : {testmaps::k4(), testmaps::wheel(5)}) {
        CHECK(as_set(search_strong_involutions(m)) == brute_force_involutions(m));
    }
}

TEST_CASE("search is deterministic") {
    const auto m = testmaps::wheel(5);
    const auto a = search_strong_involutions(m);
    const auto b = search_strong_involutions(m);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].tau == b[i].tau);
}

TEST_CASE("limit truncates deterministically") {
    const auto m = testmaps::wheel(5);
    const auto all = search_strong_involutions(m);
    const auto one = search_strong_involutions(m, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].tau == all[0].tau);
}

TEST_CASE("diameter degrees match map degrees") {
    for (const auto& m : {testmaps::k4(), testmaps::wheel(5)}) {
        for (const auto& iso : search_strong_involutions(m)) {
            const auto d = diameter_graph(m, iso);
            for (int v = 0; v < m.vertex_count(); ++v)
                CHECK(d.degree(v) == m.degree(v));
            CHECK(d.edges.size() == static_cast<size_t>(2 * m.vertex_count() - 2));
        }
    }
}
