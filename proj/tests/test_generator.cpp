#include "doctest.h"

#include <algorithm>
#include <set>

#include "reuleaux/generator.hpp"
#include "reuleaux/selfdual.hpp"
#include "test_maps.hpp"

using namespace reuleaux;

namespace {

CandidateGraph graph_of(const PlanarMap& m) {
    CandidateGraph g;
    g.n = m.vertex_count();
    for (int d = 0; d < m.dart_count(); d += 2) {
        const int u = m.origin(d), v = m.head(d);
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CandidateGraph complete_graph(int n) {
    CandidateGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

CandidateGraph k33() {
    CandidateGraph g;
    g.n = 6;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.edges.emplace_back(u, v);
    return g;
}

}  // namespace

TEST_CASE("n=4 yields exactly K4") {
    int count = 0;
    enumerate_candidates(4, [&](const CandidateGraph& g) {
        ++count;
        CHECK(g.edges.size() == 6);
        return true;
    });
    CHECK(count == 1);
}

TEST_CASE("n=5 candidates all have 8 edges and min degree 3") {
    int count = 0;
    enumerate_candidates(5, [&](const CandidateGraph& g) {
        ++count;
        CHECK(g.edges.size() == 8);
        std::vector<int> deg(5, 0);
        for (const auto& [u, v] : g.edges) {
            deg[u]++;
            deg[v]++;
        }
        CHECK(*std::min_element(deg.begin(), deg.end()) >= 3);
        return true;
    });
    CHECK(count > 0);
}

TEST_CASE("size cap is enforced") {
    CHECK_THROWS_AS(enumerate_candidates(10, [](const CandidateGraph&) { return true; }),
                    SizeCap);
    CHECK_THROWS_AS(enumerate_candidates(3, [](const CandidateGraph&) { return true; }),
                    SizeCap);
}

TEST_CASE("planarity embedding of planar graphs") {
    const auto k4 = planarity_embed(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->face_count() == 4);
    for (const auto& f : k4->faces()) CHECK(f.size == 3);

    const auto cube = planarity_embed(graph_of(testmaps::cube()));
    REQUIRE(cube.has_value());
    CHECK(cube->face_count() == 6);

    const auto wheel = planarity_embed(graph_of(testmaps::wheel(5)));
    REQUIRE(wheel.has_value());
    CHECK(wheel->face_count() == 6);
    CHECK(wheel->canonical_form() == testmaps::wheel(5).canonical_form());
}

TEST_CASE("nonplanar graphs are rejected") {
    CHECK_FALSE(planarity_embed(complete_graph(5)).has_value());
    CHECK_FALSE(planarity_embed(k33()).has_value());

    // K5 with one edge subdivided is still nonplanar
    CandidateGraph sub = complete_graph(5);
    sub.n = 6;
    sub.edges.erase(std::find(sub.edges.begin(), sub.edges.end(), std::make_pair(0, 1)));
    sub.edges.emplace_back(0, 5);
    sub.edges.emplace_back(1, 5);
    CHECK_FALSE(planarity_embed(sub).has_value());
}

TEST_CASE("cut vertices are embeddable") {
    // bowtie: two triangles sharing vertex 2
    CandidateGraph g;
    g.n = 5;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
    const auto m = planarity_embed(g);
    REQUIRE(m.has_value());
    CHECK(m->vertex_count() == 5);
    CHECK(m->face_count() == 3);
}

TEST_CASE("disconnected input is treated as non-embeddable") {
    CandidateGraph g;
    g.n = 6;
    g.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK_FALSE(planarity_embed(g).has_value());
}

TEST_CASE("internal census at small n") {
    const auto c4 = census_internal(4);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].canonical_form() == testmaps::k4().canonical_form());

    const auto c5 = census_internal(5);
    CHECK(c5.size() == 1);  // the 4-wheel is the only (5,8) polytope

    const auto c6 = census_internal(6);
    CHECK(c6.size() == 2);
    bool has_wheel = false;
    for (const auto& m : c6)
        if (m.canonical_form() == testmaps::wheel(5).canonical_form()) has_wheel = true;
    CHECK(has_wheel);
}

TEST_CASE("census output is canonical, sorted and valid") {
    const auto c6 = census_internal(6);
    std::set<std::string> forms;
    std::string prev;
    for (const auto& m : c6) {
        CHECK(m.simple());
        CHECK(m.is_three_connected());
        CHECK(m.edge_count() == 2 * m.vertex_count() - 2);
        CHECK(m.face_count() == m.vertex_count());
        const auto form = m.canonical_form();
        CHECK(forms.insert(form).second);
        CHECK(prev < form);
        prev = form;
    }
}

TEST_CASE("strongly involutive counts for small n match the census") {
    auto count_selfdual = [](int n) {
        int count = 0;
        for (const auto& m : census_internal(n))
            if (!search_strong_involutions(m, 1).empty()) ++count;
        return count;
    };
    CHECK(count_selfdual(4) == 1);
    CHECK(count_selfdual(5) == 0);
    CHECK(count_selfdual(6) == 1);
    CHECK(count_selfdual(7) == 1);
}
