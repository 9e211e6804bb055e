#include "doctest.h"

#include <cmath>

#include "jg/graph.hpp"
#include "oracles.hpp"

using namespace jg;

namespace {

bool adjacency_well_formed(const Graph& g) {
    for (Label v : g.labels()) {
        const auto nb = g.neighbors(v);
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (Label w : nb) {
            if (w == v || !g.has_vertex(w)) return false;
            const auto back = g.neighbors(w);
            if (!std::binary_search(back.begin(), back.end(), v)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("G_1 has one vertex and no edges") {
    const Graph g = build_divisibility_graph(1);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("G_4 edge set") {
    const Graph g = build_divisibility_graph(4);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 4}});
}

TEST_CASE("G_16 contains the edges drawn for its decomposition") {
    const Graph g = build_divisibility_graph(16);
    for (auto [u, v] : {std::pair{7, 14}, {2, 14}, {4, 8}, {8, 16}, {3, 9}, {5, 15}}) CHECK(g.is_edge(u, v));
}

TEST_CASE("G_100 degree of 1 and edge count against pairwise oracle") {
    const Graph g = build_divisibility_graph(100);
    CHECK(g.degree(1) == 99);
    CHECK(g.edges() == oracle::divisibility_edges(100));
}

TEST_CASE("divisibility graph matches pairwise oracle for n <= 300") {
    for (int n = 1; n <= 300; ++n) {
        const Graph g = build_divisibility_graph(n);
        REQUIRE(g.edges() == oracle::divisibility_edges(n));
        REQUIRE(adjacency_well_formed(g));
        if (n >= 2) REQUIRE(g.degree(1) == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("n = 0 is rejected") {
    CHECK_THROWS_AS(build_divisibility_graph(0), DomainError);
    CHECK_THROWS_AS(circular_layout(0), DomainError);
}

TEST_CASE("is_edge") {
    CHECK(build_divisibility_graph(100).is_edge(2, 62));
    const Graph g10 = build_divisibility_graph(10);
    CHECK_FALSE(g10.is_edge(4, 6));
    for (Label k = 1; k <= 10; ++k) CHECK_FALSE(g10.is_edge(k, k));
    CHECK_THROWS_AS(g10.is_edge(3, 11), DomainError);
}

TEST_CASE("induced subgraph") {
    const Graph g5 = build_divisibility_graph(5);
    const std::vector<Label> keep{1, 2, 4};
    const Graph h = induced_subgraph(g5, keep);
    CHECK(h.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 4}});
    CHECK(std::vector<Label>(h.labels().begin(), h.labels().end()) == keep);

    const std::vector<Label> all(g5.labels().begin(), g5.labels().end());
    CHECK(induced_subgraph(g5, all) == g5);

    const std::vector<Label> bad{1, 9};
    CHECK_THROWS_AS(induced_subgraph(g5, bad), DomainError);
}

TEST_CASE("G_16 minus its A-set splits into {4,8,16}, {7,14} and six singletons") {
    const Graph g = build_divisibility_graph(16);
    const std::vector<Label> keep{4, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16};
    const Graph h = induced_subgraph(g, keep);
    REQUIRE(adjacency_well_formed(h));
    const auto comps = connected_components(h);
    REQUIRE(comps.size() == 8);
    CHECK(comps[0] == std::vector<Label>{4, 8, 16});
    CHECK(comps[2] == std::vector<Label>{7, 14});
    std::size_t singletons = 0;
    for (const auto& c : comps) singletons += c.size() == 1;
    CHECK(singletons == 6);
}

TEST_CASE("induced subgraphs of random graphs stay well formed") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, 10, 0.4);
        std::vector<Label> keep;
        for (Label v : g.labels())
            if (rng() % 2) keep.push_back(v);
        const Graph h = induced_subgraph(g, keep);
        REQUIRE(adjacency_well_formed(h));
        for (const Edge& e : g.edges()) {
            const bool both = std::binary_search(keep.begin(), keep.end(), e.u) &&
                              std::binary_search(keep.begin(), keep.end(), e.v);
            REQUIRE(both == (h.has_vertex(e.u) && h.has_vertex(e.v) && h.is_edge(e.u, e.v)));
        }
    }
}

TEST_CASE("graph constructor rejects self-loops and unknown labels") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph({1, 2}, loop), DomainError);
    const std::vector<Edge> stray{{1, 3}};
    CHECK_THROWS_AS(Graph({1, 2}, stray), DomainError);
    CHECK_THROWS_AS(Graph({0, 1}, {}), DomainError);
}

TEST_CASE("circular layout") {
    const auto p4 = circular_layout(4);
    CHECK(p4[0].vertex == 1);
    CHECK(p4[0].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p4[0].y == doctest::Approx(1.0));
    CHECK(p4[3].x == doctest::Approx(1.0));
    CHECK(std::abs(p4[3].y) < 1e-12);

    const auto p100 = circular_layout(100);
    CHECK(std::abs(p100[24].x) < 1e-12);
    CHECK(p100[24].y == doctest::Approx(1.0));
    for (const auto& p : p100) CHECK(std::abs(p.x * p.x + p.y * p.y - 1.0) < 1e-9);
}

TEST_CASE("layout and edge CSV exports") {
    const std::string layout = layout_csv(circular_layout(4));
    CHECK(layout.rfind("vertex,x,y\n", 0) == 0);
    CHECK(layout.find("\n4,1,") != std::string::npos);
    CHECK(edges_csv(build_divisibility_graph(4)) == "i,j\n1,2\n1,3\n1,4\n2,4\n");
}
