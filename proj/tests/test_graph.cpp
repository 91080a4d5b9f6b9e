#include <doctest.h>

#include <numeric>

#include "astopo/error.hpp"
#include "astopo/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace astopo;

TEST_CASE("degree") {
    const Graph k4 = fixtures::complete(4);
    for (NodeLabel v = 1; v <= 4; ++v)
        CHECK(degree(k4, v) == 3);
    CHECK(degree(fixtures::path(3), 2) == 2);

    const std::vector<Edge> edges{{1, 2}};
    const std::vector<NodeLabel> isolated{7};
    const Graph g = make_graph(edges, isolated);
    CHECK(degree(g, 7) == 0);
    CHECK(g.node_count() == 3);

    try {
        degree(g, 99);
        FAIL("expected NodeNotFound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NodeNotFound);
    }
}

TEST_CASE("builder collapses duplicates and drops self-loops") {
    GraphBuilder b;
    CHECK(b.add_edge(1, 2) == GraphBuilder::EdgeStatus::Added);
    CHECK(b.add_edge(2, 1) == GraphBuilder::EdgeStatus::Duplicate);
    CHECK(b.add_edge(1, 2) == GraphBuilder::EdgeStatus::Duplicate);
    CHECK(b.add_edge(3, 3) == GraphBuilder::EdgeStatus::SelfLoop);
    const Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.node_count() == 3); // the looped node stays, isolated
    CHECK(b.duplicates() == 2);
    CHECK(b.self_loops() == 1);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("rank_nodes") {
    SUBCASE("star with chord ranks hub then tied leaves by label") {
        const Graph g = fixtures::star_with_chord();
        const auto r = rank_nodes(g);
        CHECK(ranked_labels(g, r) == std::vector<NodeLabel>{10, 1, 2, 3});
        CHECK(r.position(g.index_of(10)) == 1);
        CHECK(r.normalized(g.index_of(3)) == doctest::Approx(1.0));
    }
    SUBCASE("all ties fall back to label order") {
        const Graph g = fixtures::complete(4);
        CHECK(ranked_labels(g, rank_nodes(g)) == std::vector<NodeLabel>{1, 2, 3, 4});
    }
    SUBCASE("single node") {
        const std::vector<NodeLabel> one{42};
        const Graph g = make_graph({}, one);
        const auto r = rank_nodes(g);
        CHECK(ranked_labels(g, r) == std::vector<NodeLabel>{42});
        CHECK(r.normalized(0) == 1.0);
    }
    SUBCASE("empty graph") {
        CHECK_THROWS_AS(rank_nodes(Graph{}), Error);
    }
}

TEST_CASE("largest_component_size") {
    CHECK(largest_component_size(fixtures::star(4), {0}) == 1);
    CHECK(largest_component_size(fixtures::complete(4)) == 4);
    CHECK(largest_component_size(fixtures::path(3), {2}) == 1);
    CHECK(largest_component_size(fixtures::path(3), {1, 2, 3}) == 0);
}

TEST_CASE("top_count rounds up and tolerates representation error") {
    CHECK(top_count(2000, 0.05) == 100);
    CHECK(top_count(4, 0.75) == 3);
    CHECK(top_count(4, 0.5) == 2);
    CHECK(top_count(11461, 0.05) == 574);
    CHECK(top_count(10, 1.0) == 10);
}

TEST_CASE("graph properties on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(50);
        const double p = 0.02 + 0.6 * static_cast<double>(rng.below(1000)) / 1000.0;
        const auto rg = oracle::gnp(n, p, rng);
        const Graph g = make_graph(rg.edges, rg.nodes);
        const auto dense = oracle::dense_from(rg.nodes, rg.edges);

        // handshake and symmetry
        std::size_t degree_sum = 0;
        for (NodeIndex v = 0; v < g.node_count(); ++v) {
            degree_sum += g.degree_at(v);
            CHECK_FALSE(g.adjacent(v, v));
            for (NodeIndex w : g.neighbors(v))
                CHECK(g.adjacent(w, v));
        }
        CHECK(degree_sum == 2 * g.edge_count());

        // ranking is a degree-sorted permutation
        const auto r = rank_nodes(g);
        std::vector<NodeIndex> sorted(r.order().begin(), r.order().end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<NodeIndex> all(g.node_count());
        std::iota(all.begin(), all.end(), NodeIndex{0});
        CHECK(sorted == all);
        for (std::size_t i = 1; i < r.size(); ++i)
            CHECK(g.degree_at(r.order()[i - 1]) >= g.degree_at(r.order()[i]));
        const auto expected = oracle::ranking(dense);
        for (std::size_t p2 = 0; p2 < expected.size(); ++p2)
            CHECK(g.label(r.order()[p2]) == dense.labels[expected[p2]]);

        // component size vs brute force; removal never grows it
        std::unordered_set<NodeLabel> removed;
        std::vector<bool> removed_dense(n, false);
        std::size_t previous = largest_component_size(g);
        CHECK(previous == oracle::largest_component(dense, removed_dense));
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t pick = rng.below(n);
            removed.insert(dense.labels[pick]);
            removed_dense[pick] = true;
            const std::size_t now = largest_component_size(g, removed);
            CHECK(now == oracle::largest_component(dense, removed_dense));
            CHECK(now <= previous);
            previous = now;
        }
    }
}
