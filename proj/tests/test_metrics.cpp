#include <doctest.h>

#include <cmath>

#include "astopo/error.hpp"
#include "astopo/generator.hpp"
#include "astopo/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace astopo;

TEST_CASE("rich_club_curve examples") {
    const auto k5 = rich_club_curve(fixtures::complete(5));
    REQUIRE(k5.points.size() == 4);
    for (const auto& p : k5.points)
        CHECK(p.phi == 1.0);

    const auto star = rich_club_curve(fixtures::star_with_chord());
    CHECK(star.at_prefix(2).phi == 1.0);
    CHECK(star.at_prefix(3).phi == 1.0);
    CHECK(star.at_prefix(4).phi == doctest::Approx(4.0 / 6.0));
    CHECK(star.at_prefix(4).rank == 1.0);

    CHECK_THROWS_AS(rich_club_curve(fixtures::edgeless(1)), Error);
}

TEST_CASE("rich_club_at") {
    CHECK(rich_club_at(fixtures::complete(5), 0.4) == 1.0);
    CHECK(rich_club_at(fixtures::star_with_chord(), 1.0) == doctest::Approx(0.667).epsilon(0.001));
    CHECK(rich_club_at(fixtures::edgeless(10), 0.5) == 0.0);
    try {
        rich_club_at(fixtures::complete(5), 0.2); // floor(1.0) = 1
        FAIL("expected InsufficientNodes");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientNodes);
    }
    CHECK(prefix_for(11461, 0.01) == 114);
    CHECK(prefix_for(100, 0.29) == 29);
}

TEST_CASE("log_spaced keeps both ends") {
    const Graph g = generate_ba({.n_final = 5000, .m_links = 2, .seed = 1});
    const auto curve = rich_club_curve(g);
    const auto pts = log_spaced(curve, 100);
    CHECK(pts.size() <= 100);
    CHECK(pts.size() > 50);
    CHECK(pts.front().prefix == 2);
    CHECK(pts.back().prefix == 5000);
    for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(pts[i].prefix > pts[i - 1].prefix);
    CHECK(log_spaced(curve, 0).size() == curve.points.size());
}

TEST_CASE("link_rank_matrix examples") {
    const auto k4 = link_rank_matrix(fixtures::complete(4));
    CHECK(RankBinMatrix::bin_of(1, 4) == 5);
    CHECK(RankBinMatrix::bin_of(4, 4) == 19);
    const std::vector<std::pair<int, int>> cells{{5, 10}, {5, 15}, {5, 19}, {10, 15}, {10, 19}, {15, 19}};
    for (auto [i, j] : cells)
        CHECK(k4.at(i, j) == 1);
    CHECK(k4.total() == 6);

    CHECK(link_rank_matrix(fixtures::edgeless(7)).total() == 0);
    CHECK(link_rank_matrix(Graph{}).total() == 0);
}

TEST_CASE("triangle and rectangle coefficient examples") {
    auto all = [](const std::vector<std::uint64_t>& v, std::uint64_t x) {
        return std::all_of(v.begin(), v.end(), [&](auto y) { return y == x; });
    };
    CHECK(all(triangle_coefficients(fixtures::complete(3)), 1));
    CHECK(all(triangle_coefficients(fixtures::complete(4)), 3));
    CHECK(all(triangle_coefficients(fixtures::cycle(4)), 0));

    CHECK(all(rectangle_coefficients(fixtures::cycle(4)), 1));
    CHECK(all(rectangle_coefficients(fixtures::complete(4)), 3));
    CHECK(all(rectangle_coefficients(fixtures::path(6)), 0));
    CHECK(all(rectangle_coefficients(fixtures::star(5)), 0));
    CHECK(all(rectangle_coefficients(generate_ba({.n_final = 300, .m_links = 1, .seed = 2})), 0));
}

TEST_CASE("cycle rank orders break ties by label") {
    // K4 on 1..4 plus pendant 5 attached to 4: node 4 has no extra triangles.
    const std::vector<Edge> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}};
    const Graph g = make_graph(edges);
    const auto table = cycle_coefficients(g);
    std::vector<NodeLabel> kt_labels;
    for (NodeIndex i : table.kt_rank_order)
        kt_labels.push_back(g.label(i));
    CHECK(kt_labels == std::vector<NodeLabel>{1, 2, 3, 4, 5});
}

TEST_CASE("summarize") {
    const auto s = summarize(fixtures::complete(4), true);
    CHECK(s.n_nodes == 4);
    CHECK(s.n_links == 6);
    CHECK(s.k_average == 3.0);
    CHECK(s.k_max == 3);
    CHECK(s.kt_max == 3);
    CHECK(s.kr_max == 3);
    CHECK(s.kt_average == 3.0);
    CHECK(s.kr_average == 3.0);
    CHECK_FALSE(s.gamma_estimate.has_value()); // a single degree value

    const auto p = summarize(fixtures::star_with_chord(), false);
    CHECK(p.kt_average == doctest::Approx(3.0 / 4.0)); // triangle 10-1-2 seen by three nodes
    CHECK_FALSE(p.gamma_estimate.has_value());
}

TEST_CASE("fit_power_law") {
    try {
        fit_power_law(fixtures::cycle(10));
        FAIL("expected FitNotApplicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FitNotApplicable);
    }

    // Degree multiset whose CCDF count is exactly round(C / k), i.e. a
    // gamma = 2 power law: n_k = round(C / k) - round(C / (k + 1)).
    // Reference value from an independent numpy polyfit over the same multiset.
    std::vector<std::size_t> degrees;
    const std::int64_t c = 100000;
    auto ccdf = [&](std::int64_t k) { return std::llround(static_cast<double>(c) / static_cast<double>(k)); };
    for (std::int64_t k = 1; k <= c; ++k)
        degrees.insert(degrees.end(), static_cast<std::size_t>(ccdf(k) - ccdf(k + 1)), static_cast<std::size_t>(k));
    const double gamma = fit_power_law(degrees);
    CHECK(gamma == doctest::Approx(2.0073323366861278).epsilon(1e-9));
    CHECK(std::abs(gamma - 2.0) <= 0.2);
}

TEST_CASE("metric oracle equivalence on random graphs") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng.below(29);
        const double density = 0.05 + 0.85 * static_cast<double>(trial) / 119.0;
        const auto rg = oracle::gnp(n, density, rng);
        const Graph g = make_graph(rg.edges, rg.nodes);
        const auto d = oracle::dense_from(rg.nodes, rg.edges);

        const auto phi = oracle::rich_club(d);
        const auto curve = rich_club_curve(g);
        REQUIRE(curve.points.size() == phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i)
            CHECK(curve.points[i].phi == phi[i]);

        const auto cells = oracle::link_matrix(d);
        const auto matrix = link_rank_matrix(g);
        for (std::size_t i = 0; i < 20; ++i)
            for (std::size_t j = 0; j < 20; ++j)
                CHECK(matrix.at(i, j) == cells[i][j]);
        CHECK(matrix.total() == g.edge_count());

        const auto kt = triangle_coefficients(g);
        const auto kr = rectangle_coefficients(g);
        CHECK(kt == oracle::kt(d));
        CHECK(kr == oracle::kr(d));

        std::uint64_t kt_sum = 0;
        std::uint64_t kr_sum = 0;
        for (NodeIndex v = 0; v < g.node_count(); ++v) {
            const std::uint64_t k = g.degree_at(v);
            CHECK(kt[v] <= k * (k - (k > 0)) / 2);
            kt_sum += kt[v];
            kr_sum += kr[v];
        }
        CHECK(kt_sum == 3 * oracle::triangles(d));
        CHECK(kr_sum == 4 * oracle::four_cycles(d));
    }
}

TEST_CASE("adding a link inside a fixed prefix raises phi by one pair") {
    Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        const auto rg = oracle::gnp(20, 0.2, rng);
        const Graph g = make_graph(rg.edges, rg.nodes);
        const auto ranking = rank_nodes(g);
        const std::size_t m = 2 + rng.below(18);
        // find an absent pair inside the prefix
        std::optional<Edge> extra;
        for (std::size_t a = 1; a <= m && !extra; ++a)
            for (std::size_t b = a + 1; b <= m && !extra; ++b)
                if (!g.adjacent(ranking.at(a), ranking.at(b)))
                    extra = Edge{g.label(ranking.at(a)), g.label(ranking.at(b))};
        if (!extra)
            continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(*extra);
        const Graph h = make_graph(edges, g.labels());
        const auto rh = rank_nodes(h);
        // prefix membership must be unchanged
        std::vector<NodeIndex> before(ranking.order().begin(), ranking.order().begin() + m);
        std::vector<NodeIndex> after(rh.order().begin(), rh.order().begin() + m);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        if (before != after)
            continue;
        const double delta = rich_club_curve(h).at_prefix(m).phi - rich_club_curve(g).at_prefix(m).phi;
        CHECK(delta == doctest::Approx(2.0 / static_cast<double>(m * (m - 1))));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("links among the top m are relabel-invariant at degree boundaries") {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rg = oracle::gnp(25, 0.25, rng);
        // relabel with a random injective map
        std::vector<NodeLabel> fresh(rg.nodes.size());
        for (std::size_t i = 0; i < fresh.size(); ++i)
            fresh[i] = static_cast<NodeLabel>(i * 13 + 5);
        rng.shuffle(std::span<NodeLabel>(fresh));
        std::unordered_map<NodeLabel, NodeLabel> map;
        for (std::size_t i = 0; i < fresh.size(); ++i)
            map[rg.nodes[i]] = fresh[i];
        std::vector<Edge> edges2;
        for (const Edge& e : rg.edges)
            edges2.push_back({map[e.u], map[e.v]});

        const Graph g1 = make_graph(rg.edges, rg.nodes);
        const Graph g2 = make_graph(edges2, fresh);
        const auto r1 = rank_nodes(g1);
        const auto c1 = rich_club_curve(g1);
        const auto c2 = rich_club_curve(g2);
        for (std::size_t m = 2; m <= g1.node_count(); ++m) {
            const bool boundary = m == g1.node_count() ||
                                  g1.degree_at(r1.at(m)) != g1.degree_at(r1.at(m + 1));
            if (boundary)
                CHECK(c1.at_prefix(m).links == c2.at_prefix(m).links);
        }
    }
}
