#include "astopo/generator.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "astopo/error.hpp"
#include "astopo/random.hpp"

namespace astopo {

std::size_t BaParams::expected_edges() const noexcept {
    const std::size_t s = seed_size();
    return s * (s - 1) / 2 + m_links * (n_final - s);
}

void validate(const BaParams& params) {
    const std::size_t m0 = params.seed_size();
    if (params.m_links < 1)
        throw Error(ErrorKind::InvalidParams, "m_links must be at least 1");
    if (params.m_links > m0)
        throw Error(ErrorKind::InvalidParams,
                    "m_links (" + std::to_string(params.m_links) + ") exceeds seed size m0 (" + std::to_string(m0) + ")");
    if (params.n_final < m0)
        throw Error(ErrorKind::InvalidParams,
                    "n_final (" + std::to_string(params.n_final) + ") is smaller than m0 (" + std::to_string(m0) + ")");
    if (params.n_final - 1 > UINT32_MAX)
        throw Error(ErrorKind::InvalidParams, "n_final exceeds the label range");
}

Graph generate_ba(const BaParams& params) {
    validate(params);
    const std::size_t m0 = params.seed_size();
    const std::size_t m = params.m_links;
    Rng rng(params.seed);

    GraphBuilder builder;
    // Each link contributes both endpoints, so a uniform pick from this list
    // selects a node with probability proportional to its degree.
    std::vector<NodeLabel> endpoints;
    endpoints.reserve(2 * params.expected_edges());

    for (NodeLabel u = 0; u < m0; ++u) {
        builder.add_node(u);
        for (NodeLabel v = u + 1; v < m0; ++v) {
            builder.add_edge(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    std::vector<NodeLabel> targets;
    targets.reserve(m);
    for (auto fresh = static_cast<NodeLabel>(m0); fresh < params.n_final; ++fresh) {
        targets.clear();
        while (targets.size() < m) {
            // m0 == 1 has no links yet; every earlier node is then equally likely.
            const NodeLabel pick = endpoints.empty()
                                       ? static_cast<NodeLabel>(rng.below(fresh))
                                       : endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end())
                targets.push_back(pick);
        }
        for (NodeLabel t : targets) {
            builder.add_edge(fresh, t);
            endpoints.push_back(fresh);
            endpoints.push_back(t);
        }
    }
    return builder.build();
}

namespace {

struct ClubPairs {
    std::vector<NodeIndex> members;
    std::vector<std::pair<NodeIndex, NodeIndex>> absent;
};

ClubPairs club_pairs(const Graph& graph, double top_fraction) {
    if (!(top_fraction > 0.0 && top_fraction <= 1.0))
        throw Error(ErrorKind::InvalidParams, "top_fraction must lie in (0, 1]");
    const DegreeRanking ranking = rank_nodes(graph);
    const std::size_t k = top_count(graph.node_count(), top_fraction);
    ClubPairs out;
    out.members.assign(ranking.order().begin(), ranking.order().begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.members.begin(), out.members.end());
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (!graph.adjacent(out.members[a], out.members[b]))
                out.absent.emplace_back(out.members[a], out.members[b]);
    return out;
}

// Picks `count` distinct entries of `pool` uniformly via a partial Fisher-Yates.
template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, Rng& rng) {
    for (std::size_t i = 0; i < count; ++i)
        std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(count);
    return pool;
}

} // namespace

Graph enrich_club(const Graph& graph, double top_fraction, std::size_t budget, std::uint64_t seed) {
    if (budget == 0)
        return graph;
    ClubPairs club = club_pairs(graph, top_fraction);
    if (club.absent.size() < budget)
        throw Error(ErrorKind::InvalidParams, "only " + std::to_string(club.absent.size()) +
                                                  " absent pairs among top-ranked nodes, budget " +
                                                  std::to_string(budget));
    Rng rng(seed);
    auto added = sample(std::move(club.absent), budget, rng);

    std::vector<Edge> edges = graph.edges();
    for (auto [a, b] : added)
        edges.push_back({graph.label(a), graph.label(b)});
    return make_graph(edges, graph.labels());
}

Graph rewire_into_club(const Graph& graph, double top_fraction, std::size_t count, std::uint64_t seed) {
    if (count == 0)
        return graph;
    ClubPairs club = club_pairs(graph, top_fraction);
    if (club.absent.size() < count)
        throw Error(ErrorKind::InvalidParams, "only " + std::to_string(club.absent.size()) +
                                                  " absent pairs among top-ranked nodes, count " +
                                                  std::to_string(count));
    std::unordered_set<NodeLabel> members;
    for (NodeIndex i : club.members)
        members.insert(graph.label(i));

    std::vector<Edge> outside;
    std::vector<Edge> kept;
    for (const Edge& e : graph.edges()) {
        if (members.contains(e.u) && members.contains(e.v))
            kept.push_back(e);
        else
            outside.push_back(e);
    }
    if (outside.size() < count)
        throw Error(ErrorKind::InvalidParams, "not enough links outside the club to rewire");

    Rng rng(seed);
    // Shuffle then split: the first `count` are dropped, the rest kept.
    for (std::size_t i = 0; i < count; ++i)
        std::swap(outside[i], outside[i + rng.below(outside.size() - i)]);
    kept.insert(kept.end(), outside.begin() + static_cast<std::ptrdiff_t>(count), outside.end());
    for (auto [a, b] : sample(std::move(club.absent), count, rng))
        kept.push_back({graph.label(a), graph.label(b)});
    return make_graph(kept, graph.labels());
}

} // namespace astopo
