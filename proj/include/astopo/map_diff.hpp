#pragma once

#include <cstddef>
#include <vector>

#include "astopo/graph.hpp"
#include "astopo/metrics.hpp"

namespace astopo {

/// A link of map B with the B-ranking positions of its endpoints.
struct RankedEdge {
    Edge edge;            // canonical, smaller label first
    std::size_t rank_u;   // 1-based position of edge.u in B's ranking
    std::size_t rank_v;
};

/// Links present in map B but absent from map A, classified by B's ranks.
struct MapDiffReport {
    std::size_t common_nodes = 0;
    std::size_t nodes_only_in_a = 0;
    std::size_t nodes_only_in_b = 0;
    std::size_t links_in_a = 0;
    std::size_t links_in_b = 0;
    std::size_t shared_links = 0;
    /// |A \ B|, reported only.
    std::size_t links_only_in_a = 0;
    std::size_t n_nodes_b = 0;
    std::vector<RankedEdge> missing_links; // sorted by edge
    RankBinMatrix missing_bin_matrix;
    /// Share of missing links with both ends in B's top 5%; 0 when none are missing.
    double rich_rich_fraction = 0.0;
};

/// Throws Error(EmptyGraph) if either map has no nodes.
MapDiffReport diff_maps(const Graph& map_a, const Graph& map_b);

/// Share of missing links with both endpoints among B's top
/// ceil(top_fraction * N_B) nodes. Throws Error(NoMissingLinks) on an empty
/// missing set and Error(InvalidParams) outside 0 < top_fraction <= 1.
double rich_rich_fraction(const MapDiffReport& report, double top_fraction);

} // namespace astopo
