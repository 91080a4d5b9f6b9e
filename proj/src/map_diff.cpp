#include "astopo/map_diff.hpp"

#include "astopo/error.hpp"

namespace astopo {

MapDiffReport diff_maps(const Graph& map_a, const Graph& map_b) {
    if (map_a.empty() || map_b.empty())
        throw Error(ErrorKind::EmptyGraph, "both maps need at least one node");

    MapDiffReport report;
    report.links_in_a = map_a.edge_count();
    report.links_in_b = map_b.edge_count();
    report.n_nodes_b = map_b.node_count();

    for (NodeLabel v : map_b.labels())
        (map_a.contains(v) ? report.common_nodes : report.nodes_only_in_b)++;
    report.nodes_only_in_a = map_a.node_count() - report.common_nodes;

    const DegreeRanking ranking = rank_nodes(map_b);
    const std::size_t n = map_b.node_count();
    for (NodeIndex i = 0; i < n; ++i) {
        const auto ia = map_a.find(map_b.label(i));
        for (NodeIndex j : map_b.neighbors(i)) {
            if (j <= i)
                continue;
            if (ia) {
                const auto ja = map_a.find(map_b.label(j));
                if (ja && map_a.adjacent(*ia, *ja)) {
                    ++report.shared_links;
                    continue;
                }
            }
            report.missing_links.push_back(
                {{map_b.label(i), map_b.label(j)}, ranking.position(i), ranking.position(j)});
            report.missing_bin_matrix.add(RankBinMatrix::bin_of(ranking.position(i), n),
                                          RankBinMatrix::bin_of(ranking.position(j), n));
        }
    }
    report.links_only_in_a = report.links_in_a - report.shared_links;
    if (!report.missing_links.empty())
        report.rich_rich_fraction = rich_rich_fraction(report, 0.05);
    return report;
}

double rich_rich_fraction(const MapDiffReport& report, double top_fraction) {
    if (!(top_fraction > 0.0 && top_fraction <= 1.0))
        throw Error(ErrorKind::InvalidParams, "top_fraction must lie in (0, 1]");
    if (report.missing_links.empty())
        throw Error(ErrorKind::NoMissingLinks, "map B adds no links to map A");
    const std::size_t top = top_count(report.n_nodes_b, top_fraction);
    std::size_t rich = 0;
    for (const RankedEdge& e : report.missing_links)
        if (e.rank_u <= top && e.rank_v <= top)
            ++rich;
    return static_cast<double>(rich) / static_cast<double>(report.missing_links.size());
}

} // namespace astopo
