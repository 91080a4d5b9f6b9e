#include "astopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "astopo/error.hpp"

namespace astopo {

RichClubCurve rich_club_curve(const Graph& graph) {
    if (graph.node_count() < 2)
        throw Error(ErrorKind::InsufficientNodes, "rich-club curve needs at least 2 nodes");
    return rich_club_curve(graph, rank_nodes(graph));
}

RichClubCurve rich_club_curve(const Graph& graph, const DegreeRanking& ranking) {
    const std::size_t n = graph.node_count();
    if (n < 2)
        throw Error(ErrorKind::InsufficientNodes, "rich-club curve needs at least 2 nodes");

    // An edge joins the club at the prefix where its later-ranked end enters.
    std::vector<std::uint64_t> entering(n + 1, 0);
    for (NodeIndex v = 0; v < n; ++v)
        for (NodeIndex w : graph.neighbors(v))
            if (v < w)
                ++entering[std::max(ranking.position(v), ranking.position(w))];

    RichClubCurve curve;
    curve.n_nodes = n;
    curve.points.reserve(n - 1);
    std::uint64_t links = entering[1];
    for (std::size_t m = 2; m <= n; ++m) {
        links += entering[m];
        const double possible = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
        curve.points.push_back({m, static_cast<double>(m) / static_cast<double>(n), links,
                                static_cast<double>(links) / possible});
    }
    return curve;
}

std::size_t prefix_for(std::size_t n, double r) {
    const double scaled = r * static_cast<double>(n);
    return static_cast<std::size_t>(std::floor(scaled + 1e-9));
}

double rich_club_at(const Graph& graph, double r) {
    if (!(r > 0.0 && r <= 1.0))
        throw Error(ErrorKind::InvalidParams, "rank must lie in (0, 1]");
    const std::size_t m = prefix_for(graph.node_count(), r);
    if (m < 2)
        throw Error(ErrorKind::InsufficientNodes,
                    "prefix floor(r*N) = " + std::to_string(m) + " is below 2");
    return rich_club_curve(graph).at_prefix(m).phi;
}

std::vector<RichClubPoint> log_spaced(const RichClubCurve& curve, std::size_t count) {
    if (count == 0 || curve.points.size() <= count)
        return curve.points;
    const double lo = std::log(2.0);
    const double hi = std::log(static_cast<double>(curve.n_nodes));
    std::vector<RichClubPoint> out;
    std::size_t last = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        auto m = static_cast<std::size_t>(std::llround(std::exp(lo + t * (hi - lo))));
        m = std::clamp<std::size_t>(m, 2, curve.n_nodes);
        if (i == count - 1)
            m = curve.n_nodes;
        if (m != last)
            out.push_back(curve.at_prefix(m));
        last = m;
    }
    return out;
}

std::size_t RankBinMatrix::bin_of(std::size_t position, std::size_t n) noexcept {
    return std::min(position * kBins / n, kBins - 1);
}

void RankBinMatrix::add(std::size_t bin_a, std::size_t bin_b) noexcept {
    if (bin_a > bin_b)
        std::swap(bin_a, bin_b);
    ++cells_[bin_a][bin_b];
}

std::uint64_t RankBinMatrix::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& row : cells_)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

RankBinMatrix link_rank_matrix(const Graph& graph) {
    if (graph.empty())
        return {};
    return link_rank_matrix(graph, rank_nodes(graph));
}

RankBinMatrix link_rank_matrix(const Graph& graph, const DegreeRanking& ranking) {
    RankBinMatrix matrix;
    const std::size_t n = graph.node_count();
    for (NodeIndex v = 0; v < n; ++v)
        for (NodeIndex w : graph.neighbors(v))
            if (v < w)
                matrix.add(RankBinMatrix::bin_of(ranking.position(v), n),
                           RankBinMatrix::bin_of(ranking.position(w), n));
    return matrix;
}

std::vector<std::uint64_t> triangle_coefficients(const Graph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::uint64_t> kt(n, 0);
    // For each link v-w, the common neighbours x close triangles v-w-x. Every
    // triangle through v is seen from both of its links at v.
    for (NodeIndex v = 0; v < n; ++v) {
        std::uint64_t twice = 0;
        for (NodeIndex w : graph.neighbors(v)) {
            auto small = graph.neighbors(v);
            auto large = graph.neighbors(w);
            if (small.size() > large.size())
                std::swap(small, large);
            for (NodeIndex x : small)
                if (std::binary_search(large.begin(), large.end(), x))
                    ++twice;
        }
        kt[v] = twice / 2;
    }
    return kt;
}

std::vector<std::uint64_t> rectangle_coefficients(const Graph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::uint64_t> kr(n, 0);
    // paths[x] = number of neighbours of v adjacent to x; each pair of such
    // neighbours with x closes one rectangle v-u-x-w.
    std::vector<std::uint32_t> paths(n, 0);
    std::vector<NodeIndex> touched;
    for (NodeIndex v = 0; v < n; ++v) {
        for (NodeIndex u : graph.neighbors(v))
            for (NodeIndex x : graph.neighbors(u)) {
                if (x == v)
                    continue;
                if (paths[x]++ == 0)
                    touched.push_back(x);
            }
        std::uint64_t total = 0;
        for (NodeIndex x : touched) {
            const std::uint64_t c = paths[x];
            total += c * (c - 1) / 2;
            paths[x] = 0;
        }
        touched.clear();
        kr[v] = total;
    }
    return kr;
}

std::vector<NodeIndex> rank_by_value(std::span<const std::uint64_t> values) {
    std::vector<NodeIndex> order(values.size());
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeIndex a, NodeIndex b) { return values[a] > values[b]; });
    return order;
}

CycleCoefficientTable cycle_coefficients(const Graph& graph) {
    CycleCoefficientTable table;
    table.kt = triangle_coefficients(graph);
    table.kr = rectangle_coefficients(graph);
    table.kt_rank_order = rank_by_value(table.kt);
    table.kr_rank_order = rank_by_value(table.kr);
    return table;
}

TopologySummary summarize(const Graph& graph, bool with_gamma) {
    return summarize(graph, cycle_coefficients(graph), with_gamma);
}

TopologySummary summarize(const Graph& graph, const CycleCoefficientTable& cycles, bool with_gamma) {
    TopologySummary s;
    s.n_nodes = graph.node_count();
    s.n_links = graph.edge_count();
    if (s.n_nodes == 0)
        return s;
    const auto n = static_cast<double>(s.n_nodes);
    s.k_average = 2.0 * static_cast<double>(s.n_links) / n;
    for (NodeIndex v = 0; v < s.n_nodes; ++v)
        s.k_max = std::max(s.k_max, graph.degree_at(v));
    s.kt_max = *std::max_element(cycles.kt.begin(), cycles.kt.end());
    s.kr_max = *std::max_element(cycles.kr.begin(), cycles.kr.end());
    s.kt_average = static_cast<double>(std::accumulate(cycles.kt.begin(), cycles.kt.end(), std::uint64_t{0})) / n;
    s.kr_average = static_cast<double>(std::accumulate(cycles.kr.begin(), cycles.kr.end(), std::uint64_t{0})) / n;
    if (with_gamma) {
        try {
            s.gamma_estimate = fit_power_law(graph);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FitNotApplicable)
                throw;
        }
    }
    return s;
}

double fit_power_law(const Graph& graph) {
    std::vector<std::size_t> degrees(graph.node_count());
    for (NodeIndex v = 0; v < degrees.size(); ++v)
        degrees[v] = graph.degree_at(v);
    return fit_power_law(degrees);
}

double fit_power_law(std::span<const std::size_t> degrees) {
    std::vector<std::size_t> positive;
    positive.reserve(degrees.size());
    for (std::size_t k : degrees)
        if (k >= 1)
            positive.push_back(k);
    std::sort(positive.begin(), positive.end());

    // CCDF(k) = fraction of nodes with degree >= k, sampled at distinct k.
    std::vector<double> xs;
    std::vector<double> ys;
    const auto total = static_cast<double>(positive.size());
    for (std::size_t i = 0; i < positive.size();) {
        std::size_t j = i;
        while (j < positive.size() && positive[j] == positive[i])
            ++j;
        xs.push_back(std::log(static_cast<double>(positive[i])));
        ys.push_back(std::log(static_cast<double>(positive.size() - i) / total));
        i = j;
    }
    if (xs.size() < 3)
        throw Error(ErrorKind::FitNotApplicable,
                    "need at least 3 distinct positive degrees, found " + std::to_string(xs.size()));

    const auto count = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return std::abs(sxy / sxx) + 1.0;
}

} // namespace astopo
