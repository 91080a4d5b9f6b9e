#include "astopo/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "astopo/error.hpp"
#include "astopo/random.hpp"

namespace astopo {

const char* to_string(RemovalMode mode) noexcept {
    return mode == RemovalMode::Attack ? "attack" : "error";
}

std::size_t removal_limit(std::size_t n, double f_max) {
    const auto k = static_cast<std::size_t>(std::floor(f_max * static_cast<double>(n) + 1e-9));
    return std::min(k, n);
}

std::size_t default_step(std::size_t n, double f_max) {
    return std::max<std::size_t>(1, removal_limit(n, f_max) / 200);
}

std::vector<NodeIndex> attack_order(const Graph& graph, bool recompute_degrees) {
    if (graph.empty())
        return {};
    const DegreeRanking ranking = rank_nodes(graph);
    if (!recompute_degrees)
        return {ranking.order().begin(), ranking.order().end()};

    const std::size_t n = graph.node_count();
    std::vector<std::size_t> current(n);
    // Ordered by (degree descending, index ascending); index order is label order.
    auto cmp = [&](NodeIndex a, NodeIndex b) {
        return current[a] != current[b] ? current[a] > current[b] : a < b;
    };
    std::set<NodeIndex, decltype(cmp)> queue(cmp);
    for (NodeIndex v = 0; v < n; ++v) {
        current[v] = graph.degree_at(v);
        queue.insert(v);
    }
    std::vector<char> removed(n, 0);
    std::vector<NodeIndex> order;
    order.reserve(n);
    while (!queue.empty()) {
        const NodeIndex v = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (NodeIndex w : graph.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase(w);
            --current[w];
            queue.insert(w);
        }
    }
    return order;
}

std::vector<NodeIndex> error_order(const Graph& graph, std::uint64_t seed, std::size_t trial) {
    std::vector<NodeIndex> order(graph.node_count());
    std::iota(order.begin(), order.end(), NodeIndex{0});
    Rng rng(seed, trial);
    rng.shuffle(std::span<NodeIndex>(order));
    return order;
}

std::vector<std::size_t> largest_cluster_profile(const Graph& graph, const std::vector<NodeIndex>& order) {
    const std::size_t n = graph.node_count();
    const std::size_t k = order.size();
    std::vector<char> present(n, 1);
    for (NodeIndex v : order)
        present[v] = 0;

    UnionFind sets(n);
    std::size_t best = 0;
    for (NodeIndex v = 0; v < n; ++v) {
        if (!present[v])
            continue;
        best = std::max<std::size_t>(best, 1);
        for (NodeIndex w : graph.neighbors(v))
            if (present[w] && w < v)
                best = std::max(best, sets.unite(v, w));
    }

    std::vector<std::size_t> profile(k + 1, 0);
    profile[k] = best;
    for (std::size_t i = k; i-- > 0;) {
        const NodeIndex v = order[i];
        present[v] = 1;
        best = std::max<std::size_t>(best, 1);
        for (NodeIndex w : graph.neighbors(v))
            if (present[w])
                best = std::max(best, sets.unite(v, w));
        profile[i] = best;
    }
    return profile;
}

namespace {

void check_args(double f_max, std::size_t step) {
    if (!(f_max > 0.0 && f_max <= 1.0))
        throw Error(ErrorKind::InvalidParams, "f_max must lie in (0, 1]");
    if (step < 1)
        throw Error(ErrorKind::InvalidParams, "step must be at least 1");
}

std::vector<std::size_t> recorded_counts(std::size_t limit, std::size_t step) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < limit; k += step)
        out.push_back(k);
    out.push_back(limit);
    return out;
}

} // namespace

RemovalTrace attack_trace(const Graph& graph, double f_max, std::size_t step, bool recompute_degrees) {
    check_args(f_max, step);
    RemovalTrace trace;
    trace.mode = RemovalMode::Attack;
    trace.recompute_degrees = recompute_degrees;
    const std::size_t n = graph.node_count();
    if (n == 0)
        return trace;

    const std::size_t limit = removal_limit(n, f_max);
    std::vector<NodeIndex> order = attack_order(graph, recompute_degrees);
    order.resize(limit);
    const auto profile = largest_cluster_profile(graph, order);
    const auto total = static_cast<double>(n);
    for (std::size_t k : recorded_counts(limit, step))
        trace.points.push_back({k, static_cast<double>(k) / total, static_cast<double>(profile[k]) / total});
    return trace;
}

RemovalTrace error_trace(const Graph& graph, double f_max, std::size_t step, std::uint64_t seed,
                         std::size_t trials) {
    check_args(f_max, step);
    if (trials < 1)
        throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
    RemovalTrace trace;
    trace.mode = RemovalMode::Error;
    trace.seed = seed;
    trace.trials = trials;
    const std::size_t n = graph.node_count();
    if (n == 0)
        return trace;

    const std::size_t limit = removal_limit(n, f_max);
    const auto counts = recorded_counts(limit, step);
    std::vector<double> sums(counts.size(), 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<NodeIndex> order = error_order(graph, seed, t);
        order.resize(limit);
        const auto profile = largest_cluster_profile(graph, order);
        for (std::size_t i = 0; i < counts.size(); ++i)
            sums[i] += static_cast<double>(profile[counts[i]]);
    }
    const auto total = static_cast<double>(n);
    for (std::size_t i = 0; i < counts.size(); ++i)
        trace.points.push_back({counts[i], static_cast<double>(counts[i]) / total,
                                sums[i] / static_cast<double>(trials) / total});
    return trace;
}

} // namespace astopo
