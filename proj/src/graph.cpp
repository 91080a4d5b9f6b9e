#include "astopo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "astopo/error.hpp"

namespace astopo {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NodeNotFound: return "NodeNotFound";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::InsufficientNodes: return "InsufficientNodes";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::FitNotApplicable: return "FitNotApplicable";
    case ErrorKind::NoMissingLinks: return "NoMissingLinks";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

std::optional<NodeIndex> Graph::find(NodeLabel label) const noexcept {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<NodeIndex>(it - labels_.begin());
}

NodeIndex Graph::index_of(NodeLabel label) const {
    if (auto i = find(label))
        return *i;
    throw Error(ErrorKind::NodeNotFound, "node " + std::to_string(label));
}

bool Graph::adjacent(NodeIndex a, NodeIndex b) const noexcept {
    if (degree_at(a) > degree_at(b))
        std::swap(a, b);
    auto nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeIndex i = 0; i < labels_.size(); ++i)
        for (NodeIndex j : neighbors(i))
            if (i < j)
                out.push_back({labels_[i], labels_[j]});
    return out;
}

void GraphBuilder::add_node(NodeLabel v) { nodes_.insert(v); }

GraphBuilder::EdgeStatus GraphBuilder::add_edge(NodeLabel u, NodeLabel v) {
    if (u == v) {
        nodes_.insert(u);
        ++self_loops_;
        return EdgeStatus::SelfLoop;
    }
    if (u > v)
        std::swap(u, v);
    if (!edge_keys_.insert(key(u, v)).second) {
        ++duplicates_;
        return EdgeStatus::Duplicate;
    }
    nodes_.insert(u);
    nodes_.insert(v);
    edges_.push_back({u, v});
    return EdgeStatus::Added;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.labels_.assign(nodes_.begin(), nodes_.end());
    std::sort(g.labels_.begin(), g.labels_.end());

    const std::size_t n = g.labels_.size();
    std::vector<std::pair<NodeIndex, NodeIndex>> ends;
    ends.reserve(edges_.size());
    std::vector<std::size_t> counts(n, 0);
    for (const Edge& e : edges_) {
        NodeIndex a = *g.find(e.u);
        NodeIndex b = *g.find(e.v);
        ends.emplace_back(a, b);
        ++counts[a];
        ++counts[b];
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + counts[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : ends) {
        g.adjacency_[fill[a]++] = b;
        g.adjacency_[fill[b]++] = a;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    g.edge_count_ = edges_.size();
    return g;
}

Graph make_graph(std::span<const Edge> edges, std::span<const NodeLabel> isolated) {
    GraphBuilder builder;
    for (NodeLabel v : isolated)
        builder.add_node(v);
    for (const Edge& e : edges)
        builder.add_edge(e);
    return builder.build();
}

std::size_t degree(const Graph& graph, NodeLabel v) { return graph.degree_at(graph.index_of(v)); }

DegreeRanking::DegreeRanking(std::vector<NodeIndex> order)
    : order_(std::move(order)), position_(order_.size(), 0) {
    for (std::size_t p = 0; p < order_.size(); ++p)
        position_[order_[p]] = p + 1;
}

DegreeRanking rank_nodes(const Graph& graph) {
    if (graph.empty())
        throw Error(ErrorKind::EmptyGraph, "cannot rank an empty graph");
    std::vector<NodeIndex> order(graph.node_count());
    std::iota(order.begin(), order.end(), NodeIndex{0});
    // Index order is label order, so a stable sort on degree breaks ties by label.
    std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        return graph.degree_at(a) > graph.degree_at(b);
    });
    return DegreeRanking(std::move(order));
}

std::vector<NodeLabel> ranked_labels(const Graph& graph, const DegreeRanking& ranking) {
    std::vector<NodeLabel> out;
    out.reserve(ranking.size());
    for (NodeIndex i : ranking.order())
        out.push_back(graph.label(i));
    return out;
}

std::size_t top_count(std::size_t n, double fraction) {
    // Tolerate representation error such as 0.05 * 2000 = 100.00000000000001.
    const double scaled = fraction * static_cast<double>(n);
    const auto count = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
    return std::min(count, n);
}

std::size_t largest_component_size(const Graph& graph, const std::unordered_set<NodeLabel>& removed) {
    const std::size_t n = graph.node_count();
    std::vector<char> alive(n, 1);
    for (NodeLabel v : removed)
        if (auto i = graph.find(v))
            alive[*i] = 0;

    std::vector<char> seen(n, 0);
    std::vector<NodeIndex> stack;
    std::size_t best = 0;
    for (NodeIndex s = 0; s < n; ++s) {
        if (!alive[s] || seen[s])
            continue;
        std::size_t size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeIndex v = stack.back();
            stack.pop_back();
            ++size;
            for (NodeIndex w : graph.neighbors(v))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        best = std::max(best, size);
    }
    return best;
}

std::size_t largest_component_size(const Graph& graph) { return largest_component_size(graph, {}); }

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) noexcept {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b)
        return size_[a];
    if (size_[a] < size_[b])
        std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
}

} // namespace astopo
