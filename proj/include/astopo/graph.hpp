#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace astopo {

// Opaque node identifier, typically an AS number.
using NodeLabel = std::uint32_t;
// Dense position of a node inside a Graph; index order equals label order.
using NodeIndex = std::uint32_t;

struct Edge {
    NodeLabel u;
    NodeLabel v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Returns the edge with the smaller label first.
constexpr Edge canonical(Edge e) noexcept { return e.u <= e.v ? e : Edge{e.v, e.u}; }

/// Simple undirected graph over opaque labels. Immutable once built; use
/// GraphBuilder to construct one.
///
/// Nodes are stored sorted by label, so NodeIndex order and label order agree.
/// Neighbor lists are sorted by index.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return labels_.empty(); }

    std::span<const NodeLabel> labels() const noexcept { return labels_; }
    NodeLabel label(NodeIndex i) const { return labels_[i]; }

    bool contains(NodeLabel label) const noexcept { return find(label).has_value(); }
    std::optional<NodeIndex> find(NodeLabel label) const noexcept;
    /// Throws Error(NodeNotFound) for unknown labels.
    NodeIndex index_of(NodeLabel label) const;

    std::span<const NodeIndex> neighbors(NodeIndex i) const noexcept {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }
    std::size_t degree_at(NodeIndex i) const noexcept { return offsets_[i + 1] - offsets_[i]; }
    bool adjacent(NodeIndex a, NodeIndex b) const noexcept;

    /// Canonical edge list: u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::vector<NodeLabel> labels_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeIndex> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Accumulates nodes and edges, collapsing duplicates and dropping self-loops.
class GraphBuilder {
public:
    enum class EdgeStatus { Added, Duplicate, SelfLoop };

    void add_node(NodeLabel v);
    EdgeStatus add_edge(NodeLabel u, NodeLabel v);
    EdgeStatus add_edge(Edge e) { return add_edge(e.u, e.v); }

    std::size_t self_loops() const noexcept { return self_loops_; }
    std::size_t duplicates() const noexcept { return duplicates_; }

    Graph build() const;

private:
    static std::uint64_t key(NodeLabel u, NodeLabel v) noexcept {
        return (std::uint64_t{u} << 32) | v;
    }

    std::unordered_set<NodeLabel> nodes_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<Edge> edges_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

/// Builds a graph from an edge sequence plus optional isolated nodes.
Graph make_graph(std::span<const Edge> edges, std::span<const NodeLabel> isolated = {});

/// Number of links incident to `v`. Throws Error(NodeNotFound).
std::size_t degree(const Graph& graph, NodeLabel v);

/// Nodes in decreasing degree order, ties broken by ascending label.
class DegreeRanking {
public:
    DegreeRanking() = default;
    explicit DegreeRanking(std::vector<NodeIndex> order);

    std::size_t size() const noexcept { return order_.size(); }

    /// Node indices, best-connected first.
    std::span<const NodeIndex> order() const noexcept { return order_; }
    NodeIndex at(std::size_t position) const { return order_[position - 1]; }

    /// 1-based rank position of a node index.
    std::size_t position(NodeIndex i) const { return position_[i]; }
    double normalized(NodeIndex i) const {
        return static_cast<double>(position_[i]) / static_cast<double>(order_.size());
    }

private:
    std::vector<NodeIndex> order_;
    std::vector<std::size_t> position_;
};

/// Throws Error(EmptyGraph) when the graph has no nodes.
DegreeRanking rank_nodes(const Graph& graph);

/// Ranked labels, best-connected first.
std::vector<NodeLabel> ranked_labels(const Graph& graph, const DegreeRanking& ranking);

/// Number of top-ranked nodes covering `fraction` of N, i.e. ceil(fraction * N).
std::size_t top_count(std::size_t n, double fraction);

/// Size of the largest connected component after deleting `removed`.
std::size_t largest_component_size(const Graph& graph, const std::unordered_set<NodeLabel>& removed);
std::size_t largest_component_size(const Graph& graph);

/// Disjoint sets with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x) noexcept;
    /// Returns the size of the merged set.
    std::size_t unite(std::size_t a, std::size_t b) noexcept;
    std::size_t size_of(std::size_t x) noexcept { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace astopo
