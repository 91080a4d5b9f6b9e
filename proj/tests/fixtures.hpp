#pragma once

#include <vector>

#include "astopo/graph.hpp"

namespace fixtures {

using astopo::Edge;
using astopo::Graph;
using astopo::NodeLabel;

inline Graph complete(NodeLabel n, NodeLabel first = 1) {
    std::vector<Edge> edges;
    for (NodeLabel u = first; u < first + n; ++u)
        for (NodeLabel v = u + 1; v < first + n; ++v)
            edges.push_back({u, v});
    std::vector<NodeLabel> nodes;
    for (NodeLabel u = first; u < first + n; ++u)
        nodes.push_back(u);
    return astopo::make_graph(edges, nodes);
}

/// Hub 0 with leaves 1 .. leaves.
inline Graph star(NodeLabel leaves) {
    std::vector<Edge> edges;
    for (NodeLabel v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return astopo::make_graph(edges);
}

/// Path 1 - 2 - ... - n.
inline Graph path(NodeLabel n) {
    std::vector<Edge> edges;
    for (NodeLabel v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    return astopo::make_graph(edges);
}

/// Cycle 1 - 2 - ... - n - 1.
inline Graph cycle(NodeLabel n) {
    std::vector<Edge> edges;
    for (NodeLabel v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    edges.push_back({n, 1});
    return astopo::make_graph(edges);
}

/// Hub h = 10 with leaves l1 = 1, l2 = 2, l3 = 3 and the extra link l1 - l2.
/// Degrees 3, 2, 2, 1; the hub carries the largest label on purpose.
inline Graph star_with_chord() {
    const std::vector<Edge> edges{{10, 1}, {10, 2}, {10, 3}, {1, 2}};
    return astopo::make_graph(edges);
}

inline Graph edgeless(NodeLabel n) {
    std::vector<NodeLabel> nodes;
    for (NodeLabel v = 0; v < n; ++v)
        nodes.push_back(v);
    return astopo::make_graph({}, nodes);
}

} // namespace fixtures
