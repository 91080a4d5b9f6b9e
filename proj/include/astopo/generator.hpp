#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "astopo/graph.hpp"

namespace astopo {

struct BaParams {
    std::size_t n_final = 0;
    std::size_t m_links = 1;
    /// Seed-clique size; m_links + 1 when unset.
    std::optional<std::size_t> m0;
    std::uint64_t seed = 0;

    std::size_t seed_size() const noexcept { return m0.value_or(m_links + 1); }
    /// C(m0, 2) + m_links * (n_final - m0)
    std::size_t expected_edges() const noexcept;
};

/// Throws Error(InvalidParams) unless 1 <= m_links <= m0 <= n_final. With
/// n_final == m0 the result is the seed clique itself.
void validate(const BaParams& params);

/// Barabasi-Albert growth from a complete graph on m0 nodes. Every new node
/// links to m_links distinct existing nodes drawn proportionally to their
/// current degree, redrawing repeats. Nodes are labelled 0 .. n_final-1 in
/// arrival order.
Graph generate_ba(const BaParams& params);

/// Copy of `graph` with `budget` extra links placed uniformly at random among
/// the non-adjacent pairs of its top ceil(top_fraction * N) ranked nodes.
/// Throws Error(InvalidParams) when fewer than `budget` such pairs exist.
Graph enrich_club(const Graph& graph, double top_fraction, std::size_t budget, std::uint64_t seed);

/// Moves `count` links into the rich club while keeping N and L fixed:
/// deletes `count` random links that are not between two top-ranked nodes and
/// adds `count` random absent links among the top ceil(top_fraction * N) nodes.
Graph rewire_into_club(const Graph& graph, double top_fraction, std::size_t count, std::uint64_t seed);

} // namespace astopo
