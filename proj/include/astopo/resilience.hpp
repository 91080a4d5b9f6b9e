#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

enum class RemovalMode { Attack, Error };

const char* to_string(RemovalMode mode) noexcept;

struct TracePoint {
    std::size_t removed; // k
    double f;            // k / N
    double S;            // largest cluster / N, N the intact size
};

struct RemovalTrace {
    RemovalMode mode = RemovalMode::Attack;
    std::vector<TracePoint> points;
    std::optional<std::uint64_t> seed; // error mode only
    std::size_t trials = 1;
    bool recompute_degrees = false;    // attack mode only
};

/// Removal count reached at fraction f_max, floor(f_max * N) tolerant of rounding noise.
std::size_t removal_limit(std::size_t n, double f_max);

/// Step giving roughly 200 recorded points up to f_max.
std::size_t default_step(std::size_t n, double f_max);

/// Degree-ordered removal sequence. Static order follows the initial
/// DegreeRanking; with `recompute_degrees` the best-connected survivor
/// (ties by label) is taken after each removal.
std::vector<NodeIndex> attack_order(const Graph& graph, bool recompute_degrees);

/// Uniform random removal sequence for one trial, drawn from an independent
/// stream of the master seed.
std::vector<NodeIndex> error_order(const Graph& graph, std::uint64_t seed, std::size_t trial);

/// Largest-cluster size after each prefix of `order`: entry k is the size
/// with the first k nodes removed, k = 0 .. order.size().
/// Computed by re-inserting nodes in reverse with a union-find.
std::vector<std::size_t> largest_cluster_profile(const Graph& graph, const std::vector<NodeIndex>& order);

/// Requires 0 < f_max <= 1 and step >= 1 (Error(InvalidParams) otherwise).
/// Points are recorded every `step` removals and at floor(f_max * N).
RemovalTrace attack_trace(const Graph& graph, double f_max, std::size_t step, bool recompute_degrees);

/// S averaged over `trials` independent permutations.
RemovalTrace error_trace(const Graph& graph, double f_max, std::size_t step, std::uint64_t seed,
                         std::size_t trials);

} // namespace astopo
