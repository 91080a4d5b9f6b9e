#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

struct RichClubPoint {
    std::size_t prefix;    // m, number of top-ranked nodes
    double rank;           // m / N
    std::uint64_t links;   // links among the top m nodes
    double phi;            // links / (m (m - 1) / 2)
};

/// Rich-club coefficient at every prefix m = 2 .. N.
struct RichClubCurve {
    std::size_t n_nodes = 0;
    std::vector<RichClubPoint> points;

    /// Point for prefix size m (2 <= m <= N).
    const RichClubPoint& at_prefix(std::size_t m) const { return points.at(m - 2); }
};

/// Throws Error(InsufficientNodes) when N < 2.
RichClubCurve rich_club_curve(const Graph& graph);
RichClubCurve rich_club_curve(const Graph& graph, const DegreeRanking& ranking);

/// phi at prefix m = floor(r * N). Throws Error(InsufficientNodes) when m < 2.
double rich_club_at(const Graph& graph, double r);

/// Prefix size used by rich_club_at, floor(r * N) tolerant of rounding noise.
std::size_t prefix_for(std::size_t n, double r);

/// Up to `count` points spaced evenly in log(m); always keeps m = 2 and m = N.
std::vector<RichClubPoint> log_spaced(const RichClubCurve& curve, std::size_t count);

/// Links between 5%-wide rank bins, upper triangle including the diagonal.
class RankBinMatrix {
public:
    static constexpr std::size_t kBins = 20;
    static constexpr double kBinWidth = 0.05;

    /// bin(p) = min(floor(20 p / N), 19) for 1-based rank p.
    static std::size_t bin_of(std::size_t position, std::size_t n) noexcept;

    void add(std::size_t bin_a, std::size_t bin_b) noexcept;
    std::uint64_t at(std::size_t i, std::size_t j) const noexcept { return cells_[i][j]; }
    std::uint64_t total() const noexcept;

    friend bool operator==(const RankBinMatrix&, const RankBinMatrix&) = default;

private:
    std::array<std::array<std::uint64_t, kBins>, kBins> cells_{};
};

/// All-zero for a graph without nodes.
RankBinMatrix link_rank_matrix(const Graph& graph);
RankBinMatrix link_rank_matrix(const Graph& graph, const DegreeRanking& ranking);

/// Per-node coefficients indexed by NodeIndex.
struct CycleCoefficientTable {
    std::vector<std::uint64_t> kt;
    std::vector<std::uint64_t> kr;
    std::vector<NodeIndex> kt_rank_order;
    std::vector<NodeIndex> kr_rank_order;
};

/// Triangles through each node: adjacent pairs of its neighbours.
std::vector<std::uint64_t> triangle_coefficients(const Graph& graph);

/// Rectangles through each node v: for every unordered pair {u, w} of v's
/// neighbours, the number of nodes x != v adjacent to both. Chords allowed.
std::vector<std::uint64_t> rectangle_coefficients(const Graph& graph);

/// Node indices sorted by decreasing value, ties by ascending label.
std::vector<NodeIndex> rank_by_value(std::span<const std::uint64_t> values);

CycleCoefficientTable cycle_coefficients(const Graph& graph);

struct TopologySummary {
    std::size_t n_nodes = 0;
    std::size_t n_links = 0;
    double k_average = 0.0;
    std::size_t k_max = 0;
    std::uint64_t kt_max = 0;
    double kt_average = 0.0;
    std::uint64_t kr_max = 0;
    double kr_average = 0.0;
    std::optional<double> gamma_estimate;
};

/// Averages run over all N nodes. gamma_estimate is set iff with_gamma and
/// at least three distinct positive degrees occur.
TopologySummary summarize(const Graph& graph, bool with_gamma);
TopologySummary summarize(const Graph& graph, const CycleCoefficientTable& cycles, bool with_gamma);

/// Degree exponent from a least-squares line through log CCDF against log k
/// at every distinct degree k >= 1: gamma = |slope| + 1.
/// Throws Error(FitNotApplicable) with fewer than three distinct degrees.
double fit_power_law(const Graph& graph);
double fit_power_law(std::span<const std::size_t> degrees);

} // namespace astopo
