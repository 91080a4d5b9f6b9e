#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

/// Accounting for one parsed edge-list source.
/// total_lines = parsed_edges + dropped_self_loops + collapsed_duplicates + skipped_lines.
struct EdgeListDocument {
    std::string source_path;
    std::size_t parsed_edges = 0;
    std::size_t dropped_self_loops = 0;
    std::size_t collapsed_duplicates = 0;
    std::size_t skipped_lines = 0; // comments and blanks
    std::size_t total_lines = 0;
};

struct ParsedEdgeList {
    Graph graph;
    EdgeListDocument document;
};

/// Reads "u v" lines of non-negative integers (at most 2^32-1). Lines whose
/// first non-blank character is '#' and blank lines are ignored.
/// Throws ParseError carrying the 1-based line number.
ParsedEdgeList parse_edge_list(std::istream& in, std::string source_path = "<stream>");
ParsedEdgeList parse_edge_list(std::string_view text);
/// Throws Error(IoError) when the file cannot be opened.
ParsedEdgeList read_edge_list(const std::filesystem::path& path);

/// Canonical form: one "u v" line per edge, u < v, lines sorted by (u, v).
/// Isolated nodes are not representable and are omitted.
void write_edge_list(const Graph& graph, std::ostream& out);
void write_edge_list(const Graph& graph, const std::filesystem::path& path);

using CsvField = std::variant<std::string, std::int64_t, std::uint64_t, double>;
using CsvRow = std::vector<CsvField>;

/// Shortest round-trip decimal form with '.' separator.
std::string format_number(double value);

/// RFC 4180 style CSV with '\n' line endings. Every row must match the
/// header's arity (Error(InvalidParams) otherwise).
void write_curve_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                     std::ostream& out);
/// Throws Error(IoError) when `path` cannot be written.
void write_curve_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                     const std::filesystem::path& path);

} // namespace astopo
