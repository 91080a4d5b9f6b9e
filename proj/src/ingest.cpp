#include "astopo/ingest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "astopo/error.hpp"

namespace astopo {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on blanks; returns the number of tokens seen (stops storing after 3).
std::size_t tokenize(std::string_view line, std::array<std::string_view, 3>& tokens) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i]))
            ++i;
        if (i == line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && !is_blank(line[i]))
            ++i;
        if (count < tokens.size())
            tokens[count] = line.substr(start, i - start);
        ++count;
    }
    return count;
}

NodeLabel parse_label(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, "node label out of range: '" + std::string(token) + "'");
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "not a non-negative integer: '" + std::string(token) + "'");
    if (value > std::numeric_limits<NodeLabel>::max())
        throw ParseError(line, "node label exceeds 2^32-1: '" + std::string(token) + "'");
    return static_cast<NodeLabel>(value);
}

} // namespace

ParsedEdgeList parse_edge_list(std::istream& in, std::string source_path) {
    GraphBuilder builder;
    EdgeListDocument doc;
    doc.source_path = std::move(source_path);

    std::string line;
    std::array<std::string_view, 3> tokens;
    while (std::getline(in, line)) {
        const std::size_t lineno = ++doc.total_lines;
        const std::size_t count = tokenize(line, tokens);
        if (count == 0 || tokens[0].front() == '#') {
            ++doc.skipped_lines;
            continue;
        }
        if (count != 2)
            throw ParseError(lineno, "expected two node labels, found " + std::to_string(count) + " fields");
        const NodeLabel u = parse_label(tokens[0], lineno);
        const NodeLabel v = parse_label(tokens[1], lineno);
        builder.add_edge(u, v);
    }
    if (in.bad())
        throw Error(ErrorKind::IoError, "read failure in " + doc.source_path);

    ParsedEdgeList out{builder.build(), std::move(doc)};
    out.document.parsed_edges = out.graph.edge_count();
    out.document.dropped_self_loops = builder.self_loops();
    out.document.collapsed_duplicates = builder.duplicates();
    return out;
}

ParsedEdgeList parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

ParsedEdgeList read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return parse_edge_list(in, path.string());
}

void write_edge_list(const Graph& graph, std::ostream& out) {
    std::string buffer;
    for (const Edge& e : graph.edges()) {
        buffer += std::to_string(e.u);
        buffer += ' ';
        buffer += std::to_string(e.v);
        buffer += '\n';
    }
    out << buffer;
}

void write_edge_list(const Graph& graph, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    write_edge_list(graph, out);
    if (!out.flush())
        throw Error(ErrorKind::IoError, "write failure on " + path.string());
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct FieldFormatter {
    std::string operator()(const std::string& s) const { return quote(s); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
};

} // namespace

void write_curve_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                     std::ostream& out) {
    std::string buffer;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i)
            buffer += ',';
        buffer += quote(header[i]);
    }
    buffer += '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        if (row.size() != header.size())
            throw Error(ErrorKind::InvalidParams, "CSV row " + std::to_string(r + 1) + " has " +
                                                     std::to_string(row.size()) + " fields, expected " +
                                                     std::to_string(header.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                buffer += ',';
            buffer += std::visit(FieldFormatter{}, row[i]);
        }
        buffer += '\n';
    }
    out << buffer;
}

void write_curve_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                     const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    write_curve_csv(header, rows, out);
    if (!out.flush())
        throw Error(ErrorKind::IoError, "write failure on " + path.string());
}

} // namespace astopo
