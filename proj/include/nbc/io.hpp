#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nbc/coloring.hpp"
#include "nbc/graph.hpp"

namespace nbc {

namespace detail {

// Splits text into lines, dropping '#' comment lines. Line endings are LF;
// a trailing CR is stripped so CRLF input still parses.
inline std::vector<std::string_view> data_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::int64_t> parse_ints(std::string_view line, const char* what) {
    std::vector<std::int64_t> values;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p != end) {
        if (*p == ' ') {
            ++p;
            continue;
        }
        std::int64_t value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc())
            throw ParseError(std::string(what) + ": invalid integer in \"" + std::string(line) +
                             "\"");
        values.push_back(value);
        p = next;
    }
    return values;
}

inline int narrow(std::int64_t value, const char* what) {
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " out of range: " + std::to_string(value));
    return static_cast<int>(value);
}

}  // namespace detail

// --- GraphFile: '#' comments, header "n m", then m lines "u v" (u < v). ---

inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph parse_graph(std::string_view text) {
    const auto lines = detail::data_lines(text);
    if (lines.empty()) throw ParseError("graph file: missing \"n m\" header");
    const auto header = detail::parse_ints(lines[0], "graph header");
    if (header.size() != 2) throw ParseError("graph file: header must be \"n m\"");
    const int n = detail::narrow(header[0], "vertex count");
    const std::int64_t m = header[1];
    if (n < 0 || m < 0) throw ParseError("graph file: negative header value");
    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
        throw ParseError("graph file: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    GraphBuilder b(n);
    for (std::int64_t i = 0; i < m; ++i) {
        const auto pair = detail::parse_ints(lines[static_cast<std::size_t>(i) + 1], "edge line");
        if (pair.size() != 2)
            throw ParseError("graph file: edge line must be \"u v\", got \"" +
                             std::string(lines[static_cast<std::size_t>(i) + 1]) + "\"");
        const int u = detail::narrow(pair[0], "edge endpoint");
        const int v = detail::narrow(pair[1], "edge endpoint");
        if (u >= v)
            throw ParseError("graph file: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") must satisfy u < v");
        b.add_edge(u, v);
    }
    return b.take();
}

// --- ColoringFile: '#' comments, header "q n", then n color indices. ---

inline std::string serialize_coloring(const Coloring& c) {
    std::string out = std::to_string(c.q()) + " " + std::to_string(c.size()) + "\n";
    if (c.size() == 0) return out;
    for (int v = 0; v < c.size(); ++v) out += (v ? " " : "") + std::to_string(c.color(v));
    out += "\n";
    return out;
}

inline Coloring parse_coloring(std::string_view text) {
    const auto lines = detail::data_lines(text);
    if (lines.empty()) throw ParseError("coloring file: missing \"q n\" header");
    const auto header = detail::parse_ints(lines[0], "coloring header");
    if (header.size() != 2) throw ParseError("coloring file: header must be \"q n\"");
    Palette palette(detail::narrow(header[0], "q"));
    const int n = detail::narrow(header[1], "vertex count");
    if (n < 0) throw ParseError("coloring file: negative vertex count");
    if (n == 0) {
        if (lines.size() != 1) throw ParseError("coloring file: unexpected data after header");
        return Coloring(palette, {});
    }
    if (lines.size() != 2) throw ParseError("coloring file: expected one line of color indices");
    const auto values = detail::parse_ints(lines[1], "color indices");
    if (static_cast<int>(values.size()) != n)
        throw ParseError("coloring file: expected " + std::to_string(n) + " color indices, found " +
                         std::to_string(values.size()));
    std::vector<int> colors;
    colors.reserve(values.size());
    for (std::int64_t v : values) colors.push_back(detail::narrow(v, "color index"));
    return Coloring(palette, std::move(colors));
}

// --- File helpers. ---

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
    if (!out) throw ParseError("write failed for " + path.string());
}

inline Graph load_graph(const std::filesystem::path& path) {
    return parse_graph(read_text_file(path));
}

inline void save_graph(const Graph& g, const std::filesystem::path& path) {
    write_text_file(path, serialize_graph(g));
}

inline Coloring load_coloring(const std::filesystem::path& path) {
    return parse_coloring(read_text_file(path));
}

inline void save_coloring(const Coloring& c, const std::filesystem::path& path) {
    write_text_file(path, serialize_coloring(c));
}

// --- Verification report as JSON with a fixed key order. ---

inline nlohmann::ordered_json report_to_json(const VerificationReport& report, int q, int n,
                                             std::int64_t m) {
    nlohmann::ordered_json doc;
    doc["balanced"] = report.balanced;
    doc["q"] = q;
    doc["n"] = n;
    doc["m"] = m;
    doc["sigma_vertex"] = report.sigma_vertex;
    doc["sigma_edge"] = report.sigma_edge;
    auto& checks = doc["identity_checks"] = nlohmann::ordered_json::array();
    for (const auto& check : report.identity_checks) {
        nlohmann::ordered_json entry;
        entry["name"] = check.name;
        entry["expected"] = check.expected;
        entry["actual"] = check.actual;
        entry["pass"] = check.pass;
        checks.push_back(std::move(entry));
    }
    auto& violations = doc["violations"] = nlohmann::ordered_json::array();
    for (const auto& violation : report.violations) {
        nlohmann::ordered_json entry;
        entry["vertex"] = violation.vertex;
        entry["counts"] = violation.counts;
        violations.push_back(std::move(entry));
    }
    return doc;
}

inline std::string report_json_text(const VerificationReport& report, int q, int n,
                                    std::int64_t m) {
    return report_to_json(report, q, n, m).dump(2) + "\n";
}

// --- Family spec grammar:
//     cycle:N | complete:N | multipartite:N1,N2,... | circulant:N:A1,A2,...

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token =
            text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        int value = 0;
        auto [next, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || next != token.data() + token.size())
            throw ParseError(std::string(what) + ": invalid integer \"" + std::string(token) +
                             "\"");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family spec \"" + std::string(text) + "\" is missing ':'");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (kind == "cycle" || kind == "complete") {
        const auto params = detail::parse_int_list(rest, "family spec");
        if (params.size() != 1)
            throw ParseError("family spec: " + std::string(kind) + " takes a single integer");
        return kind == "cycle" ? FamilySpec::cycle(params[0]) : FamilySpec::complete(params[0]);
    }
    if (kind == "multipartite")
        return FamilySpec::multipartite(detail::parse_int_list(rest, "family spec"));
    if (kind == "circulant") {
        const std::size_t second = rest.find(':');
        if (second == std::string_view::npos)
            throw ParseError("family spec: circulant needs \"circulant:N:A1,A2,...\"");
        const auto order = detail::parse_int_list(rest.substr(0, second), "family spec");
        if (order.size() != 1) throw ParseError("family spec: circulant order must be one integer");
        return FamilySpec::circulant(order[0],
                                     detail::parse_int_list(rest.substr(second + 1), "family spec"));
    }
    throw ParseError("unknown family \"" + std::string(kind) + "\"");
}

}  // namespace nbc
