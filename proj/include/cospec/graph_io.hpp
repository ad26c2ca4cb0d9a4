#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

enum class GraphFormat { graph6, edge_list };

inline constexpr std::size_t graph6_max_order = 258047;

namespace detail {

inline void graph6_put_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

} // namespace detail

inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > graph6_max_order) throw std::length_error("graph6: order " + std::to_string(n) + " unsupported");
    std::string out;
    detail::graph6_put_order(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    auto sextet = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw std::invalid_argument("graph6: truncated input");
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63u;
    };
    std::size_t pos = 0;
    std::size_t n = 0;
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw std::length_error("graph6: order too large");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    Graph g(n);
    std::size_t bits = n * (n - 1) / 2;
    if (text.size() != pos + (bits + 5) / 6) throw std::invalid_argument("graph6: length does not match order");
    std::size_t b = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++b) {
            unsigned s = sextet(pos + b / 6);
            if ((s >> (5 - b % 6)) & 1u) g.add_edge(u, v);
        }
    }
    return g;
}

// One "u v" line per edge, u < v, lexicographic, lines joined by '\n'.
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (auto v : g.neighbors(u)) {
            if (v <= u) continue;
            if (!out.empty()) out.push_back('\n');
            out += std::to_string(u);
            out.push_back(' ');
            out += std::to_string(v);
        }
    }
    return out;
}

// Edge lists do not carry isolated vertices, so the order is passed in.
inline Graph from_edge_list(std::string_view text, std::size_t order) {
    Graph g(order);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u = -1;
        long long v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0)
            throw std::invalid_argument("edge list: malformed line '" + line + "'");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

inline std::string export_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

} // namespace cospec
