#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Int = std::int64_t;

// Simple undirected graph, bit-packed adjacency rows.
class Graph {
public:
    explicit Graph(std::size_t order)
        : order_(order), words_((order + 63) / 64), bits_(order * words_, 0) {
        if (order == 0) throw std::invalid_argument("Graph: order must be at least 1");
    }

    std::size_t order() const noexcept { return order_; }

    bool adjacent(std::size_t u, std::size_t v) const {
        check(u);
        check(v);
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(std::size_t u, std::size_t v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    // Sorted neighbour list.
    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        auto r = row(v);
        for (std::size_t i = 0; i < r.size(); ++i) {
            auto w = r[i];
            while (w) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> row(std::size_t v) const {
        check(v);
        return {bits_.data() + v * words_, words_};
    }

    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> d(order_);
        for (std::size_t v = 0; v < order_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(std::size_t v) const {
        if (v >= order_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    }

    std::size_t order_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// K_{p,k}^q: K_p with q independent vertices joined to the same k clique vertices.
struct PineappleParams {
    Int p = 0;
    Int k = 0;
    Int q = 0;

    bool valid() const noexcept { return k >= 1 && p - 2 >= k && q >= 1; }

    void validate() const {
        if (!valid())
            throw std::invalid_argument("invalid pineapple parameters (p,k,q)=(" + std::to_string(p) + "," +
                                        std::to_string(k) + "," + std::to_string(q) +
                                        "): need p-2 >= k >= 1 and q >= 1");
    }

    Int order() const noexcept { return p + q; }

    friend bool operator==(const PineappleParams&, const PineappleParams&) = default;
    friend auto operator<=>(const PineappleParams&, const PineappleParams&) = default;
};

// Mixed extension of a path: part i is a clique (t_i > 0) or coclique (t_i < 0) of size |t_i|.
class MixedExtension {
public:
    MixedExtension(std::initializer_list<Int> type) : MixedExtension(std::vector<Int>(type)) {}

    explicit MixedExtension(std::vector<Int> type) : type_(std::move(type)) {
        if (type_.size() < 2) throw std::invalid_argument("MixedExtension: base path needs at least 2 vertices");
        for (auto t : type_)
            if (t == 0) throw std::invalid_argument("MixedExtension: type entries must be nonzero");
    }

    std::size_t base_len() const noexcept { return type_.size(); }
    const std::vector<Int>& type() const noexcept { return type_; }

    Int order() const noexcept {
        Int n = 0;
        for (auto t : type_) n += t < 0 ? -t : t;
        return n;
    }

    MixedExtension reversed() const { return MixedExtension(std::vector<Int>(type_.rbegin(), type_.rend())); }

    // Single vertices count as cliques; the smaller of the tuple and its reversal.
    std::vector<Int> normal_form() const {
        std::vector<Int> a = type_;
        for (auto& t : a)
            if (t == -1) t = 1;
        std::vector<Int> b(a.rbegin(), a.rend());
        return std::min(a, b);
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < type_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(type_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const MixedExtension&, const MixedExtension&) = default;

private:
    std::vector<Int> type_;
};

inline bool mixed_ext_isomorphic(const MixedExtension& a, const MixedExtension& b) {
    return a.normal_form() == b.normal_form();
}

inline Graph make_complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// CS_{indep,clique}: clique vertices 0..clique-1, independent vertices after.
inline Graph make_complete_split(std::size_t indep, std::size_t clique) {
    if (indep < 1 || clique < 1) throw std::invalid_argument("make_complete_split: sizes must be positive");
    Graph g(indep + clique);
    for (std::size_t u = 0; u < clique; ++u) {
        for (std::size_t v = u + 1; v < clique; ++v) g.add_edge(u, v);
        for (std::size_t v = clique; v < clique + indep; ++v) g.add_edge(u, v);
    }
    return g;
}

// Clique 0..p-1, attachments 0..k-1, independent vertices p..p+q-1.
inline Graph make_pineapple(const PineappleParams& params) {
    params.validate();
    auto p = static_cast<std::size_t>(params.p);
    auto k = static_cast<std::size_t>(params.k);
    auto q = static_cast<std::size_t>(params.q);
    Graph g(p + q);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v) g.add_edge(u, v);
    for (std::size_t j = p; j < p + q; ++j)
        for (std::size_t u = 0; u < k; ++u) g.add_edge(u, j);
    return g;
}

// The pineapple as P3 type (p-k, k, -q).
inline MixedExtension pineapple_type(const PineappleParams& params) {
    params.validate();
    return MixedExtension{params.p - params.k, params.k, -params.q};
}

inline Graph make_mixed_extension(const MixedExtension& spec) {
    const auto& t = spec.type();
    std::vector<std::size_t> start(t.size() + 1, 0);
    for (std::size_t i = 0; i < t.size(); ++i) start[i + 1] = start[i] + static_cast<std::size_t>(t[i] < 0 ? -t[i] : t[i]);
    Graph g(start.back());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] > 0)
            for (auto u = start[i]; u < start[i + 1]; ++u)
                for (auto v = u + 1; v < start[i + 1]; ++v) g.add_edge(u, v);
        if (i + 1 < t.size())
            for (auto u = start[i]; u < start[i + 1]; ++u)
                for (auto v = start[i + 1]; v < start[i + 2]; ++v) g.add_edge(u, v);
    }
    return g;
}

inline Graph disjoint_union(std::span<const Graph> parts, std::size_t isolated) {
    std::size_t n = isolated;
    for (const auto& g : parts) n += g.order();
    Graph out(n);
    std::size_t offset = 0;
    for (const auto& g : parts) {
        for (std::size_t u = 0; u < g.order(); ++u)
            for (auto v : g.neighbors(u))
                if (u < v) out.add_edge(offset + u, offset + v);
        offset += g.order();
    }
    return out;
}

inline Graph disjoint_union(std::initializer_list<Graph> parts, std::size_t isolated) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()), isolated);
}

} // namespace cospec
