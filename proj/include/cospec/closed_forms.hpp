#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/family.hpp"
#include "cospec/graph.hpp"
#include "cospec/int_poly.hpp"

namespace cospec {

// x^x_mult (x+1)^x1_mult cubic, with cubic(0) != 0 and cubic(-1) != 0.
// "cubic" is the coprime core; it has degree 2 for complete split graphs.
struct FactoredPoly {
    Int x_mult = 0;
    Int x1_mult = 0;
    IntPoly cubic{1};

    // Moves any factors x and x+1 of core into the multiplicities.
    static FactoredPoly make(Int x_mult, Int x1_mult, IntPoly core) {
        if (core.is_zero()) throw std::invalid_argument("FactoredPoly: zero core");
        for (;;) {
            auto [q, r] = synthetic_division(core, 0);
            if (r != 0) break;
            core = std::move(q);
            ++x_mult;
        }
        for (;;) {
            auto [q, r] = synthetic_division(core, -1);
            if (r != 0) break;
            core = std::move(q);
            ++x1_mult;
        }
        if (x_mult < 0 || x1_mult < 0) throw std::invalid_argument("FactoredPoly: negative multiplicity");
        return FactoredPoly{x_mult, x1_mult, std::move(core)};
    }

    Int degree() const { return x_mult + x1_mult + cubic.degree(); }

    IntPoly expand() const {
        std::vector<mpz_class> b(static_cast<std::size_t>(x1_mult) + 1);
        for (std::size_t i = 0; i < b.size(); ++i) mpz_bin_uiui(b[i].get_mpz_t(), static_cast<unsigned long>(x1_mult), i);
        return (IntPoly(std::move(b)) * cubic).shifted(static_cast<std::size_t>(x_mult));
    }

    // e.g. "x(x+1)^2(x^3-2x^2-5x+4)"
    std::string to_string() const {
        std::string s;
        if (x_mult == 1) s += "x";
        if (x_mult > 1) s += "x^" + std::to_string(x_mult);
        if (x1_mult == 1) s += "(x+1)";
        if (x1_mult > 1) s += "(x+1)^" + std::to_string(x1_mult);
        if (cubic != IntPoly{1}) s += "(" + cubic.to_string() + ")";
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const FactoredPoly& f) { return os << f.to_string(); }
};

namespace detail {

inline IntPoly monic_cubic(const mpz_class& c2, const mpz_class& c1, const mpz_class& c0) {
    return IntPoly(std::vector<mpz_class>{c0, c1, c2, mpz_class(1)});
}

inline mpz_class z(Int v) { return mpz_class(static_cast<long>(v)); }

} // namespace detail

// CS_{indep,clique}: x^{indep-1} (x+1)^{clique-1} (x^2 - (clique-1)x - indep*clique).
inline FactoredPoly cs_poly(Int indep, Int clique) {
    if (indep < 1 || clique < 1) throw std::invalid_argument("cs_poly: sizes must be positive");
    using detail::z;
    IntPoly quad(std::vector<mpz_class>{-z(indep) * z(clique), -(z(clique) - 1), mpz_class(1)});
    return FactoredPoly::make(indep - 1, clique - 1, std::move(quad));
}

inline FactoredPoly pineapple_poly(const PineappleParams& params) {
    params.validate();
    using detail::z;
    mpz_class p = z(params.p), k = z(params.k), q = z(params.q);
    return FactoredPoly::make(params.q - 1, params.p - 2,
                              detail::monic_cubic(-(p - 2), -(p + k * q - 1), k * q * (p - k - 1)));
}

// Row of the (l,m,-n,s) family: x^{a+n} (x+1)^{l+m+s-3} (x^3 - c2 x^2 - (b1 n + b0) x + c1 n + c0).
struct P4TableRow {
    Int l, m, s;
    Int b1, b0;
    Int c1, c0;

    Int c2() const { return l + m + s - 3; }
};

// Derived from the 4x4 quotient [[l-1,m,0,0],[l,m-1,n,0],[0,m,0,s],[0,0,n,s-1]] with its zero root removed.
inline constexpr std::array<P4TableRow, 10> p4_table_rows{{
    {3, 3, 6, 9, -15, 45, 25},
    {3, 4, 4, 8, -9, 40, 18},
    {3, 6, 3, 9, -6, 45, 16},
    {4, 2, 6, 8, -15, 40, 25},
    {4, 3, 3, 6, -4, 30, 12},
    {4, 6, 2, 8, 1, 40, 9},
    {5, 2, 4, 6, -9, 34, 18},
    {5, 4, 2, 6, 1, 34, 8},
    {7, 2, 3, 5, -6, 37, 16},
    {7, 3, 2, 5, 1, 37, 9},
}};

inline const P4TableRow& p4_table_row(Int l, Int m, Int s) {
    for (const auto& r : p4_table_rows)
        if (r.l == l && r.m == m && r.s == s) return r;
    throw std::invalid_argument("no (l,m,-n,s) table row for (l,m,s)=(" + std::to_string(l) + "," + std::to_string(m) +
                                "," + std::to_string(s) + ")");
}

// Characteristic polynomial of realize(spec), isolated vertices folded into x_mult.
inline FactoredPoly family_poly(const FamilySpec& spec) {
    validate(spec);
    using detail::monic_cubic;
    using detail::z;
    const auto& P = spec.params;
    const Int a = spec.isolated;
    switch (spec.family) {
    case Family::TwoComponent: {
        mpz_class t = z(P[0]), m = z(P[1]), n = z(P[2]);
        IntPoly core = IntPoly::linear(t - 1) * IntPoly(std::vector<mpz_class>{-m * n, -(m - 1), mpz_class(1)});
        return FactoredPoly::make(a + P[2] - 1, P[0] + P[1] - 2, std::move(core));
    }
    case Family::P3_cc: {
        mpz_class l = z(P[0]), m = z(P[1]), n = z(P[2]);
        return FactoredPoly::make(a + P[0] + P[1] - 2, P[2] - 1, monic_cubic(-(n - 1), -(l * m + m * n), l * m * n - l * m));
    }
    case Family::P3_mixed: {
        mpz_class l = z(P[0]), m = z(P[1]), n = z(P[2]);
        return FactoredPoly::make(a + P[1] - 1, P[0] + P[2] - 2,
                                  monic_cubic(-(l + n - 2), -(l * m + m * n - l * n + l + n - 1), 2 * l * m * n - l * m - m * n));
    }
    case Family::P3_cm: {
        mpz_class l = z(P[0]), m = z(P[1]), n = z(P[2]);
        return FactoredPoly::make(a + P[0] - 1, P[1] + P[2] - 2,
                                  monic_cubic(-(m + n - 2), -(l * m + m + n - 1), l * m * n - l * m));
    }
    case Family::P3_ccc: {
        mpz_class l = z(P[0]), m = z(P[1]), n = z(P[2]);
        return FactoredPoly::make(a, P[0] + P[1] + P[2] - 3,
                                  monic_cubic(-(l + m + n - 3), -(2 * m + 2 * n + 2 * l - l * n - 3),
                                              l * m * n + l * n - l - m - n + 1));
    }
    case Family::P4_a: {
        mpz_class l = z(P[0]);
        return FactoredPoly::make(a + 4, P[0], monic_cubic(-l, -(2 * l + 10), 12 * l));
    }
    case Family::P4_b: {
        mpz_class m = z(P[0]), n = z(P[1]);
        return FactoredPoly::make(a + 2, P[0] + P[1] - 1, monic_cubic(-(m + n - 1), -(2 * m + 2 * n), 4 * m * n));
    }
    case Family::P4_c: {
        mpz_class l = z(P[0]), n = z(P[1]);
        return FactoredPoly::make(a + 3, P[0] + P[1] - 1, monic_cubic(-(l + n - 1), -(5 * n + 2 * l - l * n), 6 * l * n));
    }
    case Family::P4_table: {
        const auto& row = p4_table_row(P[0], P[1], P[3]);
        mpz_class n = z(P[2]);
        return FactoredPoly::make(a + P[2], row.c2(),
                                  monic_cubic(-z(row.c2()), -(z(row.b1) * n + z(row.b0)), z(row.c1) * n + z(row.c0)));
    }
    case Family::P5: {
        mpz_class l = z(P[0]), m = z(P[1]), n = z(P[2]);
        return FactoredPoly::make(a + P[1], P[0] + P[2] - 1,
                                  monic_cubic(-(l + n - 1), -(m * n - l * n + l * m + l + n), 2 * l * m * n + l * n));
    }
    }
    throw std::invalid_argument("family_poly: unknown family");
}

namespace detail {

using RatPoly = std::vector<mpq_class>;  // low degree first, trimmed

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline int sign_at(const RatPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

inline int sign_at_infinity(const RatPoly& p, bool positive) {
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

} // namespace detail

// Sturm chain of f over Q.
inline std::vector<detail::RatPoly> sturm_sequence(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("sturm_sequence: need a non-constant polynomial");
    detail::RatPoly p0, p1;
    for (const auto& c : f.coeffs()) p0.emplace_back(c);
    for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * static_cast<unsigned long>(i));
    std::vector<detail::RatPoly> seq{p0, p1};
    while (seq.back().size() > 1) {
        auto r = detail::rat_rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    return seq;
}

// Distinct real roots in (lo, hi]; an absent bound means infinity. f(lo) must be nonzero.
inline int count_real_roots(const IntPoly& f, std::optional<mpq_class> lo, std::optional<mpq_class> hi) {
    auto seq = sturm_sequence(f);
    if (lo && detail::sign_at(seq.front(), *lo) == 0) throw std::invalid_argument("count_real_roots: lower bound is a root");
    auto variations = [&](const std::optional<mpq_class>& x, bool positive) {
        int v = 0;
        int last = 0;
        for (const auto& p : seq) {
            int s = x ? detail::sign_at(p, *x) : detail::sign_at_infinity(p, positive);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(lo, false) - variations(hi, true);
}

struct RootProfile {
    int below_minus_one = 0;  // (-inf, -1)
    int between = 0;          // (-1, 0)
    int positive = 0;         // (0, inf)
};

// Real-root locations of a core coprime to x(x+1).
inline RootProfile root_profile(const IntPoly& core) {
    if (core(0) == 0 || core(-1) == 0) throw std::invalid_argument("root_profile: core has root 0 or -1");
    RootProfile r;
    r.below_minus_one = count_real_roots(core, std::nullopt, mpq_class(-1));
    r.between = count_real_roots(core, mpq_class(-1), mpq_class(0));
    r.positive = count_real_roots(core, mpq_class(0), std::nullopt);
    return r;
}

} // namespace cospec
