#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/closed_forms.hpp"
#include "cospec/family.hpp"
#include "cospec/graph.hpp"
#include "cospec/verify.hpp"

namespace cospec {

struct Mate {
    FamilySpec spec;
    Int realized_order = 0;
    bool verified = false;

    friend bool operator==(const Mate&, const Mate&) = default;
};

struct Classification {
    PineappleParams params;
    std::vector<Mate> mates;

    bool das() const noexcept { return mates.empty(); }
};

// Scan and closed form disagree: a bug in one of them.
class ClosedFormMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Largest p or q the solvers accept; loops are linear in p and q.
inline constexpr Int max_param = 1'000'000;

namespace detail {

using Wide = __int128;

inline void check_params(const PineappleParams& params) {
    params.validate();
    if (params.p > max_param || params.q > max_param)
        throw std::invalid_argument("pineapple parameters exceed the supported range (p, q <= " + std::to_string(max_param) + ")");
}

inline std::optional<mpz_class> exact_sqrt(const mpz_class& v) {
    if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline std::optional<Int> as_int(const mpq_class& v) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    return v.get_num().get_si();
}

// Collects candidates whose family polynomial equals the pineapple's.
class Collector {
public:
    explicit Collector(const PineappleParams& params) : params_(params), target_(pineapple_poly(params)) {}

    void offer(const FamilySpec& spec) {
        if (!spec_valid(spec) || realized_order(spec) != params_.order()) return;
        if (family_poly(spec) != target_) return;
        if (isomorphic_to_pineapple(spec, params_)) {
            identity_.push_back(spec);
            return;
        }
        mates_.push_back(Mate{spec, params_.order(), false});
    }

    std::vector<Mate> take() {
        std::sort(mates_.begin(), mates_.end(), [](const Mate& a, const Mate& b) { return a.spec < b.spec; });
        return std::move(mates_);
    }

    const std::vector<FamilySpec>& identity_solutions() const noexcept { return identity_; }

private:
    PineappleParams params_;
    FactoredPoly target_;
    std::vector<Mate> mates_;
    std::vector<FamilySpec> identity_;
};

inline std::vector<FamilySpec> specs_of(const std::vector<Mate>& mates) {
    std::vector<FamilySpec> out;
    for (const auto& m : mates) out.push_back(m.spec);
    std::sort(out.begin(), out.end());
    return out;
}

inline void expect_agreement(const char* name, const PineappleParams& params, const std::vector<Mate>& scanned,
                             std::vector<FamilySpec> closed) {
    std::sort(closed.begin(), closed.end());
    if (specs_of(scanned) != closed)
        throw ClosedFormMismatch(std::string(name) + ": closed form and parameter scan disagree for (p,k,q)=(" +
                                 std::to_string(params.p) + "," + std::to_string(params.k) + "," +
                                 std::to_string(params.q) + ")");
}

} // namespace detail

// Cubic in a for the two-component case, evaluated at a. Its roots need not solve the system; diagnostic only.
inline mpz_class two_component_cubic_in_a(const PineappleParams& params, Int a) {
    mpz_class p = params.p, k = params.k, q = params.q, x = a;
    return k * x * x * x + (p - p * p + (1 - q) * k) * x * x +
           ((2 * q - 1) * p * p - 2 * p * q * k + (1 - 2 * q) * p + 2 * q * k * k + (q - q * q) * k) * x +
           (k + 1 - q) * p * p * q + ((2 * q - 2) * k - 2 * k * k + q - 1) * p * q + q * k * k * k +
           2 * (1 - q) * q * k * k + (q * q - 2 * q + 1) * q * k;
}

// Closed-form route: n = q-a, t = (q-a)(p-k)/(p+q-a-k-1), m = (p^2-(k+1)p+kq-ka)/(p+q-a-k-1).
inline std::vector<FamilySpec> closed_form_two_component(const PineappleParams& params) {
    detail::check_params(params);
    using W = detail::Wide;
    const Int p = params.p, k = params.k, q = params.q;
    std::vector<FamilySpec> out;
    for (Int a = 0; a < q - 1; ++a) {
        W d = p + q - a - k - 1;
        W tn = W(q - a) * (p - k);
        W mn = W(p) * p - W(k + 1) * p + W(k) * q - W(k) * a;
        if (d <= 0 || tn % d != 0 || mn % d != 0) continue;
        Int t = static_cast<Int>(tn / d), m = static_cast<Int>(mn / d), n = q - a;
        if (t < 2 || m < 2 || n < 2 || m + t != p || W(m) * (n - t) != W(k) * q) continue;
        out.push_back(FamilySpec::two_component(t, m, n, a));
    }
    return out;
}

struct TwoComponentReport {
    std::vector<Mate> mates;
    std::vector<Int> cubic_roots;     // a in [0, q) with two_component_cubic_in_a(a) = 0
    std::vector<Int> rejected_roots;  // cubic roots that yield no mate
    std::vector<Int> off_cubic;       // isolated counts of mates that are not cubic roots
};

// K_t ∪ CS(clique m, indep n) ∪ aK_1 with t, m, n >= 2.
inline TwoComponentReport solve_two_component_report(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, kq = params.k * params.q;
    detail::Collector col(params);
    for (Int t = 2; t <= p - 2; ++t) {
        Int m = p - t;
        if (kq % m != 0) continue;
        Int n = t + kq / m;
        if (n < 2 || n > q) continue;
        col.offer(FamilySpec::two_component(t, m, n, q - n));
    }
    TwoComponentReport rep;
    rep.mates = col.take();
    detail::expect_agreement("two-component", params, rep.mates, closed_form_two_component(params));
    std::set<Int> accepted;
    for (const auto& m : rep.mates) accepted.insert(m.spec.isolated);
    for (Int a = 0; a < q; ++a)
        if (two_component_cubic_in_a(params, a) == 0) {
            rep.cubic_roots.push_back(a);
            if (!accepted.count(a)) rep.rejected_roots.push_back(a);
        }
    for (Int a : accepted)
        if (two_component_cubic_in_a(params, a) != 0) rep.off_cubic.push_back(a);
    return rep;
}

inline std::vector<Mate> solve_two_component(const PineappleParams& params) {
    return solve_two_component_report(params).mates;
}

inline std::optional<FamilySpec> closed_form_p3_cc(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    mpq_class l(k * q * (p - 1) * (p - k - 1), k * (k - 1) * q + (p - 1) * (p - 2));
    mpq_class m(k * (k - 1) * q, (p - 1) * (p - 2));
    m += 1;
    l.canonicalize();
    m.canonicalize();
    mpq_class a = mpq_class(q) - (m - 1) - l;
    auto li = detail::as_int(l), mi = detail::as_int(m), ai = detail::as_int(a);
    if (!li || !mi || !ai || *li < 1 || *mi < 1 || *ai < 0 || params.p - 1 < 2) return std::nullopt;
    return FamilySpec::p3_cc(*li, *mi, params.p - 1, *ai);
}

// (-l,-m,n): n = p-1 and lm + mn = p + kq - 1.
inline std::vector<Mate> solve_p3_cocliques(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, n = p - 1;
    const Int s = p + params.k * q - 1;
    detail::Collector col(params);
    for (Int m = 1; m <= q; ++m) {
        if (s % m != 0) continue;
        Int l = s / m - n;
        if (l >= 1) col.offer(FamilySpec::p3_cc(l, m, n, q + 1 - l - m));
    }
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto c = closed_form_p3_cc(params); c && !isomorphic_to_pineapple(*c, params)) closed.push_back(*c);
    detail::expect_agreement("P3 (-l,-m,n)", params, out, closed);
    return out;
}

inline std::optional<FamilySpec> closed_form_p3_mixed(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    auto d = detail::exact_sqrt((p + 2 * k * q) * (p + 2 * k * q) + 8 * k * p * q * (p - k - 1));
    if (!d) return std::nullopt;
    auto e = detail::exact_sqrt(p * p - p + 2 * k * q - *d);
    if (!e) return std::nullopt;
    mpq_class m(p + 2 * k * q + *d, 4 * p), a(4 * p * q - p - 2 * k * q - *d, 4 * p), l(p - *e, 2), n(p + *e, 2);
    m.canonicalize();
    a.canonicalize();
    l.canonicalize();
    n.canonicalize();
    auto li = detail::as_int(l), mi = detail::as_int(m), ni = detail::as_int(n), ai = detail::as_int(a);
    if (!li || !mi || !ni || !ai || *li < 1 || *mi < 1 || *ni < 2 || *ai < 0) return std::nullopt;
    return FamilySpec::p3_mixed(*li, *mi, *ni, *ai);
}

// (l,-m,n): l + n = p, a = q - m, mp - ln = kq; reported with l <= n.
inline std::vector<Mate> solve_p3_clique_coclique(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, kq = params.k * params.q;
    detail::Collector col(params);
    for (Int l = 1; l <= p - 2; ++l) {
        Int n = p - l;
        if (l > n && l >= 2) continue;
        detail::Wide num = detail::Wide(kq) + detail::Wide(l) * n;
        if (num % p != 0) continue;
        Int m = static_cast<Int>(num / p);
        col.offer(FamilySpec::p3_mixed(l, m, n, q - m));
    }
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto c = closed_form_p3_mixed(params); c && !isomorphic_to_pineapple(*c, params)) closed.push_back(*c);
    detail::expect_agreement("P3 (l,-m,n)", params, out, closed);
    return out;
}

struct CocliqueCliqueResult {
    std::vector<Mate> mates;         // always empty
    std::optional<FamilySpec> witness;  // the pineapple itself, (q, k, p-k, 0)
};

// (-l,m,n): the case equations force the pineapple itself.
inline CocliqueCliqueResult solve_p3_coclique_clique_report(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, k = params.k, q = params.q, kq = k * q;
    detail::Collector col(params);
    for (Int m = 1; m <= p - 2; ++m) {
        if (kq % m != 0) continue;
        Int l = kq / m;
        col.offer(FamilySpec::p3_cm(l, m, p - m, q - l));
    }
    CocliqueCliqueResult r;
    r.mates = col.take();
    const auto expected = FamilySpec::p3_cm(q, k, p - k, 0);
    if (!r.mates.empty() || col.identity_solutions().size() != 1 || col.identity_solutions().front() != expected)
        throw ClosedFormMismatch("P3 (-l,m,n): expected exactly the identity solution (q,k,p-k,0)");
    r.witness = expected;
    return r;
}

inline std::vector<Mate> solve_p3_coclique_clique(const PineappleParams& params) {
    return solve_p3_coclique_clique_report(params).mates;
}

inline std::optional<FamilySpec> closed_form_p3_cliques(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    if (p - k * q <= 0) return std::nullopt;
    mpq_class m(k * q * (p - k), p - k * q);
    m.canonicalize();
    auto mi = detail::as_int(m);
    if (!mi || *mi < 1) return std::nullopt;
    mpz_class b = p - *mi + 1;
    auto e = detail::exact_sqrt(b * b - 4 * (p - k * q));
    if (!e) return std::nullopt;
    mpq_class l(b - *e, 2), n(b + *e, 2);
    l.canonicalize();
    n.canonicalize();
    auto li = detail::as_int(l), ni = detail::as_int(n);
    if (!li || !ni || *li < 1 || *ni < 2) return std::nullopt;
    return FamilySpec::p3_ccc(*li, *mi, *ni, params.q - 1);
}

// (l,m,n): a = q - 1, l + m + n = p + 1, ln = p - kq; reported with l <= n.
inline std::vector<Mate> solve_p3_cliques(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, r = p - params.k * q;
    detail::Collector col(params);
    if (r > 0) {
        for (Int l = 1; l <= r; ++l) {
            if (r % l != 0) continue;
            Int n = r / l;
            if (l > n && l >= 2) continue;
            col.offer(FamilySpec::p3_ccc(l, p + 1 - l - n, n, q - 1));
        }
    }
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto c = closed_form_p3_cliques(params); c && !isomorphic_to_pineapple(*c, params)) closed.push_back(*c);
    detail::expect_agreement("P3 (l,m,n)", params, out, closed);
    return out;
}

// (l,-3,-2,-2): l = p - 2, a = q - 5.
inline std::vector<Mate> solve_p4_a(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, k = params.k, q = params.q;
    detail::Collector col(params);
    col.offer(FamilySpec::p4_a(p - 2, q - 5));
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (k * q == p + 7 && p * p - (k + 6) * p - 7 * k + 17 == 0 && q >= 5) closed.push_back(FamilySpec::p4_a(p - 2, q - 5));
    detail::expect_agreement("P4 (l,-3,-2,-2)", params, out, closed);
    return out;
}

// (-2,m,n,-2): m + n = p - 1, a = q - 3; reported with m >= n.
inline std::vector<Mate> solve_p4_b(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, k = params.k, q = params.q;
    detail::Collector col(params);
    for (Int n = 1; 2 * n <= p - 1; ++n) col.offer(FamilySpec::p4_b(p - 1 - n, n, q - 3));
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto b = detail::exact_sqrt(mpz_class(q)); b && *b >= 2 && k * q == p - 1) {
        Int bi = b->get_si();
        if ((k * (q + bi)) % 2 == 0) {
            Int m = k * (q + bi) / 2, n = k * (q - bi) / 2;
            if (n >= 1) closed.push_back(FamilySpec::p4_b(m, n, q - 3));
        }
    }
    detail::expect_agreement("P4 (-2,m,n,-2)", params, out, closed);
    return out;
}

// D^2 - 18(p-1)D + 54kq(p-k-1), D = kq(p-k+5) - 6(p-1); zero exactly when the case admits a solution.
inline mpz_class p4_c_quartic(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    mpz_class d = k * q * (p - k + 5) - 6 * (p - 1);
    return d * d - 18 * (p - 1) * d + 54 * k * q * (p - k - 1);
}

// Expanded quartic with constant term 144(p+1)^2; it does not vanish on (8,2,6). Kept as a diagnostic.
inline mpz_class p4_c_quartic_variant(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    return k * k * k * k * q * q - (2 * p + 10) * q * q * k * k * k +
           ((p * p + 10 * p + 25) * q * q + (30 * p - 84) * q) * k * k - (30 * p * p + 66 * p - 96) * k * q +
           144 * p * p + 288 * p + 144;
}

inline std::optional<FamilySpec> closed_form_p4_c(const PineappleParams& params) {
    if (p4_c_quartic(params) != 0 || params.q < 4) return std::nullopt;
    mpz_class p = params.p, k = params.k, q = params.q;
    mpz_class den = k * q * (p - k + 5) - 6 * (p - 1);
    if (den == 0) return std::nullopt;
    mpq_class n(k * q * (p - k - 1) + 6 * (k * q - p + 1), 18), l(3 * k * q * (p - k - 1), den);
    n.canonicalize();
    l.canonicalize();
    auto ni = detail::as_int(n), li = detail::as_int(l);
    if (!ni || !li || *ni < 1 || *li < 1) return std::nullopt;
    return FamilySpec::p4_c(*li, *ni, params.q - 4);
}

// (l,-2,n,-3): l + n = p - 1, a = q - 4.
inline std::vector<Mate> solve_p4_c(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q;
    detail::Collector col(params);
    for (Int l = 1; l <= p - 2; ++l) col.offer(FamilySpec::p4_c(l, p - 1 - l, q - 4));
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto c = closed_form_p4_c(params)) closed.push_back(*c);
    detail::expect_agreement("P4 (l,-2,n,-3)", params, out, closed);
    return out;
}

// (l,m,-n,s): per row, l+m+s-3 = p-2, a + n = q - 1 and b1 n + b0 = p + kq - 1.
inline std::vector<Mate> solve_p4_table(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, kq = params.k * params.q;
    detail::Collector col(params);
    for (const auto& row : p4_table_rows) {
        if (row.c2() != p - 2) continue;
        Int num = p + kq - 1 - row.b0;
        if (num % row.b1 != 0) continue;
        Int n = num / row.b1;
        col.offer(FamilySpec::p4_table(row.l, row.m, n, row.s, q - 1 - n));
    }
    return col.take();
}

inline std::optional<FamilySpec> closed_form_p5(const PineappleParams& params) {
    mpz_class p = params.p, k = params.k, q = params.q;
    auto s = detail::exact_sqrt((2 * k * q - p + 1) * (2 * k * q - p + 1) + 8 * k * q * (p - 1) * (p - k));
    if (!s) return std::nullopt;
    auto e = detail::exact_sqrt((p - 1) * (p - 1) + 2 * k * q + p - 1 - *s);
    if (!e) return std::nullopt;
    mpq_class m(2 * k * q - p + 1 + *s, 4 * (p - 1)), a(4 * p * q - 2 * (k + 2) * q - 3 * (p - 1) - *s, 4 * (p - 1));
    mpq_class l(p - 1 - *e, 2), n(p - 1 + *e, 2);
    m.canonicalize();
    a.canonicalize();
    l.canonicalize();
    n.canonicalize();
    auto li = detail::as_int(l), mi = detail::as_int(m), ni = detail::as_int(n), ai = detail::as_int(a);
    if (!li || !mi || !ni || !ai || *li < 1 || *mi < 1 || *ni < 1 || *ai < 0) return std::nullopt;
    return FamilySpec::p5(*li, *mi, *ni, *ai);
}

// (1,l,-m,n,1): l + n = p - 1, a + m = q - 1, m(p-1) = kq + ln; reported with l <= n.
inline std::vector<Mate> solve_p5(const PineappleParams& params) {
    detail::check_params(params);
    const Int p = params.p, q = params.q, kq = params.k * params.q;
    detail::Collector col(params);
    for (Int l = 1; 2 * l <= p - 1; ++l) {
        Int n = p - 1 - l;
        detail::Wide num = detail::Wide(kq) + detail::Wide(l) * n;
        if (num % (p - 1) != 0) continue;
        Int m = static_cast<Int>(num / (p - 1));
        col.offer(FamilySpec::p5(l, m, n, q - 1 - m));
    }
    auto out = col.take();
    std::vector<FamilySpec> closed;
    if (auto c = closed_form_p5(params)) closed.push_back(*c);
    detail::expect_agreement("P5 (1,l,-m,n,1)", params, out, closed);
    return out;
}

struct ClassifyOptions {
    bool verify = true;  // realize every mate and compare exact characteristic polynomials
};

inline Classification enumerate_mates(const PineappleParams& params, const ClassifyOptions& options = {}) {
    detail::check_params(params);
    std::vector<Mate> all;
    auto append = [&](std::vector<Mate> v) { all.insert(all.end(), v.begin(), v.end()); };
    append(solve_two_component(params));
    append(solve_p3_cocliques(params));
    append(solve_p3_clique_coclique(params));
    append(solve_p3_coclique_clique(params));
    append(solve_p3_cliques(params));
    append(solve_p4_a(params));
    append(solve_p4_b(params));
    append(solve_p4_c(params));
    append(solve_p4_table(params));
    append(solve_p5(params));

    Classification c{params, {}};
    std::set<SpecKey> seen;
    MateVerifier verifier(params);
    for (auto& m : all) {
        if (!seen.insert(spec_key(m.spec)).second) continue;
        if (options.verify) {
            auto check = verifier.check(m.spec);
            if (!check.is_mate())
                throw VerificationFailure("candidate " + to_string(m.spec) + " failed spectral verification for (p,k,q)=(" +
                                          std::to_string(params.p) + "," + std::to_string(params.k) + "," +
                                          std::to_string(params.q) + ")");
            m.verified = true;
        }
        c.mates.push_back(m);
    }
    return c;
}

// Odd a >= 3: K_{p,k}^q with p = (7a-1)/2, q = (5a-1)/2, k = (a-1)/2 and the mate
// K_a ∪ CS(clique (5a-1)/2, indep (3a-1)/2) ∪ aK_1.
inline std::pair<PineappleParams, Mate> corollary_family(Int a) {
    if (a < 3 || a % 2 == 0) throw std::invalid_argument("corollary_family: a must be an odd integer >= 3");
    PineappleParams params{(7 * a - 1) / 2, (a - 1) / 2, (5 * a - 1) / 2};
    Mate mate{FamilySpec::two_component(a, (5 * a - 1) / 2, (3 * a - 1) / 2, a), params.order(), false};
    if (!verify_mate(params, mate.spec)) throw VerificationFailure("corollary_family: mate failed spectral verification");
    mate.verified = true;
    return {params, mate};
}

} // namespace cospec
