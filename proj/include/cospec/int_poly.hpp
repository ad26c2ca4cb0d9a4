#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

// Univariate polynomial over Z; coeffs_[i] is the coefficient of x^i.
// The zero polynomial has no coefficients; the leading coefficient is never 0.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (auto v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

    // c * x^d
    static IntPoly monomial(std::size_t d, const mpz_class& c = 1) {
        std::vector<mpz_class> v(d + 1);
        v[d] = c;
        return IntPoly(std::move(v));
    }

    // x - r
    static IntPoly linear(const mpz_class& r) { return IntPoly(std::vector<mpz_class>{-r, mpz_class(1)}); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    const mpz_class& leading() const {
        if (c_.empty()) throw std::domain_error("IntPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class operator()(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Multiply by x^d.
    IntPoly shifted(std::size_t d) const {
        if (is_zero() || d == 0) return *this;
        std::vector<mpz_class> v(d);
        v.insert(v.end(), c_.begin(), c_.end());
        return IntPoly(std::move(v));
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator-(IntPoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        return IntPoly(std::move(v));
    }

    friend IntPoly operator*(IntPoly a, const mpz_class& s) {
        if (s == 0) return {};
        for (auto& c : a.c_) c *= s;
        return a;
    }

    IntPoly pow(unsigned e) const {
        IntPoly result{1};
        IntPoly base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // Degree first, then coefficients from the top; any strict total order works for map keys.
    friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            int s = cmp(a.c_[i], b.c_[i]);
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // e.g. "x^3-2x^2-5x+4"
    std::string to_string(char var = 'x') const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const mpz_class& c = c_[i];
            if (c == 0) continue;
            bool neg = c < 0;
            mpz_class mag = abs(c);
            if (neg)
                s += "-";
            else if (!s.empty())
                s += "+";
            if (i == 0 || mag != 1) s += mag.get_str();
            if (i >= 1) s.push_back(var);
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.get_str());
        return out;
    }

    static IntPoly from_decimal_strings(const std::vector<std::string>& v) {
        std::vector<mpz_class> c;
        c.reserve(v.size());
        for (const auto& s : v) {
            mpz_class z;
            if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("IntPoly: bad coefficient '" + s + "'");
            c.push_back(std::move(z));
        }
        return IntPoly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Divide by (x - r); returns quotient and remainder f(r).
inline std::pair<IntPoly, mpz_class> synthetic_division(const IntPoly& f, const mpz_class& r) {
    if (f.is_zero()) return {IntPoly{}, mpz_class(0)};
    const auto& c = f.coeffs();
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * r + c[i];
        if (i > 0) q[i - 1] = acc;
    }
    return {IntPoly(std::move(q)), acc};
}

inline unsigned integer_root_multiplicity(const IntPoly& f, const mpz_class& r) {
    if (f.is_zero()) throw std::domain_error("integer_root_multiplicity: zero polynomial");
    unsigned m = 0;
    IntPoly g = f;
    for (;;) {
        auto [q, rem] = synthetic_division(g, r);
        if (rem != 0) return m;
        g = std::move(q);
        ++m;
    }
}

// lc(d)^(deg f - deg d + 1) * f mod d, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    if (f.is_zero() || f.degree() < d.degree()) return f;
    std::vector<mpz_class> r = f.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    const mpz_class& lc = dc.back();
    for (std::size_t top = r.size() - 1;; --top) {
        mpz_class lead = r[top];
        for (auto& c : r) c *= lc;
        if (lead != 0)
            for (std::size_t j = 0; j <= dd; ++j) mpz_submul(r[top - dd + j].get_mpz_t(), lead.get_mpz_t(), dc[j].get_mpz_t());
        if (top == dd) break;
    }
    return IntPoly(std::move(r));
}

// d | f over Q[x]; for monic d this is divisibility over Z[x] as well.
inline bool poly_divides(const IntPoly& d, const IntPoly& f) {
    if (d.is_zero()) throw std::domain_error("poly_divides: zero divisor");
    return pseudo_remainder(f, d).is_zero();
}

// Exact quotient f / d when it exists in Z[x].
inline IntPoly exact_quotient(const IntPoly& f, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("exact_quotient: zero divisor");
    if (f.is_zero()) return {};
    if (f.degree() < d.degree()) throw std::domain_error("exact_quotient: not divisible");
    std::vector<mpz_class> r = f.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<mpz_class> q(r.size() - dd);
    for (std::size_t top = r.size() - 1;; --top) {
        if (r[top] != 0) {
            if (!mpz_divisible_p(r[top].get_mpz_t(), dc.back().get_mpz_t()))
                throw std::domain_error("exact_quotient: not divisible");
            mpz_class t;
            mpz_divexact(t.get_mpz_t(), r[top].get_mpz_t(), dc.back().get_mpz_t());
            for (std::size_t j = 0; j <= dd; ++j) mpz_submul(r[top - dd + j].get_mpz_t(), t.get_mpz_t(), dc[j].get_mpz_t());
            q[top - dd] = std::move(t);
        }
        if (top == dd) break;
    }
    for (const auto& c : r)
        if (c != 0) throw std::domain_error("exact_quotient: not divisible");
    return IntPoly(std::move(q));
}

} // namespace cospec
