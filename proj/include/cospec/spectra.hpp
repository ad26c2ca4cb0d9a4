#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/int_poly.hpp"

namespace cospec {

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix adjacency(const Graph& g) {
        IntMatrix m(g.order(), g.order());
        for (std::size_t u = 0; u < g.order(); ++u)
            for (auto v : g.neighbors(u)) m(u, v) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> a_;
};

namespace detail {

// Berkowitz's division-free recurrence over leading principal submatrices.
// Ops supplies diag(r), column(r, x) (x = A[0..r)[r]), row_dot(r, x) (= A[r][0..r) . x)
// and apply(r, x, y) (y = A_r x for the leading r x r block).
template <class Ops>
IntPoly berkowitz(std::size_t n, Ops& ops) {
    if (n == 0) return IntPoly{1};
    // Coefficients from the top down.
    std::vector<mpz_class> vect{mpz_class(1), -ops.diag(0)};
    std::vector<mpz_class> x, y, col, next;
    mpz_class t;
    for (std::size_t r = 1; r < n; ++r) {
        col.assign(r + 2, mpz_class(0));
        col[0] = 1;
        col[1] = -ops.diag(r);
        x.assign(r, mpz_class(0));
        y.assign(r, mpz_class(0));
        ops.column(r, x);
        for (std::size_t i = 0; i < r; ++i) {
            ops.row_dot(r, x, t);
            col[i + 2] = -t;
            if (i + 1 < r) {
                ops.apply(r, x, y);
                std::swap(x, y);
            }
        }
        next.assign(r + 2, mpz_class(0));
        for (std::size_t i = 0; i < r + 2; ++i) {
            std::size_t jmax = std::min(i, r);
            for (std::size_t j = 0; j <= jmax; ++j)
                if (col[i - j] != 0 && vect[j] != 0) mpz_addmul(next[i].get_mpz_t(), col[i - j].get_mpz_t(), vect[j].get_mpz_t());
        }
        std::swap(vect, next);
    }
    std::reverse(vect.begin(), vect.end());
    return IntPoly(std::move(vect));
}

struct MatrixOps {
    const IntMatrix& m;
    mpz_class diag(std::size_t r) const { return m(r, r); }
    void column(std::size_t r, std::vector<mpz_class>& x) const {
        for (std::size_t i = 0; i < r; ++i) x[i] = m(i, r);
    }
    void row_dot(std::size_t r, const std::vector<mpz_class>& x, mpz_class& out) const {
        out = 0;
        for (std::size_t j = 0; j < r; ++j) mpz_addmul(out.get_mpz_t(), m(r, j).get_mpz_t(), x[j].get_mpz_t());
    }
    void apply(std::size_t r, const std::vector<mpz_class>& x, std::vector<mpz_class>& y) const {
        for (std::size_t i = 0; i < r; ++i) {
            y[i] = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (m(i, j) != 0) mpz_addmul(y[i].get_mpz_t(), m(i, j).get_mpz_t(), x[j].get_mpz_t());
        }
    }
};

// 0/1 adjacency: matrix-vector products become sums over neighbours.
struct GraphOps {
    explicit GraphOps(const Graph& g) : g(g), nb(g.order()) {
        for (std::size_t u = 0; u < g.order(); ++u) nb[u] = g.neighbors(u);
    }
    const Graph& g;
    std::vector<std::vector<std::size_t>> nb;

    mpz_class diag(std::size_t) const { return 0; }
    void column(std::size_t r, std::vector<mpz_class>& x) const {
        for (auto j : nb[r]) {
            if (j >= r) break;
            x[j] = 1;
        }
    }
    void row_dot(std::size_t r, const std::vector<mpz_class>& x, mpz_class& out) const {
        out = 0;
        for (auto j : nb[r]) {
            if (j >= r) break;
            out += x[j];
        }
    }
    void apply(std::size_t r, const std::vector<mpz_class>& x, std::vector<mpz_class>& y) const {
        for (std::size_t i = 0; i < r; ++i) {
            y[i] = 0;
            for (auto j : nb[i]) {
                if (j >= r) break;
                y[i] += x[j];
            }
        }
    }
};

} // namespace detail

// det(xI - A) for an integer square matrix.
inline IntPoly char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix is not square");
    detail::MatrixOps ops{m};
    return detail::berkowitz(m.rows(), ops);
}

inline IntPoly char_poly(const Graph& g) {
    detail::GraphOps ops(g);
    return detail::berkowitz(g.order(), ops);
}

// Fraction-free (Bareiss) determinant.
inline mpz_class determinant(IntMatrix m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && m(i, k) == 0) ++i;
            if (i == n) return 0;
            m.swap_rows(i, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline std::size_t rank_over_rationals(IntMatrix m) {
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                mpz_class v = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Second route: det(xI - A) at x = 0..n, then exact Newton interpolation.
inline IntPoly char_poly_interpolated(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly_interpolated: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<mpz_class> diff(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = -a(i, j);
        for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<unsigned long>(x);
        diff[x] = determinant(std::move(m));
    }
    // Forward differences in place: diff[k] = Delta^k f(0).
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = n; i >= k; --i) diff[i] -= diff[i - 1];
    IntPoly result;
    IntPoly falling{1};
    mpz_class fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
            falling *= IntPoly::linear(mpz_class(static_cast<unsigned long>(k - 1)));
        }
        mpz_class coeff;
        if (!mpz_divisible_p(diff[k].get_mpz_t(), fact.get_mpz_t()))
            throw std::logic_error("char_poly_interpolated: non-integral Newton coefficient");
        mpz_divexact(coeff.get_mpz_t(), diff[k].get_mpz_t(), fact.get_mpz_t());
        result += falling * coeff;
    }
    return result;
}

inline IntPoly char_poly_interpolated(const Graph& g) { return char_poly_interpolated(IntMatrix::adjacency(g)); }

inline bool is_cospectral(const Graph& a, const Graph& b) {
    return a.order() == b.order() && char_poly(a) == char_poly(b);
}

class NonEquitablePartition : public std::invalid_argument {
public:
    NonEquitablePartition(std::size_t u, std::size_t v, std::size_t part)
        : std::invalid_argument("partition is not equitable: vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " have different neighbour counts in part " +
                                std::to_string(part)),
          u(u), v(v), part(part) {}
    std::size_t u;
    std::size_t v;
    std::size_t part;
};

struct QuotientMatrix {
    std::size_t dim = 0;
    IntMatrix entries{0, 0};
};

// Every vertex is checked against the first vertex of its part.
inline QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<std::size_t>>& partition) {
    const std::size_t n = g.order();
    const std::size_t words = (n + 63) / 64;
    std::vector<int> owner(n, -1);
    std::vector<std::vector<std::uint64_t>> masks(partition.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty()) throw std::invalid_argument("quotient_matrix: empty part");
        for (auto v : partition[i]) {
            if (v >= n) throw std::invalid_argument("quotient_matrix: vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("quotient_matrix: parts overlap at vertex " + std::to_string(v));
            owner[v] = static_cast<int>(i);
            masks[i][v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("quotient_matrix: vertex " + std::to_string(v) + " not covered");

    auto count_into = [&](std::size_t v, std::size_t j) {
        auto r = g.row(v);
        long c = 0;
        for (std::size_t w = 0; w < words; ++w) c += std::popcount(r[w] & masks[j][w]);
        return c;
    };
    QuotientMatrix q{partition.size(), IntMatrix(partition.size(), partition.size())};
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto rep = partition[i].front();
        for (std::size_t j = 0; j < partition.size(); ++j) {
            long c = count_into(rep, j);
            for (auto v : partition[i])
                if (count_into(v, j) != c) throw NonEquitablePartition(rep, v, j);
            q.entries(i, j) = c;
        }
    }
    return q;
}

inline IntPoly char_poly(const QuotientMatrix& q) { return char_poly(q.entries); }

} // namespace cospec
