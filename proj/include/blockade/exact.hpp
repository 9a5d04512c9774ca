#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockade {

using Int = mpz_class;
using Rat = mpq_class;

/// Rejected input. The message names the offending value (or file path).
class invalid_input : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Failed internal consistency check. Always a bug, never a user error.
class internal_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using LongMat = std::vector<std::vector<long long>>;

// gmpxx has no long long overloads; long is 64-bit on every platform in scope
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw invalid_input("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline IntMat int_identity(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

/// Exact inverse of a square integer matrix, Gauss-Jordan over Q.
/// Throws invalid_input on a singular matrix.
inline RatMat invert_rational(const LongMat& a) {
    const std::size_t n = a.size();
    // augmented [a | I]
    RatMat m(n, std::vector<Rat>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw invalid_input("invert_rational: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<long>(a[i][j]);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw invalid_input("invert_rational: singular matrix");
        std::swap(m[c], m[piv]);
        const Rat lead = m[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j)
            m[c][j] /= lead;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            const Rat f = m[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    RatMat inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

/// Exact determinant over Q (fraction-free enough for rank <= 8 work).
inline Int int_determinant(const LongMat& a) {
    const std::size_t n = a.size();
    RatMat m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<long>(a[i][j]);
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    if (!is_integer(det))
        throw internal_error("int_determinant: non-integer result");
    return det.get_num();
}

/// Smith normal form u*a*v = diag(d) with u, v unimodular, d nonnegative and
/// d[k] | d[k+1]. Pivot choice is deterministic: smallest absolute nonzero
/// value in the remaining block, ties broken row-major.
struct SmithForm {
    IntMat u;
    IntMat v;
    std::vector<Int> diag;
};

inline SmithForm smith_normal_form(const LongMat& input) {
    const std::size_t n = input.size();
    IntMat a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (input[i].size() != n)
            throw invalid_input("smith_normal_form: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(input[i][j]);
    }
    IntMat u = int_identity(n);
    IntMat v = int_identity(n);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(a[r][i], a[r][j]);
            std::swap(v[r][i], v[r][j]);
        }
    };
    // row[dst] -= q * row[src]
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) {
            a[dst][j] -= q * a[src][j];
            u[dst][j] -= q * u[src][j];
        }
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < n; ++r) {
            a[r][dst] -= q * a[r][src];
            v[r][dst] -= q * v[r][src];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // deterministic pivot scan
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 &&
                        (pi == n || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n)
                break;  // remaining block is zero
            if (pi != t)
                row_swap(t, pi);
            if (pj != t)
                col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0)
                    continue;
                row_axpy(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0)
                    continue;
                col_axpy(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0)
                    dirty = true;
            }
            if (dirty)
                continue;  // a strictly smaller pivot now exists

            // pivot divides the rest of the block, or pull a bad row up
            bool fixed = false;
            for (std::size_t i = t + 1; i < n && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_axpy(t, i, Int(-1));  // row t += row i
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                a[t][j] = -a[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }

    SmithForm out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.diag.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        out.diag[t] = a[t][t];

    // u*input*v == diag and the divisibility chain; cheap at these sizes
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    s += out.u[i][k] * to_int(input[k][l]) * out.v[l][j];
            if (s != (i == j ? out.diag[i] : Int(0)))
                throw internal_error("smith_normal_form: transform check failed");
        }
    for (std::size_t t = 0; t + 1 < n; ++t)
        if (out.diag[t] != 0 && out.diag[t + 1] % out.diag[t] != 0)
            throw internal_error("smith_normal_form: divisibility chain broken");
    return out;
}

}  // namespace blockade
