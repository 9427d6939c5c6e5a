#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qlab/group_ring.hpp"

namespace qlab {

/// Dense integer matrix, row-major. Entries stay tiny for coboundary
/// matrices; Smith reduction switches to arbitrary precision.
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    long long& at(size_t i, size_t j) { return a[i * cols + j]; }
    long long at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// y = M x
inline std::vector<long long> apply(const IntMatrix& m, const std::vector<long long>& x) {
    if (x.size() != m.cols) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<long long> y(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        long long s = 0;
        const long long* row = &m.a[i * m.cols];
        for (size_t j = 0; j < m.cols; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul size mismatch");
    IntMatrix c(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            long long v = a.at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

namespace detail {

inline long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline long long inv_mod_prime(long long x, long long p) { return mod_pow(((x % p) + p) % p, p - 2, p); }

}  // namespace detail

/// Row-reduced echelon form of m over Z_p (in place); returns pivot columns.
inline std::vector<size_t> rref_mod_p(IntMatrix& m, long long p) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.at(sel, col) % p == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        long long inv = detail::inv_mod_prime(m.at(row, col), p);
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = ((m.at(row, j) % p) * inv % p + p) % p;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            long long f = ((m.at(i, col) % p) + p) % p;
            if (!f) continue;
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) = (((m.at(i, j) - f * m.at(row, j)) % p) + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank_mod_p(IntMatrix m, long long p) { return rref_mod_p(m, p).size(); }

/// Kernel basis over Z_p in the standard RREF convention: one vector per free
/// column, with a 1 in the free position. Deterministic, ordered by column.
inline std::vector<std::vector<long long>> kernel_mod_p(IntMatrix m, long long p) {
    auto pivots = rref_mod_p(m, p);
    std::vector<long long> pivot_row(m.cols, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long long>(r);
    std::vector<std::vector<long long>> basis;
    for (size_t col = 0; col < m.cols; ++col) {
        if (pivot_row[col] >= 0) continue;
        std::vector<long long> v(m.cols, 0);
        v[col] = 1;
        for (size_t j = 0; j < m.cols; ++j)
            if (pivot_row[j] >= 0) v[j] = ((-m.at(static_cast<size_t>(pivot_row[j]), col)) % p + p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve m x = b over Z_p; empty optional when inconsistent.
inline std::optional<std::vector<long long>> solve_mod_p(IntMatrix m, std::vector<long long> b, long long p) {
    if (b.size() != m.rows) throw std::invalid_argument("solve size mismatch");
    IntMatrix aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref_mod_p(aug, p);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<long long> x(m.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

/// Big-integer matrix used for Smith normal form.
struct BigMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    BigMatrix() = default;
    BigMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    explicit BigMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}
    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Elementary divisors (> 0, each dividing the next) of an integer matrix.
/// Pivoting on smallest magnitude to limit entry growth.
inline std::vector<Int> smith_normal_form(BigMatrix m) {
    std::vector<Int> divisors;
    size_t top = 0;
    while (top < m.rows && top < m.cols) {
        // find smallest nonzero entry in the remaining block
        size_t pi = top, pj = top;
        Int best = 0;
        for (size_t i = top; i < m.rows; ++i)
            for (size_t j = top; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                Int mag = abs(m.at(i, j));
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(top, j), m.at(pi, j));
        for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = top + 1; i < m.rows; ++i) {
                if (m.at(i, top) == 0) continue;
                Int q = m.at(i, top) / m.at(top, top);
                for (size_t j = top; j < m.cols; ++j) m.at(i, j) -= q * m.at(top, j);
                if (m.at(i, top) != 0) {
                    // remainder became the smaller pivot
                    for (size_t j = top; j < m.cols; ++j) std::swap(m.at(top, j), m.at(i, j));
                    clean = false;
                }
            }
            for (size_t j = top + 1; j < m.cols; ++j) {
                if (m.at(top, j) == 0) continue;
                Int q = m.at(top, j) / m.at(top, top);
                for (size_t i = top; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, top);
                if (m.at(top, j) != 0) {
                    for (size_t i = top; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, j));
                    clean = false;
                }
            }
        }
        ++top;
    }
    for (size_t i = 0; i < top; ++i) divisors.push_back(abs(m.at(i, i)));

    // enforce the divisibility chain d1 | d2 | ...
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j) {
            if (divisors[j] % divisors[i] == 0) continue;
            Int g = gcd(divisors[i], divisors[j]);
            Int l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace qlab
