#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "qsym/qfield.hpp"

namespace qsym {

inline bool field_zero(const QRat& x) { return x.is_zero(); }
inline bool field_zero(const mpq_class& x) { return sgn(x) == 0; }

template <class F>
using Matrix = std::vector<std::vector<F>>;

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& a) {
    std::vector<int> piv;
    if (a.empty()) return piv;
    int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!field_zero(a[i][c])) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        F inv = F(1) / a[r][c];
        for (int k = c; k < cols; ++k)
            if (!field_zero(a[r][k])) a[r][k] = a[r][k] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || field_zero(a[i][c])) continue;
            F f = a[i][c];
            for (int k = c; k < cols; ++k)
                if (!field_zero(a[r][k])) a[i][k] = a[i][k] - f * a[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
int rank(Matrix<F> a) {
    return static_cast<int>(rref(a).size());
}

// Basis of {v : a v = 0}; cols gives the width when a has no rows.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> a, int cols) {
    std::vector<int> piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(cols, F(0));
        v[f] = F(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

// A solution of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, int cols) {
    Matrix<F> m = a;
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    std::vector<int> piv = rref(m);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<F> x(cols, F(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
    return x;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix<F> c(n, std::vector<F>(m, F(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (field_zero(a[i][l])) continue;
            for (size_t j = 0; j < m; ++j)
                if (!field_zero(b[l][j])) c[i][j] = c[i][j] + a[i][l] * b[l][j];
        }
    return c;
}

template <class F>
Matrix<F> identity_matrix(size_t n) {
    Matrix<F> c(n, std::vector<F>(n, F(0)));
    for (size_t i = 0; i < n; ++i) c[i][i] = F(1);
    return c;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
    if (a.empty()) return a;
    Matrix<F> t(a[0].size(), std::vector<F>(a.size(), F(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace qsym
