#pragma once

#include <array>
#include <vector>

#include "sq3/scalar.hpp"

namespace sq3 {

template <class S>
using Vec4 = std::array<S, 4>;

template <class S>
S dot4(const Vec4<S>& a, const Vec4<S>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

template <class S>
S det3(const std::array<std::array<S, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Generalized cross product in R^4: the unique direction (up to scale)
// orthogonal to a, b, c, via signed 3x3 minors. Zero iff rank{a,b,c} < 3.
template <class S>
Vec4<S> cross4(const Vec4<S>& a, const Vec4<S>& b, const Vec4<S>& c) {
    Vec4<S> v;
    for (int drop = 0; drop < 4; ++drop) {
        std::array<std::array<S, 3>, 3> m;
        int cc = 0;
        for (int col = 0; col < 4; ++col) {
            if (col == drop) continue;
            m[0][cc] = a[col];
            m[1][cc] = b[col];
            m[2][cc] = c[col];
            ++cc;
        }
        S d = det3(m);
        v[drop] = (drop % 2 == 0) ? d : -d;
    }
    return v;
}

// Row echelon rank with exact (or eps-thresholded) pivot tests.
template <class S>
int rank_of(std::vector<Vec4<S>> rows) {
    using Ops = ScalarOps<S>;
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (Ops::sign(rows[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        S inv = Ops::recip(rows[rank][col]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            S f = rows[r][col] * inv;
            for (int c2 = col; c2 < 4; ++c2) rows[r][c2] = rows[r][c2] - f * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

// Basis of {x in R^4 : row . x = 0 for every row}.
template <class S>
std::vector<Vec4<S>> nullspace4(std::vector<Vec4<S>> rows) {
    using Ops = ScalarOps<S>;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (Ops::sign(rows[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        S inv = Ops::recip(rows[rank][col]);
        for (int c2 = 0; c2 < 4; ++c2) rows[rank][c2] = rows[rank][c2] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            S f = rows[r][col];
            for (int c2 = 0; c2 < 4; ++c2) rows[r][c2] = rows[r][c2] - f * rows[rank][c2];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<Vec4<S>> basis;
    for (int col = 0; col < 4; ++col) {
        bool is_pivot = false;
        for (int pc : pivot_col) is_pivot |= (pc == col);
        if (is_pivot) continue;
        Vec4<S> v{S{}, S{}, S{}, S{}};
        v[col] = Ops::one();
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
        basis.push_back(v);
    }
    return basis;
}

// Squared norm of the orthogonal projection of `x` onto span(basis),
// via the Gram system; basis must be linearly independent.
template <class S>
S projection_norm2(const std::vector<Vec4<S>>& basis, const Vec4<S>& x) {
    using Ops = ScalarOps<S>;
    const int k = static_cast<int>(basis.size());
    if (k == 0) return S{};
    // Solve (B^T B) c = B^T x, then |proj|^2 = c . (B^T x).
    std::vector<std::vector<S>> g(k, std::vector<S>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) g[i][j] = dot4(basis[i], basis[j]);
        g[i][k] = dot4(basis[i], x);
    }
    std::vector<S> rhs0;
    for (int i = 0; i < k; ++i) rhs0.push_back(g[i][k]);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (Ops::sign(g[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;  // dependent basis; projection still well defined
        std::swap(g[col], g[pivot]);
        S inv = Ops::recip(g[col][col]);
        for (int c2 = col; c2 <= k; ++c2) g[col][c2] = g[col][c2] * inv;
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            S f = g[r][col];
            for (int c2 = col; c2 <= k; ++c2) g[r][c2] = g[r][c2] - f * g[col][c2];
        }
    }
    S out{};
    for (int i = 0; i < k; ++i) out = out + g[i][k] * rhs0[i];
    return out;
}

}  // namespace sq3
