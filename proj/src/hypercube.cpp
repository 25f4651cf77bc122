#include "sq3/hypercube.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sq3 {

namespace {

using Vec = std::vector<double>;

double vdot(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// One-dimensional nullspace of `rows` (each of length dim), or empty.
Vec null_direction(std::vector<Vec> rows, int dim) {
    const double tol = 1e-9;
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        double best = tol;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (std::fabs(rows[r][col]) > best) {
                best = std::fabs(rows[r][col]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        double inv = 1.0 / rows[rank][col];
        for (int c = 0; c < dim; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            double f = rows[r][col];
            for (int c = 0; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != dim - 1) return {};
    Vec v(dim, 0.0);
    int free_col = 0;
    std::vector<bool> is_pivot(dim, false);
    for (int pc : pivot_col) is_pivot[pc] = true;
    while (is_pivot[free_col]) ++free_col;
    v[free_col] = 1.0;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free_col];
    return v;
}

}  // namespace

double hypercube_formula(int n) { return std::acos(1.0 / std::sqrt(static_cast<double>(n) + 1.0)); }

double hypercube_diameter(int n) {
    if (n < 1) throw std::invalid_argument("hypercube_diameter: n >= 1 required");
    if (n > 4)
        throw std::invalid_argument("hypercube_diameter: brute-force enumeration supported for n <= 4");
    const int dim = n + 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

    // Orbit of the projected cube vertex (1,...,1)/sqrt(dim): all sign patterns.
    std::vector<Vec> orbit;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        Vec p(dim);
        for (int i = 0; i < dim; ++i) p[i] = (mask >> i & 1) ? -scale : scale;
        orbit.push_back(std::move(p));
    }
    const Vec base = orbit.front();
    std::vector<Vec> normals;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        Vec nv(dim);
        for (int c = 0; c < dim; ++c) nv[c] = base[c] - orbit[i][c];
        normals.push_back(std::move(nv));
    }

    // all (dim-1)-subsets of bisectors; keep rank-(dim-1) solutions inside
    // every half-space, maximize the distance from the base point
    double best = 0.0;
    std::vector<int> comb(dim - 1);
    const int m = static_cast<int>(normals.size());
    for (int i = 0; i < dim - 1; ++i) comb[i] = i;
    while (true) {
        std::vector<Vec> rows;
        for (int i = 0; i < dim - 1; ++i) rows.push_back(normals[comb[i]]);
        Vec v = null_direction(std::move(rows), dim);
        if (!v.empty()) {
            double d0 = vdot(v, base);
            if (d0 < 0)
                for (auto& c : v) c = -c;
            if (std::fabs(d0) > 1e-9) {
                bool ok = true;
                for (const auto& nv : normals)
                    if (vdot(v, nv) < -1e-9) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    double cosd = vdot(v, base) / std::sqrt(vdot(v, v));
                    best = std::max(best, std::acos(std::min(1.0, std::max(-1.0, cosd))));
                }
            }
        }
        // next combination
        int i = dim - 2;
        while (i >= 0 && comb[i] == m - (dim - 1) + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < dim - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
    return best;
}

}  // namespace sq3
