#include "sq3/orbit_cell.hpp"

#include <algorithm>
#include <cmath>

namespace sq3 {

namespace {

// Ascending distance from 1 (descending w), then lexicographic.
template <class S>
int orbit_compare(const Quat<S>& a, const Quat<S>& b) {
    using Ops = ScalarOps<S>;
    if (int c = Ops::compare(b.w, a.w)) return c;
    if (int c = Ops::compare(a.x, b.x)) return c;
    if (int c = Ops::compare(a.y, b.y)) return c;
    return Ops::compare(a.z, b.z);
}

template <class S>
Vec4<S> quat_vec(const Quat<S>& q) {
    return {q.w, q.x, q.y, q.z};
}

template <class S>
bool is_minus_one(const Quat<S>& q) {
    using Ops = ScalarOps<S>;
    return Ops::eq(q.w, -Ops::one()) && Ops::sign(q.x) == 0 && Ops::sign(q.y) == 0 &&
           Ops::sign(q.z) == 0;
}

// Canonical projective scaling: first nonzero coordinate becomes 1 (exact) or
// the vector becomes unit with positive leading coordinate (float).
template <class S>
Vec4<S> canonical_dir(const Vec4<S>& v);

template <>
Vec4<FieldElem> canonical_dir(const Vec4<FieldElem>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            FieldElem inv = c.inverse();
            return {v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv};
        }
    return v;
}

template <>
Vec4<double> canonical_dir(const Vec4<double>& v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    if (n == 0.0) return v;
    double s = 1.0 / n;
    for (double c : v) {
        if (std::fabs(c) > float_eps()) {
            if (c < 0) s = -s;
            break;
        }
    }
    return {v[0] * s, v[1] * s, v[2] * s, v[3] * s};
}

template <class S>
int vec_compare(const Vec4<S>& a, const Vec4<S>& b) {
    using Ops = ScalarOps<S>;
    for (int i = 0; i < 4; ++i)
        if (int c = Ops::compare(a[i], b[i])) return c;
    return 0;
}

}  // namespace

const char* cell_kind_name(CellKind k) {
    switch (k) {
        case CellKind::full_sphere: return "full-sphere";
        case CellKind::hemisphere: return "hemisphere";
        case CellKind::unbounded: return "unbounded";
        case CellKind::polytope: return "polytope";
    }
    return "?";
}

template <class S>
bool Orbit<S>::contains(const Quat<S>& q) const {
    auto it = std::lower_bound(points.begin(), points.end(), q,
                               [](const Quat<S>& a, const Quat<S>& b) { return orbit_compare(a, b) < 0; });
    return it != points.end() && qeq(*it, q);
}

template <class S>
Orbit<S> orbit_of_one(const IsometryGroup<S>& g) {
    using Ops = ScalarOps<S>;
    Orbit<S> orb;
    orb.points.reserve(g.size());
    for (const auto& el : g.elems) {
        // image of 1: a b^-1 (preserving) or a b (reversing)
        Quat<S> img = el.chi == Chirality::preserving ? qmul(el.a, qinv(el.b)) : qmul(el.a, el.b);
        orb.points.push_back(img);
    }
    std::sort(orb.points.begin(), orb.points.end(),
              [](const Quat<S>& a, const Quat<S>& b) { return orbit_compare(a, b) < 0; });
    orb.points.erase(std::unique(orb.points.begin(), orb.points.end(),
                                 [](const Quat<S>& a, const Quat<S>& b) { return qeq(a, b); }),
                     orb.points.end());
    for (int i = 0; i < static_cast<int>(orb.points.size()); ++i) {
        if (orb.layers.empty() || !Ops::eq(orb.layers.back().cos_dist, orb.points[i].w))
            orb.layers.push_back({orb.points[i].w, {}});
        orb.layers.back().point_idx.push_back(i);
    }
    return orb;
}

template <class S>
std::size_t stabilizer_of_one_order(const IsometryGroup<S>& g) {
    const Quat<S> one = Quat<S>::one();
    std::size_t n = 0;
    for (const auto& el : g.elems)
        if (qeq(apply(el, one), one)) ++n;
    return n;
}

template <class S>
DiameterBound<S> make_bound(int cos_sign, const S& cos2) {
    DiameterBound<S> b{cos_sign, cos2, 0.0};
    double c2 = ScalarOps<S>::to_double(cos2);
    if (c2 < 0) c2 = 0;
    if (c2 > 1) c2 = 1;
    b.radians = std::acos(static_cast<double>(cos_sign) * std::sqrt(c2));
    return b;
}

template <class S>
int compare_bound(const DiameterBound<S>& u, const DiameterBound<S>& v) {
    // larger distance <=> smaller signed cosine
    if (u.cos_sign != v.cos_sign) return u.cos_sign < v.cos_sign ? 1 : -1;
    int c = ScalarOps<S>::compare(u.cos2, v.cos2);
    if (c == 0) return 0;
    if (u.cos_sign >= 0) return c < 0 ? 1 : -1;  // smaller cos2 -> larger distance
    return c < 0 ? -1 : 1;
}

namespace {

template <class S>
DiameterBound<S> vertex_distance(const Vec4<S>& v) {
    using Ops = ScalarOps<S>;
    S n2 = dot4(v, v);
    S c2 = (v[0] * v[0]) * Ops::recip(n2);
    return make_bound<S>(Ops::sign(v[0]), c2);
}

template <class S>
struct CandidateSweep {
    std::vector<CellVertex<S>> vertices;
    DiameterBound<S> extreme{1, ScalarOps<S>::one(), 0.0};  // farthest over all accepted points
    bool any = false;

    void account(const DiameterBound<S>& d) {
        if (!any || compare_bound(d, extreme) > 0) extreme = d;
        any = true;
    }
};

// Accept the direction if it satisfies every half-space among normals[0..k).
template <class S>
bool satisfies_all(const Vec4<S>& v, const std::vector<Vec4<S>>& normals, std::size_t k) {
    using Ops = ScalarOps<S>;
    for (std::size_t j = 0; j < k; ++j)
        if (Ops::sign(dot4(v, normals[j])) < 0) return false;
    return true;
}

template <class S>
void dedup_vertices(std::vector<CellVertex<S>>& verts) {
    std::sort(verts.begin(), verts.end(), [](const CellVertex<S>& a, const CellVertex<S>& b) {
        return vec_compare(a.dir, b.dir) < 0;
    });
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const CellVertex<S>& a, const CellVertex<S>& b) {
                                return vec_compare(a.dir, b.dir) == 0;
                            }),
                verts.end());
}

// Vertex candidates from all rank-3 triples of normals[0..k), validated
// against the same prefix. With `both_orientations`, negative-w extreme
// directions contribute to the sweep (orbits without -1 can reach past the
// equator); vertices themselves keep <v,1> > 0.
template <class S>
CandidateSweep<S> sweep_triples(const std::vector<Vec4<S>>& normals, std::size_t k,
                                bool both_orientations, bool with_equator_triples) {
    using Ops = ScalarOps<S>;
    CandidateSweep<S> sw;
    const Vec4<S> e0{Ops::one(), S{}, S{}, S{}};
    auto consider = [&](Vec4<S> v) {
        int sw0 = Ops::sign(v[0]);
        if (sw0 < 0) {
            for (auto& c : v) c = -c;
            sw0 = 1;
        }
        if (sw0 > 0 && satisfies_all(v, normals, k)) {
            CellVertex<S> cv{canonical_dir(v), {}, vertex_distance(v)};
            sw.account(cv.dist);
            sw.vertices.push_back(std::move(cv));
        }
        if (!both_orientations) return;
        if (sw0 == 0) {
            if (satisfies_all(v, normals, k)) sw.account(make_bound<S>(0, S{}));
            Vec4<S> neg{-v[0], -v[1], -v[2], -v[3]};
            if (satisfies_all(neg, normals, k)) sw.account(make_bound<S>(0, S{}));
            return;
        }
        Vec4<S> neg{-v[0], -v[1], -v[2], -v[3]};
        if (satisfies_all(neg, normals, k)) {
            S n2 = dot4(neg, neg);
            sw.account(make_bound<S>(-1, (neg[0] * neg[0]) * Ops::recip(n2)));
        }
    };
    for (std::size_t i = 0; i + 2 < k; ++i)
        for (std::size_t j = i + 1; j + 1 < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) {
                Vec4<S> v = cross4(normals[i], normals[j], normals[l]);
                if (Ops::sign(v[0]) == 0 && Ops::sign(v[1]) == 0 && Ops::sign(v[2]) == 0 &&
                    Ops::sign(v[3]) == 0)
                    continue;  // rank < 3
                consider(v);
            }
    if (with_equator_triples) {
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                Vec4<S> v = cross4(e0, normals[i], normals[j]);
                if (Ops::sign(v[0]) == 0 && Ops::sign(v[1]) == 0 && Ops::sign(v[2]) == 0 &&
                    Ops::sign(v[3]) == 0)
                    continue;
                // lies on the equator by construction; only the sweep cares
                if (satisfies_all(v, normals, k)) sw.account(make_bound<S>(0, S{}));
                Vec4<S> neg{-v[0], -v[1], -v[2], -v[3]};
                if (satisfies_all(neg, normals, k)) sw.account(make_bound<S>(0, S{}));
            }
    }
    dedup_vertices(sw.vertices);
    return sw;
}

template <class S>
void fill_active_sets(SphericalCell<S>& cell) {
    using Ops = ScalarOps<S>;
    for (auto& v : cell.vertices) {
        v.active.clear();
        for (int j = 0; j < static_cast<int>(cell.normals.size()); ++j)
            if (Ops::sign(dot4(v.dir, cell.normals[j])) == 0) v.active.push_back(j);
    }
}

}  // namespace

template <class S>
SphericalCell<S> prefundamental_domain(const Orbit<S>& orbit, bool full_enumeration) {
    using Ops = ScalarOps<S>;
    SphericalCell<S> cell;
    cell.orbit = orbit;
    if (orbit.size() == 0 || !qeq(orbit.points.front(), Quat<S>::one()))
        throw std::invalid_argument("prefundamental_domain: orbit must contain 1");

    if (orbit.size() == 1) {
        cell.kind = CellKind::full_sphere;
        cell.bound = make_bound<S>(-1, Ops::one());
        return cell;
    }
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        const Quat<S>& g = orbit.points[i];
        cell.normals.push_back({Ops::one() - g.w, -g.x, -g.y, -g.z});
    }
    const bool symmetric = is_minus_one(orbit.points.back());
    const int rank = rank_of(cell.normals);

    if (rank < 4) {
        cell.kind =
            (orbit.size() == 2 && symmetric) ? CellKind::hemisphere : CellKind::unbounded;
        // Extremes along directions orthogonal to every bisector normal:
        // arccos(-|p|) where p is the projection of 1 onto that subspace.
        const Vec4<S> e0{Ops::one(), S{}, S{}, S{}};
        std::vector<Vec4<S>> perp = nullspace4(cell.normals);
        S p2 = projection_norm2(perp, e0);
        DiameterBound<S> best =
            Ops::sign(p2) == 0 ? make_bound<S>(0, S{}) : make_bound<S>(-1, p2);
        if (rank == 3) {
            auto sw = sweep_triples(cell.normals, cell.normals.size(), !symmetric, !symmetric);
            cell.vertices = std::move(sw.vertices);
            if (sw.any && compare_bound(sw.extreme, best) > 0) best = sw.extreme;
        }
        cell.bound = best;
        fill_active_sets(cell);
        return cell;
    }

    cell.kind = CellKind::polytope;
    if (!symmetric || full_enumeration) {
        auto sw = sweep_triples(cell.normals, cell.normals.size(), !symmetric, !symmetric);
        cell.vertices = std::move(sw.vertices);
        cell.bound = sw.extreme;
        fill_active_sets(cell);
        return cell;
    }

    // Symmetric orbit: the cell sits inside the closed unit hemisphere and
    // every extreme point is a <v,1> > 0 vertex, so bisectors farther than
    // twice the current farthest vertex cannot matter. Grow by layers.
    std::size_t layer_count = 1;  // layers beyond layer 0 (= {1}) in use
    CandidateSweep<S> sw;
    while (true) {
        std::size_t k = 0;
        for (std::size_t li = 1; li <= layer_count && li < orbit.layers.size(); ++li)
            k += orbit.layers[li].point_idx.size();
        sw = sweep_triples(cell.normals, k, false, false);
        const bool more_layers = layer_count + 1 < orbit.layers.size();
        if (!more_layers) break;
        if (sw.vertices.empty()) {
            ++layer_count;
            continue;
        }
        // next layer needed iff its distance <= 2 * (farthest vertex distance)
        const S& next_w = orbit.layers[layer_count + 1].cos_dist;
        S threshold = sw.extreme.cos2 + sw.extreme.cos2 - Ops::one();  // cos(2 rho)
        if (Ops::compare(next_w, threshold) >= 0) {
            ++layer_count;
            continue;
        }
        break;
    }
    if (sw.vertices.empty())  // full-rank symmetric cells always have vertices
        sw = sweep_triples(cell.normals, cell.normals.size(), true, true);
    cell.vertices = std::move(sw.vertices);
    cell.bound = sw.extreme;
    fill_active_sets(cell);
    return cell;
}

template <class S>
DiameterBound<S> diameter_lower_bound(const SphericalCell<S>& cell) {
    return cell.bound;
}

template <class S>
FaceCensus cell_statistics(const SphericalCell<S>& cell) {
    FaceCensus fc;
    fc.vertex_total = static_cast<int>(cell.vertices.size());
    std::vector<std::vector<int>> incident(cell.normals.size());
    for (int vi = 0; vi < static_cast<int>(cell.vertices.size()); ++vi)
        for (int n : cell.vertices[vi].active) incident[n].push_back(vi);
    for (int n = 0; n < static_cast<int>(cell.normals.size()); ++n) {
        auto& vs = incident[n];
        if (vs.size() < 3) continue;
        // a 2-face spans rank 3; skip edge or point contacts
        std::vector<Vec4<S>> dirs;
        for (int vi : vs) dirs.push_back(cell.vertices[vi].dir);
        if (rank_of(dirs) < 3) continue;
        // cyclic order around the face centroid (float is fine for ordering)
        std::array<double, 4> nf = {0, 0, 0, 0}, centroid = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) nf[i] = ScalarOps<S>::to_double(cell.normals[n][i]);
        std::vector<std::array<double, 4>> pf;
        for (int vi : vs) {
            auto u = unit_double4(cell.vertices[vi].dir);
            pf.push_back(u);
            for (int i = 0; i < 4; ++i) centroid[i] += u[i];
        }
        double cn = 0;
        for (int i = 0; i < 4; ++i) cn += centroid[i] * centroid[i];
        cn = std::sqrt(cn);
        for (int i = 0; i < 4; ++i) centroid[i] /= cn;
        // orthonormal pair spanning the face plane around the centroid
        auto gram_schmidt = [&](std::array<double, 4> v) {
            double dn = 0, dc = 0;
            for (int i = 0; i < 4; ++i) {
                dn += v[i] * nf[i];
                dc += v[i] * centroid[i];
            }
            double nn = 0;
            for (int i = 0; i < 4; ++i) nn += nf[i] * nf[i];
            std::array<double, 4> out;
            for (int i = 0; i < 4; ++i) out[i] = v[i] - dn * nf[i] / nn - dc * centroid[i];
            return out;
        };
        std::array<double, 4> u1{}, u2{};
        for (std::size_t trial = 0; trial < pf.size(); ++trial) {
            u1 = gram_schmidt(pf[trial]);
            double len = std::sqrt(u1[0] * u1[0] + u1[1] * u1[1] + u1[2] * u1[2] + u1[3] * u1[3]);
            if (len > 1e-9) {
                for (int i = 0; i < 4; ++i) u1[i] /= len;
                break;
            }
        }
        // u2 = component of some vertex orthogonal to u1 too
        for (std::size_t trial = 0; trial < pf.size(); ++trial) {
            auto v = gram_schmidt(pf[trial]);
            double d1 = 0;
            for (int i = 0; i < 4; ++i) d1 += v[i] * u1[i];
            for (int i = 0; i < 4; ++i) v[i] -= d1 * u1[i];
            double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
            if (len > 1e-9) {
                for (int i = 0; i < 4; ++i) u2[i] = v[i] / len;
                break;
            }
        }
        std::vector<std::pair<double, int>> ang;
        for (std::size_t t = 0; t < vs.size(); ++t) {
            double a1 = 0, a2 = 0;
            for (int i = 0; i < 4; ++i) {
                a1 += pf[t][i] * u1[i];
                a2 += pf[t][i] * u2[i];
            }
            ang.emplace_back(std::atan2(a2, a1), vs[t]);
        }
        std::sort(ang.begin(), ang.end());
        std::vector<int> cyc;
        for (auto& [a, vi] : ang) cyc.push_back(vi);
        fc.faces.emplace_back(n, std::move(cyc));
        fc.by_size[static_cast<int>(vs.size())]++;
        fc.face_total++;
    }
    return fc;
}

template <class S>
SphericalCell<S> cell_of_family(const std::string& family, const FamilyParams& params,
                                bool full_enumeration) {
    IsometryGroup<S> g = instantiate<S>(family, params);
    return prefundamental_domain(orbit_of_one(g), full_enumeration);
}

template <class S>
std::array<double, 4> unit_double4(const Vec4<S>& v) {
    std::array<double, 4> out;
    double n2 = 0;
    for (int i = 0; i < 4; ++i) {
        out[i] = ScalarOps<S>::to_double(v[i]);
        n2 += out[i] * out[i];
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto& c : out) c *= inv;
    return out;
}

#define SQ3_INSTANTIATE(S)                                                                     \
    template struct Orbit<S>;                                                                  \
    template struct SphericalCell<S>;                                                          \
    template Orbit<S> orbit_of_one<S>(const IsometryGroup<S>&);                                \
    template std::size_t stabilizer_of_one_order<S>(const IsometryGroup<S>&);                  \
    template DiameterBound<S> make_bound<S>(int, const S&);                                    \
    template int compare_bound<S>(const DiameterBound<S>&, const DiameterBound<S>&);           \
    template SphericalCell<S> prefundamental_domain<S>(const Orbit<S>&, bool);                 \
    template DiameterBound<S> diameter_lower_bound<S>(const SphericalCell<S>&);                \
    template FaceCensus cell_statistics<S>(const SphericalCell<S>&);                           \
    template SphericalCell<S> cell_of_family<S>(const std::string&, const FamilyParams&, bool); \
    template std::array<double, 4> unit_double4<S>(const Vec4<S>&);

SQ3_INSTANTIATE(FieldElem)
SQ3_INSTANTIATE(double)
#undef SQ3_INSTANTIATE

}  // namespace sq3
