#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sq3/binary_group.hpp"

namespace sq3 {

enum class Chirality { preserving, reversing };

// Isometry of S^3 as a sign class of a quaternion pair:
//   preserving: q -> a q b^-1   (the 2-to-1 cover of SO(4))
//   reversing:  q -> a conj(q) b
// (a, b) and (-a, -b) are the same transformation; the canonical
// representative makes the first nonzero coordinate of `a` positive.
template <class S>
struct Isometry {
    Chirality chi = Chirality::preserving;
    Quat<S> a, b;

    static Isometry identity() { return {Chirality::preserving, Quat<S>::one(), Quat<S>::one()}; }
};

template <class S>
Isometry<S> canonical(Isometry<S> g) {
    using Ops = ScalarOps<S>;
    for (const S* c : {&g.a.w, &g.a.x, &g.a.y, &g.a.z}) {
        int s = Ops::sign(*c);
        if (s > 0) return g;
        if (s < 0) {
            g.a = -g.a;
            g.b = -g.b;
            return g;
        }
    }
    return g;
}

template <class S>
int iso_compare(const Isometry<S>& g, const Isometry<S>& h) {
    if (g.chi != h.chi) return g.chi == Chirality::preserving ? -1 : 1;
    if (int c = qcompare(g.a, h.a)) return c;
    return qcompare(g.b, h.b);
}

template <class S>
bool iso_eq(const Isometry<S>& g, const Isometry<S>& h) {
    return g.chi == h.chi && qeq(g.a, h.a) && qeq(g.b, h.b);
}

template <class S>
Quat<S> apply(const Isometry<S>& g, const Quat<S>& q) {
    if (g.chi == Chirality::preserving) return qmul(qmul(g.a, q), qinv(g.b));
    return qmul(qmul(g.a, conj(q)), g.b);
}

// Composition g1 after g2, on unit quaternion pairs.
template <class S>
Isometry<S> compose(const Isometry<S>& g1, const Isometry<S>& g2) {
    const bool p1 = g1.chi == Chirality::preserving;
    const bool p2 = g2.chi == Chirality::preserving;
    Isometry<S> out;
    if (p1 && p2) {
        out = {Chirality::preserving, qmul(g1.a, g2.a), qmul(g1.b, g2.b)};
    } else if (p1 && !p2) {
        out = {Chirality::reversing, qmul(g1.a, g2.a), qmul(g2.b, qinv(g1.b))};
    } else if (!p1 && p2) {
        out = {Chirality::reversing, qmul(g1.a, g2.b), qmul(qinv(g2.a), g1.b)};
    } else {
        out = {Chirality::preserving, qmul(g1.a, qinv(g2.b)), qmul(qinv(g1.b), g2.a)};
    }
    return canonical(out);
}

template <class S>
Isometry<S> inverse(const Isometry<S>& g) {
    if (g.chi == Chirality::preserving)
        return canonical(Isometry<S>{Chirality::preserving, qinv(g.a), qinv(g.b)});
    return canonical(Isometry<S>{Chirality::reversing, g.b, g.a});
}

template <class S>
using Mat4 = std::array<std::array<S, 4>, 4>;

// 4x4 matrix over the scalar backend, columns = images of 1, i, j, k.
template <class S>
Mat4<S> matrix_of(const Isometry<S>& g) {
    Mat4<S> m;
    const Quat<S> basis[4] = {{ScalarOps<S>::one(), S{}, S{}, S{}},
                              {S{}, ScalarOps<S>::one(), S{}, S{}},
                              {S{}, S{}, ScalarOps<S>::one(), S{}},
                              {S{}, S{}, S{}, ScalarOps<S>::one()}};
    for (int c = 0; c < 4; ++c) {
        Quat<S> img = apply(g, basis[c]);
        m[0][c] = img.w;
        m[1][c] = img.x;
        m[2][c] = img.y;
        m[3][c] = img.z;
    }
    return m;
}

template <class S>
S trace_of(const Isometry<S>& g) {
    auto m = matrix_of(g);
    return m[0][0] + m[1][1] + m[2][2] + m[3][3];
}

struct FamilyParams {
    std::optional<long> m, n, r, s, h, k;

    std::string describe() const;
    bool operator==(const FamilyParams&) const = default;
};

template <class S>
struct IsometryGroup {
    std::string family;  // Du Val identifier, e.g. "29", "11a", "21'", "44pm"
    FamilyParams params;
    std::vector<Isometry<S>> elems;  // canonical representatives, sorted

    std::size_t size() const { return elems.size(); }
    bool contains(const Isometry<S>& g) const;
    std::size_t preserving_count() const;
    bool has_reversing() const { return preserving_count() != size(); }
};

template <class S>
void sort_and_dedup_isometries(std::vector<Isometry<S>>& v);

// Elementwise containment of transformation sets (sign-class aware).
template <class S>
bool is_subgroup(const IsometryGroup<S>& g1, const IsometryGroup<S>& g2);

template <class S>
bool is_normal_subgroup(const IsometryGroup<S>& g1, const IsometryGroup<S>& g2);

template <class S>
bool closed_under_composition(const IsometryGroup<S>& g, std::size_t sample_limit = 0);

template <class S>
std::vector<Isometry<S>> small_generating_set_iso(const IsometryGroup<S>& g);

// True iff some unit x has g(x) = x for every g; solved exactly as a common
// eigenvector problem (eigenvalue 1) over the scalar backend.
template <class S>
bool fixes_a_point(const IsometryGroup<S>& g);

}  // namespace sq3
