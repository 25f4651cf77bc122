#include "sq3/binary_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sq3 {

std::string label_name(const GroupLabel& label) {
    switch (label.kind) {
        case BinKind::C: return "C(" + std::to_string(label.n) + ")";
        case BinKind::D: return "D(" + std::to_string(label.n) + ")";
        case BinKind::T: return "T";
        case BinKind::O: return "O";
        case BinKind::I: return "I";
        case BinKind::Idagger: return "I+";
    }
    return "?";
}

long label_order(const GroupLabel& label) {
    switch (label.kind) {
        case BinKind::C: return label.n;
        case BinKind::D: return 4 * label.n;
        case BinKind::T: return 24;
        case BinKind::O: return 48;
        case BinKind::I:
        case BinKind::Idagger: return 120;
    }
    return 0;
}

bool exact_supported(const GroupLabel& label) {
    switch (label.kind) {
        case BinKind::C: return label.n == 1 || label.n == 2 || label.n == 4 || label.n == 8;
        case BinKind::D: return label.n == 1 || label.n == 2 || label.n == 4;
        default: return true;
    }
}

namespace {

// cos(u*pi/4), exactly; entries +-2 stand for +-1 and +-1 for +-1/sqrt2.
FieldElem eighth_cos(int u) {
    static const int table[8] = {2, 1, 0, -1, -2, -1, 0, 1};
    int v = table[((u % 8) + 8) % 8];
    if (v == 2) return FieldElem(1);
    if (v == -2) return FieldElem(-1);
    if (v == 0) return FieldElem(0);
    FieldElem r = FieldElem::inv_sqrt2();
    return v > 0 ? r : -r;
}

FieldElem eighth_sin(int u) { return eighth_cos(u - 2); }

Quat<FieldElem> k_rotation_exact(int t, long order) {
    // rotation by 2*pi*t/order about the k-axis; order must divide 8
    int u = static_cast<int>(((t % order) + order) % order * (8 / order));
    return {eighth_cos(u), FieldElem(0), FieldElem(0), eighth_sin(u)};
}

std::vector<Quat<FieldElem>> cyclic_exact(long k) {
    std::vector<Quat<FieldElem>> v;
    for (long t = 0; t < k; ++t) v.push_back(k_rotation_exact(static_cast<int>(t), k));
    return v;
}

std::vector<Quat<FieldElem>> dihedral_exact(long n) {
    auto v = cyclic_exact(2 * n);
    const Quat<FieldElem> i{FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(0)};
    std::vector<Quat<FieldElem>> refl;
    for (const auto& q : v) refl.push_back(qmul(q, i));  // cos t i + sin t j
    v.insert(v.end(), refl.begin(), refl.end());
    return v;
}

std::vector<Quat<FieldElem>> tetra_exact() {
    auto v = dihedral_exact(2);
    const FieldElem h = FieldElem::half();
    for (int sw : {1, -1})
        for (int sx : {1, -1})
            for (int sy : {1, -1})
                for (int sz : {1, -1})
                    v.push_back({sw > 0 ? h : -h, sx > 0 ? h : -h, sy > 0 ? h : -h, sz > 0 ? h : -h});
    return v;
}

std::vector<Quat<FieldElem>> octa_exact() {
    auto v = tetra_exact();
    const FieldElem r = FieldElem::inv_sqrt2();
    const FieldElem z = FieldElem(0);
    // all +-r +-r patterns on a pair of coordinates
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (auto [p0, p1] : pairs)
        for (int s0 : {1, -1})
            for (int s1 : {1, -1}) {
                FieldElem c[4] = {z, z, z, z};
                c[p0] = s0 > 0 ? r : -r;
                c[p1] = s1 > 0 ? r : -r;
                v.push_back({c[0], c[1], c[2], c[3]});
            }
    return v;
}

std::vector<Quat<FieldElem>> icosa_exact() {
    auto t = tetra_exact();
    const FieldElem h = FieldElem::half();
    const FieldElem tau = FieldElem::golden();
    // c = ((tau-1) + tau i + j)/2 has order 10 as a quaternion with c^5 = 1 on
    // the listed representatives; I = T u cT u c^2T u c^3T u c^4T.
    Quat<FieldElem> c{(tau - FieldElem(1)) * h, tau * h, h, FieldElem(0)};
    std::vector<Quat<FieldElem>> v = t;
    Quat<FieldElem> pw = c;
    for (int e = 1; e <= 4; ++e) {
        for (const auto& q : t) v.push_back(qmul(pw, q));
        pw = qmul(pw, c);
    }
    return v;
}

std::vector<Quat<double>> cyclic_float(long k) {
    std::vector<Quat<double>> v;
    for (long t = 0; t < k; ++t) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(k);
        v.push_back({std::cos(a), 0.0, 0.0, std::sin(a)});
    }
    return v;
}

std::vector<Quat<double>> dihedral_float(long n) {
    auto v = cyclic_float(2 * n);
    std::vector<Quat<double>> refl;
    for (const auto& q : v) refl.push_back({0.0, q.w, q.z, 0.0});  // (cos t + sin t k) * i
    v.insert(v.end(), refl.begin(), refl.end());
    return v;
}

template <class S>
struct Builder;

template <>
struct Builder<FieldElem> {
    static std::vector<Quat<FieldElem>> run(const GroupLabel& label) {
        if (!exact_supported(label))
            throw UnsupportedExact("exact coordinates unavailable for " + label_name(label) +
                                   "; use the float backend");
        switch (label.kind) {
            case BinKind::C: return cyclic_exact(label.n);
            case BinKind::D: return dihedral_exact(label.n);
            case BinKind::T: return tetra_exact();
            case BinKind::O: return octa_exact();
            case BinKind::I: return icosa_exact();
            case BinKind::Idagger: {
                auto v = icosa_exact();
                for (auto& q : v) q = flip_sqrt5(q);
                return v;
            }
        }
        throw InvalidParameters("bad group label");
    }
};

template <>
struct Builder<double> {
    static std::vector<Quat<double>> run(const GroupLabel& label) {
        switch (label.kind) {
            case BinKind::C: return cyclic_float(label.n);
            case BinKind::D: return dihedral_float(label.n);
            default: {
                auto v = Builder<FieldElem>::run(label);
                std::vector<Quat<double>> out;
                out.reserve(v.size());
                for (const auto& q : v) out.push_back(to_float(q));
                return out;
            }
        }
    }
};

}  // namespace

Quat<FieldElem> flip_sqrt5(const Quat<FieldElem>& q) {
    return {q.w.conj_sqrt5(), q.x.conj_sqrt5(), q.y.conj_sqrt5(), q.z.conj_sqrt5()};
}

template <class S>
void sort_and_dedup(std::vector<Quat<S>>& v) {
    std::sort(v.begin(), v.end(), [](const Quat<S>& a, const Quat<S>& b) { return qcompare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(), [](const Quat<S>& a, const Quat<S>& b) { return qeq(a, b); }),
            v.end());
}

template <class S>
BinaryGroup<S> build_group(const GroupLabel& label) {
    if (label.kind == BinKind::C && label.n < 1)
        throw InvalidParameters("C(n) needs n >= 1");
    if (label.kind == BinKind::D && label.n < 1)
        throw InvalidParameters("D(n) needs n >= 1");
    BinaryGroup<S> g{label, Builder<S>::run(label)};
    sort_and_dedup(g.elems);
    return g;
}

template <class S>
int BinaryGroup<S>::index_of(const Quat<S>& q) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), q,
                               [](const Quat<S>& a, const Quat<S>& b) { return qcompare(a, b) < 0; });
    if (it != elems.end() && qeq(*it, q)) return static_cast<int>(it - elems.begin());
    return -1;
}

template <class S>
bool BinaryGroup<S>::contains(const Quat<S>& q) const {
    return index_of(q) >= 0;
}

template <class S>
BinaryGroup<S> intersect(const BinaryGroup<S>& g1, const BinaryGroup<S>& g2) {
    BinaryGroup<S> out;
    out.label = g1.label;
    for (const auto& q : g1.elems)
        if (g2.contains(q)) out.elems.push_back(q);
    return out;
}

template <class S>
bool subset_of(const BinaryGroup<S>& h, const BinaryGroup<S>& g) {
    return std::all_of(h.elems.begin(), h.elems.end(), [&](const Quat<S>& q) { return g.contains(q); });
}

template <class S>
std::vector<Quat<S>> small_generating_set(const BinaryGroup<S>& g) {
    std::vector<Quat<S>> gens;
    std::vector<Quat<S>> closure{Quat<S>::one()};
    sort_and_dedup(closure);
    while (closure.size() < g.size()) {
        // first group element not yet generated
        for (const auto& q : g.elems) {
            bool inside = std::binary_search(
                closure.begin(), closure.end(), q,
                [](const Quat<S>& a, const Quat<S>& b) { return qcompare(a, b) < 0; });
            if (!inside) {
                gens.push_back(q);
                break;
            }
        }
        // regenerate closure from scratch; groups here are tiny
        closure = {Quat<S>::one()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Quat<S>> next = closure;
            for (const auto& a : closure)
                for (const auto& s : gens) next.push_back(qmul(a, s));
            sort_and_dedup(next);
            if (next.size() > closure.size()) {
                closure = std::move(next);
                grew = true;
            }
        }
    }
    return gens;
}

template <class S>
bool normal_in(const BinaryGroup<S>& h, const BinaryGroup<S>& g) {
    if (!subset_of(h, g))
        throw NotASubgroup(label_name(h.label) + " is not a subgroup of " + label_name(g.label));
    auto gens = small_generating_set(h);
    for (const auto& x : g.elems)
        for (const auto& s : gens)
            if (!h.contains(qmul(qmul(x, s), qinv(x)))) return false;
    return true;
}

template <class S>
CosetDecomp left_cosets(const BinaryGroup<S>& g, const BinaryGroup<S>& h) {
    if (!subset_of(h, g))
        throw NotASubgroup(label_name(h.label) + " is not a subgroup of " + label_name(g.label));
    CosetDecomp d;
    d.coset_of.assign(g.size(), -1);
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        if (d.coset_of[i] >= 0) continue;
        int cid = d.count++;
        d.rep_index.push_back(i);
        for (const auto& hh : h.elems) {
            int j = g.index_of(qmul(g.elems[i], hh));
            if (j < 0) throw NotASubgroup("coset product escaped the group");
            d.coset_of[j] = cid;
        }
    }
    return d;
}

template <>
Quat<FieldElem> k_rotation<FieldElem>(long t, long order) {
    if (order != 1 && order != 2 && order != 4 && order != 8)
        throw UnsupportedExact("exact k-rotation needs order | 8, got " + std::to_string(order));
    return k_rotation_exact(static_cast<int>(((t % order) + order) % order), order);
}

template <>
Quat<double> k_rotation<double>(long t, long order) {
    double a = 2.0 * std::numbers::pi * static_cast<double>(((t % order) + order) % order) /
               static_cast<double>(order);
    return {std::cos(a), 0.0, 0.0, std::sin(a)};
}

template <class S>
bool group_axioms_hold(const BinaryGroup<S>& g) {
    if (!g.contains(Quat<S>::one())) return false;
    for (const auto& a : g.elems) {
        if (!g.contains(qinv(a))) return false;
        for (const auto& b : g.elems)
            if (!g.contains(qmul(a, b))) return false;
    }
    return true;
}

#define SQ3_INSTANTIATE(S)                                                          \
    template struct BinaryGroup<S>;                                                 \
    template void sort_and_dedup<S>(std::vector<Quat<S>>&);                         \
    template BinaryGroup<S> build_group<S>(const GroupLabel&);                      \
    template BinaryGroup<S> intersect<S>(const BinaryGroup<S>&, const BinaryGroup<S>&); \
    template bool subset_of<S>(const BinaryGroup<S>&, const BinaryGroup<S>&);       \
    template bool normal_in<S>(const BinaryGroup<S>&, const BinaryGroup<S>&);       \
    template CosetDecomp left_cosets<S>(const BinaryGroup<S>&, const BinaryGroup<S>&); \
    template bool group_axioms_hold<S>(const BinaryGroup<S>&);                      \
    template std::vector<Quat<S>> small_generating_set<S>(const BinaryGroup<S>&);

SQ3_INSTANTIATE(FieldElem)
SQ3_INSTANTIATE(double)
#undef SQ3_INSTANTIATE

}  // namespace sq3
