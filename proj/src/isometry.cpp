#include "sq3/isometry.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sq3/linalg.hpp"

namespace sq3 {

std::string FamilyParams::describe() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, const std::optional<long>& v) {
        if (!v) return;
        os << (first ? "" : ",") << name << "=" << *v;
        first = false;
    };
    put("m", m);
    put("n", n);
    put("r", r);
    put("s", s);
    put("h", h);
    put("k", k);
    return os.str();
}

template <class S>
void sort_and_dedup_isometries(std::vector<Isometry<S>>& v) {
    for (auto& g : v) g = canonical(g);
    std::sort(v.begin(), v.end(),
              [](const Isometry<S>& a, const Isometry<S>& b) { return iso_compare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Isometry<S>& a, const Isometry<S>& b) { return iso_eq(a, b); }),
            v.end());
}

template <class S>
bool IsometryGroup<S>::contains(const Isometry<S>& g) const {
    Isometry<S> c = canonical(g);
    auto it = std::lower_bound(elems.begin(), elems.end(), c,
                               [](const Isometry<S>& a, const Isometry<S>& b) { return iso_compare(a, b) < 0; });
    return it != elems.end() && iso_eq(*it, c);
}

template <class S>
std::size_t IsometryGroup<S>::preserving_count() const {
    std::size_t n = 0;
    for (const auto& g : elems) n += (g.chi == Chirality::preserving) ? 1 : 0;
    return n;
}

template <class S>
bool is_subgroup(const IsometryGroup<S>& g1, const IsometryGroup<S>& g2) {
    return std::all_of(g1.elems.begin(), g1.elems.end(),
                       [&](const Isometry<S>& g) { return g2.contains(g); });
}

template <class S>
std::vector<Isometry<S>> small_generating_set_iso(const IsometryGroup<S>& g) {
    auto less = [](const Isometry<S>& a, const Isometry<S>& b) { return iso_compare(a, b) < 0; };
    std::vector<Isometry<S>> gens;
    std::vector<Isometry<S>> closure{canonical(Isometry<S>::identity())};
    while (closure.size() < g.size()) {
        for (const auto& x : g.elems) {
            if (!std::binary_search(closure.begin(), closure.end(), x, less)) {
                gens.push_back(x);
                break;
            }
        }
        // frontier BFS: right-multiply fresh elements by the generators
        std::vector<Isometry<S>> frontier = closure;
        while (!frontier.empty()) {
            std::vector<Isometry<S>> batch;
            for (const auto& a : frontier)
                for (const auto& s : gens) {
                    Isometry<S> p = compose(a, s);
                    if (!std::binary_search(closure.begin(), closure.end(), p, less))
                        batch.push_back(p);
                }
            sort_and_dedup_isometries(batch);
            std::vector<Isometry<S>> fresh;
            for (auto& p : batch)
                if (!std::binary_search(closure.begin(), closure.end(), p, less))
                    fresh.push_back(std::move(p));
            std::vector<Isometry<S>> merged;
            merged.reserve(closure.size() + fresh.size());
            std::merge(closure.begin(), closure.end(), fresh.begin(), fresh.end(),
                       std::back_inserter(merged), less);
            closure = std::move(merged);
            frontier = std::move(fresh);
        }
    }
    return gens;
}

template <class S>
bool is_normal_subgroup(const IsometryGroup<S>& g1, const IsometryGroup<S>& g2) {
    if (!is_subgroup(g1, g2)) return false;
    auto gens = small_generating_set_iso(g1);
    for (const auto& x : g2.elems)
        for (const auto& s : gens)
            if (!g1.contains(compose(compose(x, s), inverse(x)))) return false;
    return true;
}

template <class S>
bool closed_under_composition(const IsometryGroup<S>& g, std::size_t sample_limit) {
    const std::size_t n = g.size();
    if (sample_limit == 0 || n * n <= sample_limit) {
        for (const auto& a : g.elems)
            for (const auto& b : g.elems)
                if (!g.contains(compose(a, b))) return false;
        return true;
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < sample_limit; ++t)
        if (!g.contains(compose(g.elems[pick(rng)], g.elems[pick(rng)]))) return false;
    return true;
}

template <class S>
bool fixes_a_point(const IsometryGroup<S>& g) {
    using Ops = ScalarOps<S>;
    // Common fixed subspace, intersected one element at a time.
    std::vector<Vec4<S>> basis;
    for (int i = 0; i < 4; ++i) {
        Vec4<S> e{S{}, S{}, S{}, S{}};
        e[i] = Ops::one();
        basis.push_back(e);
    }
    for (const auto& el : g.elems) {
        if (basis.empty()) return false;
        Mat4<S> m = matrix_of(el);
        // rows of (M - I) * B, as constraints on coordinates in the basis
        std::vector<Vec4<S>> constraints;
        for (int row = 0; row < 4; ++row) {
            Vec4<S> c{S{}, S{}, S{}, S{}};
            for (std::size_t j = 0; j < basis.size(); ++j) {
                S acc{};
                for (int col = 0; col < 4; ++col) acc = acc + m[row][col] * basis[j][col];
                acc = acc - basis[j][row];
                c[j] = acc;
            }
            constraints.push_back(c);
        }
        // kernel in coefficient space (dimensions beyond basis.size() are inert)
        std::vector<Vec4<S>> coeff = nullspace4(constraints);
        std::vector<Vec4<S>> next;
        for (const auto& co : coeff) {
            bool inert = false;
            for (std::size_t j = basis.size(); j < 4; ++j)
                if (Ops::sign(co[j]) != 0) inert = true;
            if (inert) continue;
            Vec4<S> v{S{}, S{}, S{}, S{}};
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (int col = 0; col < 4; ++col) v[col] = v[col] + co[j] * basis[j][col];
            next.push_back(v);
        }
        basis = std::move(next);
    }
    return !basis.empty();
}

#define SQ3_INSTANTIATE(S)                                                                 \
    template struct IsometryGroup<S>;                                                      \
    template void sort_and_dedup_isometries<S>(std::vector<Isometry<S>>&);                 \
    template bool is_subgroup<S>(const IsometryGroup<S>&, const IsometryGroup<S>&);        \
    template bool is_normal_subgroup<S>(const IsometryGroup<S>&, const IsometryGroup<S>&); \
    template bool closed_under_composition<S>(const IsometryGroup<S>&, std::size_t);       \
    template std::vector<Isometry<S>> small_generating_set_iso<S>(const IsometryGroup<S>&); \
    template bool fixes_a_point<S>(const IsometryGroup<S>&);

SQ3_INSTANTIATE(FieldElem)
SQ3_INSTANTIATE(double)
#undef SQ3_INSTANTIATE

}  // namespace sq3
