#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sq3/orbit_cell.hpp"

using namespace sq3;

namespace {

constexpr double kPi = std::numbers::pi;

FieldElem fq(long num, long den = 1) { return FieldElem(Rational(num, den)); }

// canonical projective form, for comparing vertex direction sets exactly
Vec4<FieldElem> proj(const Vec4<FieldElem>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            FieldElem inv = c.inverse();
            return {v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv};
        }
    return v;
}

bool same_direction_sets(std::vector<Vec4<FieldElem>> a, std::vector<Vec4<FieldElem>> b) {
    if (a.size() != b.size()) return false;
    auto key = [](const Vec4<FieldElem>& v) {
        std::array<double, 4> k;
        for (int i = 0; i < 4; ++i) k[i] = v[i].to_double();
        return k;
    };
    auto lt = [&](const Vec4<FieldElem>& x, const Vec4<FieldElem>& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vec4<FieldElem> pa = proj(a[i]), pb = proj(b[i]);
        for (int c = 0; c < 4; ++c)
            if (pa[c] != pb[c]) return false;
    }
    return true;
}

std::vector<Vec4<FieldElem>> cell_dirs(const SphericalCell<FieldElem>& cell) {
    std::vector<Vec4<FieldElem>> out;
    for (const auto& v : cell.vertices) out.push_back(v.dir);
    return out;
}

}  // namespace

TEST_CASE("orbit of 22 is the quaternion group D2") {
    auto g = instantiate<FieldElem>("22");
    Orbit<FieldElem> orb = orbit_of_one(g);
    CHECK(orb.size() == 8);
    auto d2 = build_group<FieldElem>({BinKind::D, 2});
    for (const auto& q : d2.elems) CHECK(orb.contains(q));
    CHECK(orb.size() * stabilizer_of_one_order(g) == g.size());
}

TEST_CASE("cube cell of family 22") {
    auto cell = cell_of_family<FieldElem>("22");
    CHECK(cell.kind == CellKind::polytope);
    REQUIRE(cell.vertices.size() == 8);
    // vertices (1 +- i +- j +- k)/2, exactly
    std::vector<Vec4<FieldElem>> expected;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                expected.push_back({fq(1, 2), fq(sx, 2), fq(sy, 2), fq(sz, 2)});
    CHECK(same_direction_sets(cell_dirs(cell), expected));
    CHECK(cell.bound.cos_sign == 1);
    CHECK(cell.bound.cos2 == fq(1, 4));
    CHECK(cell.bound.radians == doctest::Approx(kPi / 3).epsilon(1e-12));
    FaceCensus fc = cell_statistics(cell);
    CHECK(fc.face_total == 6);
    CHECK(fc.by_size.at(4) == 6);
}

TEST_CASE("octahedron cell of family 20") {
    auto g = instantiate<FieldElem>("20");
    Orbit<FieldElem> orb = orbit_of_one(g);
    CHECK(orb.size() == 24);
    // closest images are the sixteen (1 +- i +- j +- k)/2 ... the first layer
    // beyond 1 itself has the eight with positive real part
    REQUIRE(orb.layers.size() >= 2);
    CHECK(orb.layers[1].point_idx.size() == 8);
    CHECK(orb.layers[1].cos_dist == fq(1, 2));
    auto cell = prefundamental_domain(orb);
    REQUIRE(cell.vertices.size() == 6);
    FieldElem r = FieldElem::inv_sqrt2(), z = fq(0);
    std::vector<Vec4<FieldElem>> expected = {{r, r, z, z}, {r, -r, z, z}, {r, z, r, z},
                                             {r, z, -r, z}, {r, z, z, r}, {r, z, z, -r}};
    CHECK(same_direction_sets(cell_dirs(cell), expected));
    CHECK(cell.bound.cos2 == fq(1, 2));
    FaceCensus fc = cell_statistics(cell);
    CHECK(fc.face_total == 8);
    CHECK(fc.by_size.at(3) == 8);
}

TEST_CASE("truncated tetrahedron of family 32") {
    auto cell = cell_of_family<FieldElem>("32");
    REQUIRE(cell.vertices.size() == 12);
    // (sqrt5 + 3i + j + k)/4 plus sign changes (two at a time) and cyclic shifts
    FieldElem s5 = FieldElem::sqrt5();
    std::vector<Vec4<FieldElem>> expected;
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            FieldElem c3 = fq(3 * a), c1 = fq(b), cc = fq(a * b);
            expected.push_back({s5, c3, c1, cc});
            expected.push_back({s5, cc, c3, c1});
            expected.push_back({s5, c1, cc, c3});
        }
    CHECK(same_direction_sets(cell_dirs(cell), expected));
    CHECK(cell.bound.cos2 == fq(5, 16));
}

TEST_CASE("truncated cube of families 23/25") {
    auto cell = cell_of_family<FieldElem>("23");
    REQUIRE(cell.vertices.size() == 24);
    // ((sqrt2+1) +- (sqrt2-1) i +- j +- k)/(2 sqrt2) plus cyclic permutations
    FieldElem w = FieldElem::sqrt2() + fq(1);
    FieldElem u = FieldElem::sqrt2() - fq(1);
    std::vector<Vec4<FieldElem>> expected;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) {
                FieldElem ua = u * fq(a), vb = fq(b), vc = fq(c);
                expected.push_back({w, ua, vb, vc});
                expected.push_back({w, vc, ua, vb});
                expected.push_back({w, vb, vc, ua});
            }
    CHECK(same_direction_sets(cell_dirs(cell), expected));
    // cos^2 = (3 + 2 sqrt2)/8
    CHECK(cell.bound.cos2 == FieldElem(Rational(3, 8), Rational(1, 4), 0, 0));
    FaceCensus fc = cell_statistics(cell);
    CHECK(fc.by_size.at(3) == 8);
    CHECK(fc.by_size.at(8) == 6);
    // family 25 produces the same cell
    auto cell25 = cell_of_family<FieldElem>("25");
    CHECK(same_direction_sets(cell_dirs(cell25), expected));
}

TEST_CASE("dodecahedron of families 24/30") {
    auto cell = cell_of_family<FieldElem>("24");
    REQUIRE(cell.vertices.size() == 20);
    // type A: (3 sqrt2 + sqrt10) + (sqrt10 - sqrt2)(+-i +-j +-k), 8 vertices
    FieldElem wa = fq(3) * FieldElem::sqrt2() + FieldElem::sqrt10();
    FieldElem ca = FieldElem::sqrt10() - FieldElem::sqrt2();
    // type B: (3 sqrt2 + sqrt10) + 0 i + (3 sqrt2 - sqrt10) j + 2 sqrt2 k and
    // its tetrahedral orbit, 12 vertices
    FieldElem cb1 = fq(3) * FieldElem::sqrt2() - FieldElem::sqrt10();
    FieldElem cb2 = fq(2) * FieldElem::sqrt2();
    FieldElem z = fq(0);
    std::vector<Vec4<FieldElem>> expected;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) expected.push_back({wa, ca * fq(a), ca * fq(b), ca * fq(c)});
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            FieldElem p = cb1 * fq(s1), q = cb2 * fq(s1 * s2);
            expected.push_back({wa, z, p, cb2 * fq(s2)});
            expected.push_back({wa, cb2 * fq(s2), z, p});
            expected.push_back({wa, p, cb2 * fq(s2), z});
        }
    CHECK(expected.size() == 20);
    CHECK(same_direction_sets(cell_dirs(cell), expected));
    FaceCensus fc = cell_statistics(cell);
    CHECK(fc.face_total == 12);
    CHECK(fc.by_size.at(5) == 12);
    CHECK(cell.bound.cos2 == FieldElem(Rational(7, 16), 0, Rational(3, 16), 0));
}

TEST_CASE("degenerate cells") {
    auto g21p = instantiate<FieldElem>("21'");
    auto cell_full = prefundamental_domain(orbit_of_one(g21p));
    CHECK(cell_full.kind == CellKind::full_sphere);
    CHECK(cell_full.vertices.empty());
    CHECK(cell_full.bound.radians == doctest::Approx(kPi));

    auto g21 = instantiate<FieldElem>("21");
    auto cell_hemi = prefundamental_domain(orbit_of_one(g21));
    CHECK(cell_hemi.kind == CellKind::hemisphere);
    CHECK(cell_hemi.vertices.empty());
    CHECK(cell_hemi.bound.cos_sign == 0);
    CHECK(cell_hemi.bound.radians == doctest::Approx(kPi / 2));
}

TEST_CASE("orbit-stabilizer identity across families") {
    for (const char* f : {"20", "21", "22", "23", "24", "26''", "29", "31", "32", "32'", "45",
                          "46", "50", "51m"}) {
        auto g = instantiate<FieldElem>(f);
        auto orb = orbit_of_one(g);
        CHECK(orb.size() * stabilizer_of_one_order(g) == g.size());
    }
}

TEST_CASE("monotonicity: larger group, smaller bound") {
    auto pairs = {std::pair{"22", "20"}, {"21", "22"}, {"24", "29"}, {"30", "50"},
                  std::pair{"20", "23"}, {"28", "25"}, {"32'", "32"}};
    for (auto [sub, sup] : pairs) {
        auto csub = cell_of_family<FieldElem>(sub);
        auto csup = cell_of_family<FieldElem>(sup);
        // d(sup) <= d(sub)
        CHECK(compare_bound(csup.bound, csub.bound) <= 0);
    }
}

TEST_CASE("family 10 prism at L = 2, exact") {
    FamilyParams p;
    p.m = 2;
    p.n = 2;
    auto g = instantiate<FieldElem>("10", p);
    Orbit<FieldElem> orb = orbit_of_one(g);
    CHECK(orb.size() == 8);  // D_2 as a set
    auto cell = prefundamental_domain(orb);
    CHECK(cell.vertices.size() == 8);  // 2L-prism, 4L vertices
    // bound arccos(cos(pi/4)/sqrt2): cos^2 = 1/4
    CHECK(cell.bound.cos2 == fq(1, 4));
    CHECK(cell.bound.radians == doctest::Approx(std::acos(std::cos(kPi / 4) / std::sqrt(2.0))));
    // prism vertices (1/sqrt2)(cos(pi/4) +- sin(pi/4) k + cos(pi t/4) i + sin(pi t/4) j)
    // with t odd; at L = 2 every coefficient is 1/2, the cube
    std::vector<Vec4<FieldElem>> expected;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                expected.push_back({fq(1, 2), fq(sx, 2), fq(sy, 2), fq(sz, 2)});
    CHECK(same_direction_sets(cell_dirs(cell), expected));
}

TEST_CASE("exact and float vertex sets agree within 1e-9") {
    for (const char* f : {"20", "22", "23", "24", "32", "32'"}) {
        auto ce = cell_of_family<FieldElem>(f);
        auto cf = cell_of_family<double>(f);
        REQUIRE(ce.vertices.size() == cf.vertices.size());
        CHECK(std::fabs(ce.bound.radians - cf.bound.radians) < 1e-9);
        std::vector<std::array<double, 4>> ve, vf;
        for (const auto& v : ce.vertices) ve.push_back(unit_double4(v.dir));
        for (const auto& v : cf.vertices) vf.push_back(unit_double4(v.dir));
        // nearest-neighbour matching; sort keys jitter in the last ulp
        for (const auto& u : ve) {
            double best = 1e9;
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < vf.size(); ++j) {
                double d = 0;
                for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(u[c] - vf[j][c]));
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            CHECK(best < 1e-9);
            vf.erase(vf.begin() + static_cast<long>(best_j));
        }
        CHECK(vf.empty());
    }
}

TEST_CASE("pruned and full enumerations coincide") {
    for (const char* f : {"20", "22", "23", "32"}) {
        auto fast = cell_of_family<FieldElem>(f, {}, false);
        auto slow = cell_of_family<FieldElem>(f, {}, true);
        CHECK(fast.vertices.size() == slow.vertices.size());
        CHECK(compare_bound(fast.bound, slow.bound) == 0);
        CHECK(same_direction_sets(cell_dirs(fast), cell_dirs(slow)));
    }
}

TEST_CASE("orbit symmetry when -1 is present") {
    for (const char* f : {"22", "23", "29"}) {
        auto orb = orbit_of_one(instantiate<FieldElem>(f));
        REQUIRE(orb.contains(-Quat<FieldElem>::one()));
        for (const auto& q : orb.points) CHECK(orb.contains(-q));
    }
}

TEST_CASE("29 first layer contains the listed closest image") {
    auto orb = orbit_of_one(instantiate<FieldElem>("29"));
    CHECK(orb.size() == 240);
    REQUIRE(orb.layers.size() >= 2);
    CHECK(orb.layers[1].point_idx.size() == 4);
    FieldElem e = FieldElem(Rational(1, 8)) * (fq(3) * FieldElem::sqrt2() + FieldElem::sqrt10());
    FieldElem c = FieldElem(Rational(1, 8)) * (FieldElem::sqrt10() - FieldElem::sqrt2());
    CHECK(orb.contains({e, c, c, c}));
    CHECK(orb.layers[1].cos_dist == e);
}
