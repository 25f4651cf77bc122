#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sq3/goursat.hpp"

using namespace sq3;

namespace {

FamilyParams params_mn(long m, long n) {
    FamilyParams p;
    p.m = m;
    p.n = n;
    return p;
}

}  // namespace

TEST_CASE("orders match |R||l|/2 for the headline groups") {
    CHECK(instantiate<FieldElem>("22").size() == 96);    // 24*8/2
    CHECK(instantiate<FieldElem>("29").size() == 2880);  // 48*120/2... as |R||l|/2 = 120*48/2
    CHECK(instantiate<FieldElem>("21'").size() == 12);   // 24*1/2
    CHECK(expected_order("22", {}) == 96);
    CHECK(expected_order("29", {}) == 2880);
    CHECK(expected_order("21'", {}) == 12);
    CHECK(expected_order("50", {}) == 14400);
}

TEST_CASE("diagonal family fixes the quaternion 1") {
    auto g = instantiate<FieldElem>("21'");
    const Quat<FieldElem> one = Quat<FieldElem>::one();
    for (const auto& el : g.elems) CHECK(qeq(apply(el, one), one));
    CHECK(fixes_a_point(g));
}

TEST_CASE("family 21 maps 1 to +-1 only and fixes nothing globally") {
    auto g = instantiate<FieldElem>("21");
    const Quat<FieldElem> one = Quat<FieldElem>::one();
    for (const auto& el : g.elems) {
        Quat<FieldElem> img = apply(el, one);
        CHECK((qeq(img, one) || qeq(img, -one)));
    }
    CHECK_FALSE(fixes_a_point(g));
}

TEST_CASE("trivial group fixes a point") {
    FamilyParams p;
    p.m = 1;
    p.n = 1;
    p.r = 1;
    p.s = 0;
    auto g = instantiate<FieldElem>("1'", p);
    CHECK(g.size() == 1);
    CHECK(fixes_a_point(g));
}

TEST_CASE("validate accepts the shipped data and rejects a corrupted phi") {
    auto d22 = goursat_datum<FieldElem>("22", {});
    auto g22 = instantiate<FieldElem>("22");
    ValidationReport rep = validate(d22, &g22);
    CHECK(rep.ok());

    auto d31 = goursat_datum<FieldElem>("31", {});
    CHECK(validate<FieldElem>(d31, nullptr).ok());

    // send two cosets to the same target: not a bijection, not an isomorphism
    auto broken = goursat_datum<FieldElem>("22", {});
    REQUIRE(broken.phi.size() == 3);
    broken.phi[1] = broken.phi[0];
    ValidationReport bad = validate<FieldElem>(broken, nullptr);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("26' and 26'' are not conjugate: trace multisets differ") {
    auto a = instantiate<FieldElem>("26'");
    auto b = instantiate<FieldElem>("26''");
    REQUIRE(a.size() == b.size());
    std::vector<double> ta, tb;
    for (const auto& el : a.elems) ta.push_back(trace_of(el).to_double());
    for (const auto& el : b.elems) tb.push_back(trace_of(el).to_double());
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    bool differ = false;
    for (std::size_t i = 0; i < ta.size(); ++i) differ = differ || std::fabs(ta[i] - tb[i]) > 1e-9;
    CHECK(differ);
}

TEST_CASE("conjugation by the reversing map swaps the pair") {
    // q -> conj(q) conjugates the transformation (l, r) into (r, l)
    const Isometry<FieldElem> rev0{Chirality::reversing, Quat<FieldElem>::one(),
                                   Quat<FieldElem>::one()};
    auto g = instantiate<FieldElem>("22");
    for (const auto& el : g.elems) {
        if (el.chi != Chirality::preserving) continue;
        Isometry<FieldElem> conjd = compose(compose(rev0, el), inverse(rev0));
        Isometry<FieldElem> swapped = canonical(Isometry<FieldElem>{Chirality::preserving, el.b, el.a});
        CHECK(iso_eq(conjd, swapped));
    }
}

TEST_CASE("composition agrees with matrix products") {
    auto g = instantiate<FieldElem>("40");
    REQUIRE(g.size() == 48);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const auto& a = g.elems[i * 5];
            const auto& b = g.elems[j * 5];
            Mat4<FieldElem> ma = matrix_of(a), mb = matrix_of(b);
            Mat4<FieldElem> mc = matrix_of(compose(a, b));
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    FieldElem acc;
                    for (int k = 0; k < 4; ++k) acc += ma[r][k] * mb[k][c];
                    CHECK(acc == mc[r][c]);
                }
        }
}

TEST_CASE("subgroup examples with indices") {
    auto g20 = instantiate<FieldElem>("20");
    auto g22 = instantiate<FieldElem>("22");
    auto g21 = instantiate<FieldElem>("21");
    CHECK(is_subgroup(g22, g20));
    CHECK(g20.size() / g22.size() == 3);
    CHECK(is_subgroup(g21, g22));
    CHECK(g22.size() / g21.size() == 4);
    CHECK(is_subgroup(g20, g20));
    CHECK_FALSE(is_subgroup(g20, g22));
}

TEST_CASE("family 26'' multiplies non-tetrahedral pairs by -1") {
    auto g = instantiate<FieldElem>("26''");
    auto tetra = build_group<FieldElem>({BinKind::T});
    for (const auto& el : g.elems) {
        REQUIRE(el.chi == Chirality::preserving);
        // representative pair (a, b): b = a on T, b = -a off T, up to sign class
        bool diag = qeq(el.a, el.b);
        bool anti = qeq(el.a, -el.b);
        CHECK((tetra.contains(el.a) ? diag : anti));
    }
}

TEST_CASE("invalid parameters carry the violated condition") {
    FamilyParams p;
    p.n = 2;
    p.r = 5;
    p.s = 2;  // gcd(2,5)=1 but s^2 = 4 != 1 mod 5
    p.h = 0;
    try {
        static_cast<void>(instantiate<double>("33", p));
        FAIL("expected InvalidParameters");
    } catch (const InvalidParameters& e) {
        CHECK(std::string(e.what()).find("condition [1]") != std::string::npos);
    }
    FamilyParams q;
    q.m = 2;
    q.n = 2;
    q.r = 3;
    q.s = 1;
    CHECK_THROWS_AS(static_cast<void>(instantiate<double>("1'", q)), InvalidParameters);  // m even
    CHECK_THROWS_AS(static_cast<void>(instantiate<FieldElem>("11a", params_mn(2, 3))),
                    UnsupportedExact);
    CHECK_NOTHROW(static_cast<void>(instantiate<double>("11a", params_mn(2, 3))));
}

TEST_CASE("group spec parsing") {
    GroupSpec s = parse_group_spec("duval:29");
    CHECK(s.family == "29");
    s = parse_group_spec("duval:11a(m=2,n=3)");
    CHECK(s.family == "11a");
    CHECK(s.params.m == 2);
    CHECK(s.params.n == 3);
    s = parse_group_spec("duval:33(n=2,r=4,s=1,h=0)");
    CHECK(s.family == "33");
    CHECK(s.params.h == 0);
    s = parse_group_spec("duval:26''");
    CHECK(s.family == "26''");
    CHECK_THROWS_AS(parse_group_spec("duval:"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("duval:99"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("foo:29"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("duval:29(m=2"), ParseError);
}

TEST_CASE("reversing part is a single coset where present") {
    for (const char* f : {"34", "39", "43", "45", "47", "51"}) {
        FamilyParams p;
        if (std::string(f) == "34") p.n = 2;
        auto g = instantiate<FieldElem>(f, p);
        CHECK(g.preserving_count() * 2 == g.size());
    }
}

TEST_CASE("exact support flags") {
    CHECK(exact_supported_family("29", {}));
    CHECK(exact_supported_family("51m", {}));
    FamilyParams p10 = params_mn(2, 4);
    CHECK(exact_supported_family("10", p10));
    CHECK_FALSE(exact_supported_family("10", params_mn(3, 3)));
    FamilyParams p33;
    p33.n = 2;
    p33.r = 4;
    p33.s = 1;
    p33.h = 0;
    CHECK(exact_supported_family("33", p33));
}
