#include <doctest.h>

#include <cmath>
#include <random>

#include "sq3/quaternion.hpp"

using namespace sq3;

namespace {

std::mt19937_64 rng(0x9e3779b9ULL);

Quat<FieldElem> random_field_quat() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    auto r = [&] { return FieldElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                    Rational(num(rng), den(rng)), 0); };
    return {r(), r(), r(), r()};
}

Quat<double> random_unit_quat() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Quat<double> q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    double n = std::sqrt(norm2(q));
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

const Quat<FieldElem> qi{FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(0)};
const Quat<FieldElem> qj{FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(0)};
const Quat<FieldElem> qk{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1)};

}  // namespace

TEST_CASE("quaternion relations") {
    CHECK(qeq(qmul(qi, qj), qk));
    CHECK(qeq(qmul(qj, qk), qi));
    CHECK(qeq(qmul(qk, qi), qj));
    CHECK(qeq(qmul(qi, qi), -Quat<FieldElem>::one()));
    Quat<FieldElem> q = random_field_quat();
    CHECK(qeq(qmul(q, Quat<FieldElem>::one()), q));
}

TEST_CASE("icosahedral generator has exact unit norm") {
    // p = ((tau - 1) + tau i + j)/2; tau^2 = tau + 1 forces |p| = 1
    FieldElem h = FieldElem::half();
    FieldElem tau = FieldElem::golden();
    Quat<FieldElem> p{(tau - FieldElem(1)) * h, tau * h, h, FieldElem(0)};
    CHECK(norm2(p) == FieldElem(1));
    CHECK(qeq(qmul(p, conj(p)), Quat<FieldElem>::one()));
}

TEST_CASE("geodesic cosines of the table points") {
    FieldElem h = FieldElem::half();
    Quat<FieldElem> omega{h, h, h, h};
    CHECK(geodesic_cos(omega) == h);  // distance pi/3
    FieldElem r = FieldElem::inv_sqrt2();
    Quat<FieldElem> e{r, r, FieldElem(0), FieldElem(0)};
    CHECK(dot(Quat<FieldElem>::one(), e) == r);  // distance pi/4
    CHECK(conj(qi).x == FieldElem(-1));
}

TEST_CASE("norm is multiplicative") {
    for (int t = 0; t < 200; ++t) {
        Quat<FieldElem> p = random_field_quat(), q = random_field_quat();
        CHECK(norm2(qmul(p, q)) == norm2(p) * norm2(q));
    }
    for (int t = 0; t < 200; ++t) {
        Quat<double> p = random_unit_quat(), q = random_unit_quat();
        CHECK(std::fabs(norm2(qmul(p, q)) - 1.0) < 1e-12);
    }
}

TEST_CASE("conjugation reverses products") {
    for (int t = 0; t < 200; ++t) {
        Quat<double> p = random_unit_quat(), q = random_unit_quat();
        Quat<double> lhs = conj(qmul(p, q));
        Quat<double> rhs = qmul(conj(q), conj(p));
        CHECK(qeq(lhs, rhs));
    }
}

TEST_CASE("sign-class canonicalization") {
    for (int t = 0; t < 200; ++t) {
        Quat<double> q = random_unit_quat();
        Quat<double> c = canonical_sign(q);
        CHECK(qeq(canonical_sign(c), c));                  // idempotent
        CHECK(qeq(canonical_sign(-q), c));                 // identifies q with -q
        CHECK((qeq(c, q) || qeq(c, -q)));                  // and nothing else
    }
    CHECK(qeq(canonical_sign(-qi), qi));
}
