#include <doctest.h>

#include <cmath>
#include <random>

#include "sq3/field.hpp"

using sq3::FieldElem;
using sq3::Rational;

namespace {

std::mt19937_64 rng(20240817ULL);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return {num(rng), den(rng)};
}

FieldElem random_elem() {
    return {random_rational(), random_rational(), random_rational(), random_rational()};
}

double eval_componentwise(const FieldElem& x) {
    return x.rat().get_d() + x.coeff_sqrt2().get_d() * std::sqrt(2.0) +
           x.coeff_sqrt5().get_d() * std::sqrt(5.0) + x.coeff_sqrt10().get_d() * std::sqrt(10.0);
}

}  // namespace

TEST_CASE("basis addition and identities") {
    FieldElem one(1);
    FieldElem s2 = FieldElem::sqrt2();
    CHECK(one + s2 == FieldElem(1, 1, 0, 0));
    FieldElem x = random_elem();
    CHECK(x + FieldElem() == x);
    CHECK(FieldElem(0, 1, 1, 0) + FieldElem(0, -1, -1, 0) == FieldElem());
}

TEST_CASE("basis products") {
    CHECK(FieldElem::sqrt2() * FieldElem::sqrt5() == FieldElem::sqrt10());
    CHECK(FieldElem::sqrt2() * FieldElem::sqrt2() == FieldElem(2));
    CHECK(FieldElem::sqrt5() * FieldElem::sqrt5() == FieldElem(5));
    CHECK(FieldElem::sqrt10() * FieldElem::sqrt10() == FieldElem(10));
    CHECK(FieldElem::sqrt2() * FieldElem::sqrt10() == FieldElem(0) + FieldElem(0, 0, 2, 0));
    CHECK(FieldElem::sqrt5() * FieldElem::sqrt10() == FieldElem(0, 5, 0, 0));
    // (sqrt2 + sqrt5)^2 = 7 + 2 sqrt10
    FieldElem s = FieldElem::sqrt2() + FieldElem::sqrt5();
    CHECK(s * s == FieldElem(7, 0, 0, 2));
}

TEST_CASE("golden ratio satisfies tau^2 = tau + 1") {
    FieldElem tau = FieldElem::golden();
    CHECK(tau * tau == tau + FieldElem(1));
    CHECK(tau == FieldElem(Rational(1, 2), 0, Rational(1, 2), 0));
    CHECK(tau * tau == FieldElem(Rational(3, 2), 0, Rational(1, 2), 0));
}

TEST_CASE("inverses") {
    CHECK(FieldElem(2).inverse() == FieldElem(Rational(1, 2)));
    // (1 + sqrt2)^-1 = -1 + sqrt2
    CHECK((FieldElem(1) + FieldElem::sqrt2()).inverse() == FieldElem(-1, 1, 0, 0));
    FieldElem tau = FieldElem::golden();
    CHECK(tau.inverse() == tau - FieldElem(1));
    CHECK_THROWS_AS(FieldElem().inverse(), std::domain_error);
}

TEST_CASE("signs") {
    CHECK(FieldElem().sign() == 0);
    // sqrt2 + sqrt5 > sqrt10 since (sqrt2+sqrt5)^2 = 7 + 2 sqrt10 > 10
    CHECK((FieldElem::sqrt2() + FieldElem::sqrt5() - FieldElem::sqrt10()).sign() == 1);
    CHECK((FieldElem::sqrt10() - FieldElem(4)).sign() == -1);
}

TEST_CASE("radicand of the deepest nonfibering bound is positive") {
    FieldElem x = FieldElem(40) + FieldElem(12) * FieldElem::sqrt2() -
                  FieldElem(8) * FieldElem::sqrt5() - FieldElem(12) * FieldElem::sqrt10();
    CHECK(x.sign() == 1);
    // independent double-precision oracle
    double oracle = 40.0 + 12.0 * std::sqrt(2.0) - 8.0 * std::sqrt(5.0) - 12.0 * std::sqrt(10.0);
    CHECK(oracle == doctest::Approx(1.1346870064582669).epsilon(1e-12));
    CHECK(x.to_double() == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("field axioms on random elements") {
    for (int trial = 0; trial < 1000; ++trial) {
        FieldElem x = random_elem(), y = random_elem(), z = random_elem();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem(1));
    }
}

TEST_CASE("galois norm of nonzero elements is a nonzero rational") {
    for (int trial = 0; trial < 300; ++trial) {
        FieldElem x = random_elem();
        if (x.is_zero()) continue;
        Rational n = x.galois_norm();
        CHECK(n != 0);
        // product over the Galois orbit has no radical part
        FieldElem full = x * x.conj_sqrt2() * x.conj_sqrt5() * x.conj_sqrt2().conj_sqrt5();
        CHECK(full == FieldElem(n));
    }
}

TEST_CASE("to_double matches componentwise evaluation") {
    for (int trial = 0; trial < 500; ++trial) {
        FieldElem x = random_elem();
        double direct = eval_componentwise(x);
        CHECK(x.to_double() == doctest::Approx(direct).epsilon(1e-14));
    }
}

TEST_CASE("sign agrees with a 100-digit interval oracle") {
    // ~100 decimal digits = 340 bits
    for (int trial = 0; trial < 1000; ++trial) {
        FieldElem x = random_elem();
        if (x.is_zero()) continue;
        auto [lo, hi] = x.enclosure(340);
        int oracle = sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0);
        if (oracle == 0) continue;  // enclosure undecided (never for these sizes)
        CHECK(x.sign() == oracle);
    }
}

TEST_CASE("enclosure brackets the value") {
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem x = random_elem();
        auto [lo, hi] = x.enclosure(96);
        CHECK(lo.get_d() <= x.to_double() + 1e-12);
        CHECK(hi.get_d() >= x.to_double() - 1e-12);
        CHECK(hi - lo < Rational(1, 1000000));
    }
}
