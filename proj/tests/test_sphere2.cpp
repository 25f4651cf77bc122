#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sq3/sphere2.hpp"
#include <stdexcept>

using namespace sq3;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dual law of cosines reproduces the polyhedral diameters") {
    // side opposite the right angle in the (pi/2, pi/3, pi/5) triangle
    SphericalTriangle t = sides_from_angles(kPi / 2, kPi / 3, kPi / 5);
    double alpha = std::acos(std::tan(3 * kPi / 10) / std::sqrt(3.0));
    CHECK(t.a == doctest::Approx(alpha).epsilon(1e-12));
    CHECK(t.a == doctest::Approx(0.65235813978437).epsilon(1e-12));
    // tan(3 pi/10) = cot(pi/5)
    CHECK(std::acos(1.0 / (std::tan(kPi / 5) * std::sqrt(3.0))) ==
          doctest::Approx(alpha).epsilon(1e-12));

    CHECK(sides_from_angles(kPi / 2, kPi / 3, kPi / 4).a ==
          doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-12));
    CHECK(sides_from_angles(kPi / 2, kPi / 3, kPi / 3).a ==
          doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("triangle validation") {
    CHECK_THROWS_AS(sides_from_angles(kPi / 2, kPi / 4, kPi / 4), std::invalid_argument);
    CHECK_THROWS_AS(sides_from_angles(0.0, kPi / 2, kPi / 2), std::invalid_argument);
    CHECK_THROWS_AS(sides_from_angles(kPi, kPi / 2, kPi / 2), std::invalid_argument);
}

TEST_CASE("triangle sides stay in (0, pi)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    int tested = 0;
    while (tested < 500) {
        double A = u(rng), B = u(rng), C = u(rng);
        if (!(A < kPi && B < kPi && C < kPi && A + B + C > kPi)) continue;
        // spherical excess alone does not make a valid triangle; skip the
        // combinations the dual law pushes out of [-1, 1]
        auto inside = [](double A0, double B0, double C0) {
            double v = (std::cos(A0) + std::cos(B0) * std::cos(C0)) /
                       (std::sin(B0) * std::sin(C0));
            return v > -1.0 && v < 1.0;
        };
        if (!inside(A, B, C) || !inside(B, C, A) || !inside(C, A, B)) continue;
        SphericalTriangle t = sides_from_angles(A, B, C);
        for (double side : {t.a, t.b, t.c}) {
            CHECK(side > 0.0);
            CHECK(side < kPi);
        }
        ++tested;
    }
}

TEST_CASE("O(3) registry values") {
    CHECK(o3_diameter("Cn") == doctest::Approx(kPi));
    CHECK(o3_diameter("Cnv", 5) == doctest::Approx(kPi));
    CHECK(o3_diameter("Dn", 3) == doctest::Approx(kPi / 2));
    CHECK(o3_diameter("SN", 4) == doctest::Approx(kPi / 2));
    CHECK(o3_diameter("T") == doctest::Approx(std::acos(1.0 / 3.0)));
    CHECK(o3_diameter("Td") == doctest::Approx(std::acos(1.0 / 3.0)));
    CHECK(o3_diameter("Th") == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))));
    CHECK(o3_diameter("Oh") == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))));
    CHECK(o3_diameter("I") == doctest::Approx(alpha_icosahedral()));
    CHECK(o3_diameter("Ih") == doctest::Approx(alpha_icosahedral()));
    CHECK_THROWS_AS(o3_diameter("Qx"), std::invalid_argument);
    CHECK(o3_registry().size() == 21);
}

TEST_CASE("cohomogeneity-two reduction") {
    double half_alpha = 0.5 * alpha_icosahedral();
    CHECK(cohom2_diameter(1, 1, "Ih") == doctest::Approx(half_alpha));
    CHECK(half_alpha == doctest::Approx(0.326179069892184).epsilon(1e-12));
    CHECK(kPi / half_alpha == doctest::Approx(9.63).epsilon(0.005));
    CHECK(cohom2_diameter(1, 2) == doctest::Approx(kPi / 2));
    CHECK(cohom2_diameter(2, 3, "Ih") == doctest::Approx(kPi / 2));
    CHECK(cohom2_diameter(1, 1, "Cn") == doctest::Approx(kPi / 2));
    CHECK(cohom2_diameter(1, 1) == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(cohom2_diameter(2, 4), std::invalid_argument);
}

TEST_CASE("fibering closed forms") {
    CHECK(fibering_diameter(10, 1) == doctest::Approx(kPi / 2));
    CHECK(fibering_diameter(10, 2) == doctest::Approx(kPi / 3));
    CHECK(fibering_diameter(34, 2) == doctest::Approx(kPi / 3));
    CHECK(fibering_diameter(15) == doctest::Approx(0.5 * std::acos(1.0 / std::sqrt(3.0))));
    CHECK(fibering_diameter(19) == doctest::Approx(0.5 * alpha_icosahedral()));
    // decreasing to pi/4 in the limit
    double prev = fibering_diameter(10, 1);
    for (long L = 2; L <= 20; ++L) {
        double cur = fibering_diameter(10, L);
        CHECK(cur < prev);
        CHECK(cur > kPi / 4);
        prev = cur;
    }
    CHECK(fibering_diameter(10, 1000000) == doctest::Approx(kPi / 4).epsilon(1e-6));
    CHECK_THROWS_AS(fibering_diameter(11, 1), std::invalid_argument);
    CHECK_THROWS_AS(fibering_diameter(10), std::invalid_argument);
}
