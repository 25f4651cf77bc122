#include "sq3/sphere2.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sq3 {

namespace {
constexpr double kPi = std::numbers::pi;

double dual_law(double A, double B, double C) {
    return std::acos((std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C)));
}
}  // namespace

SphericalTriangle sides_from_angles(double A, double B, double C) {
    if (!(A > 0 && B > 0 && C > 0 && A < kPi && B < kPi && C < kPi))
        throw std::invalid_argument("sides_from_angles: angles must lie in (0, pi)");
    if (!(A + B + C > kPi))
        throw std::invalid_argument("sides_from_angles: angle sum must exceed pi");
    SphericalTriangle t;
    t.A = A;
    t.B = B;
    t.C = C;
    t.a = dual_law(A, B, C);
    t.b = dual_law(B, C, A);
    t.c = dual_law(C, A, B);
    return t;
}

double alpha_icosahedral() { return std::acos(std::tan(3 * kPi / 10) / std::sqrt(3.0)); }

const std::vector<O3GroupEntry>& o3_registry() {
    static const double a13 = std::acos(1.0 / 3.0);
    static const double a1r3 = std::acos(1.0 / std::sqrt(3.0));
    static const double alpha = alpha_icosahedral();
    static const std::vector<O3GroupEntry> table = {
        {"Cn", Parity::any, kPi, "pi"},
        {"SN", Parity::odd, kPi / 2, "pi/2"},   // together with Cn^i
        {"Cni", Parity::odd, kPi / 2, "pi/2"},
        {"SN", Parity::even, kPi / 2, "pi/2"},
        {"Cnh", Parity::odd, kPi / 2, "pi/2"},
        {"Cnh", Parity::even, kPi / 2, "pi/2"},
        {"Cnv", Parity::odd, kPi, "pi"},
        {"Cnv", Parity::even, kPi, "pi"},
        {"Dn", Parity::odd, kPi / 2, "pi/2"},
        {"Dn", Parity::even, kPi / 2, "pi/2"},
        {"Dnh", Parity::odd, kPi / 2, "pi/2"},
        {"Dnh", Parity::even, kPi / 2, "pi/2"},
        {"Dnd", Parity::odd, kPi / 2, "pi/2"},
        {"Dnd", Parity::even, kPi / 2, "pi/2"},
        {"T", Parity::any, a13, "arccos(1/3)"},
        {"Td", Parity::any, a13, "arccos(1/3)"},
        {"Th", Parity::any, a1r3, "arccos(1/sqrt3)"},
        {"O", Parity::any, a1r3, "arccos(1/sqrt3)"},
        {"Oh", Parity::any, a1r3, "arccos(1/sqrt3)"},
        {"I", Parity::any, alpha, "arccos(tan(3pi/10)/sqrt3)"},
        {"Ih", Parity::any, alpha, "arccos(tan(3pi/10)/sqrt3)"},
    };
    return table;
}

double o3_diameter(const std::string& label, std::optional<long> n) {
    const O3GroupEntry* found = nullptr;
    for (const auto& e : o3_registry()) {
        if (e.label != label) continue;
        if (n && e.parity == Parity::odd && *n % 2 == 0) continue;
        if (n && e.parity == Parity::even && *n % 2 == 1) continue;
        found = &e;
        break;
    }
    if (found == nullptr) throw std::invalid_argument("o3_diameter: unknown group label '" + label + "'");

    // Recompute the polyhedral entries from their Coxeter triangles.
    std::optional<double> tri;
    if (label == "T" || label == "Td") tri = sides_from_angles(kPi / 2, kPi / 3, kPi / 3).a;
    if (label == "Th" || label == "O" || label == "Oh") tri = sides_from_angles(kPi / 2, kPi / 3, kPi / 4).a;
    if (label == "I" || label == "Ih") tri = sides_from_angles(kPi / 2, kPi / 3, kPi / 5).a;
    if (tri && std::fabs(*tri - found->diameter) > 1e-12)
        throw std::logic_error("o3_diameter: triangle solver disagrees with registry for " + label);
    return found->diameter;
}

double cohom2_diameter(long k, long m, const std::string& finite_part) {
    if (std::gcd(k, m) != 1)
        throw std::invalid_argument("cohom2_diameter: k and m must be coprime");
    if (k != m) return kPi / 2;  // exceptional orbits cannot be interchanged
    double base = finite_part.empty() ? kPi : o3_diameter(finite_part);
    return base / 2;  // S^3 / T_{1,1} is the round 2-sphere of radius 1/2
}

double fibering_diameter(int family, std::optional<long> L) {
    switch (family) {
        case 10:
        case 34: {
            if (!L || *L < 1)
                throw std::invalid_argument("fibering_diameter: families 10/34 need L >= 1");
            return std::acos(std::cos(kPi / (2.0 * static_cast<double>(*L))) / std::sqrt(2.0));
        }
        case 15: return 0.5 * o3_diameter("Oh");
        case 19: return 0.5 * o3_diameter("Ih");
        default: throw std::invalid_argument("fibering_diameter: family must be 10, 15, 19 or 34");
    }
}

}  // namespace sq3
