#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sq3 {

// Spherical triangle; side a lies opposite angle A, all quantities radians.
struct SphericalTriangle {
    double A = 0, B = 0, C = 0;
    double a = 0, b = 0, c = 0;
};

// Solves the sides from the angles with the dual spherical law of cosines,
// cos a = (cos A + cos B cos C) / (sin B sin C), and cyclic.
SphericalTriangle sides_from_angles(double A, double B, double C);

// arccos(tan(3 pi/10) / sqrt 3): diameter of S^2 / I (icosahedral).
double alpha_icosahedral();

enum class Parity { any, odd, even };

struct O3GroupEntry {
    std::string label;  // Schoenflies: Cn, SN, Cni, Cnh, Cnv, Dn, Dnh, Dnd, T, Td, Th, O, Oh, I, Ih
    Parity parity;      // constraint on n for the parametric rows
    double diameter;
    std::string closed_form;
};

// The finite O(3) quotient diameters, one entry per table row.
const std::vector<O3GroupEntry>& o3_registry();

// Diameter of S^2 / G for the labelled group; polyhedral entries are
// recomputed through sides_from_angles and cross-checked against the
// stored closed form. Throws std::invalid_argument for unknown labels.
double o3_diameter(const std::string& label, std::optional<long> n = std::nullopt);

// Quotients of S^3 by infinite groups with identity component T_{k,m}
// (gcd(k,m)=1): k = m = 1 scales the O(3) answer onto S^2(1/2); otherwise
// the two exceptional orbits pin the diameter at pi/2.
double cohom2_diameter(long k, long m, const std::string& finite_part = "");

// Family-wide fibering bounds: 10/34 give arccos(cos(pi/2L)/sqrt2) at a
// given L; 15 and 19 reduce to half the O^h / I^h diameters.
double fibering_diameter(int family, std::optional<long> L = std::nullopt);

}  // namespace sq3
