#pragma once

namespace sq3 {

// Diameter of S^n modulo the full symmetry group of the cubic tessellation
// (radial projection of the (n+1)-cube), by brute-force Voronoi vertex
// enumeration around a projected cube vertex. Supported for 1 <= n <= 4.
double hypercube_diameter(int n);

// arccos(1/sqrt(n+1))
double hypercube_formula(int n);

}  // namespace sq3
