#pragma once

#include <cmath>

#include "sq3/field.hpp"

namespace sq3 {

// Global comparison tolerance for the float backend (equality/dedup).
// Table values are separated by far more than the default.
double float_eps();
void set_float_eps(double eps);

// The geometric code is written once against a scalar backend: FieldElem for
// exact certification, double for the fast oracle.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<FieldElem> {
    static constexpr bool exact = true;
    static FieldElem zero() { return {}; }
    static FieldElem one() { return FieldElem(1); }
    static FieldElem from_int(long v) { return FieldElem(v); }
    static int sign(const FieldElem& x) { return x.sign(); }
    static bool eq(const FieldElem& x, const FieldElem& y) { return x == y; }
    static int compare(const FieldElem& x, const FieldElem& y) { return x.compare(y); }
    static FieldElem recip(const FieldElem& x) { return x.inverse(); }
    static double to_double(const FieldElem& x) { return x.to_double(); }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static int sign(double x) {
        const double eps = float_eps();
        if (x > eps) return 1;
        if (x < -eps) return -1;
        return 0;
    }
    static bool eq(double x, double y) { return std::fabs(x - y) <= float_eps(); }
    static int compare(double x, double y) { return sign(x - y); }
    static double recip(double x) { return 1.0 / x; }
    static double to_double(double x) { return x; }
};

inline double scalar_to_double(const FieldElem& x) { return x.to_double(); }
inline double scalar_to_double(double x) { return x; }

}  // namespace sq3
