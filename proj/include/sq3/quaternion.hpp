#pragma once

#include <array>
#include <cstddef>

#include "sq3/scalar.hpp"

namespace sq3 {

// Quaternion w + x i + y j + z k over a scalar backend S. Group elements are
// unit quaternions; geometric routines never normalize in the exact backend.
template <class S>
struct Quat {
    S w{}, x{}, y{}, z{};

    static Quat one() { return {ScalarOps<S>::one(), S{}, S{}, S{}}; }

    Quat operator-() const { return {-w, -x, -y, -z}; }
    Quat operator+(const Quat& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
    Quat operator-(const Quat& q) const { return {w - q.w, x - q.x, y - q.y, z - q.z}; }
};

template <class S>
Quat<S> qmul(const Quat<S>& p, const Quat<S>& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

template <class S>
Quat<S> conj(const Quat<S>& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

template <class S>
S dot(const Quat<S>& p, const Quat<S>& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

template <class S>
S norm2(const Quat<S>& q) {
    return dot(q, q);
}

// Cosine of the geodesic distance from 1 to a unit quaternion: <1, q> = Re q.
template <class S>
const S& geodesic_cos(const Quat<S>& q) {
    return q.w;
}

// Inverse of a unit quaternion.
template <class S>
Quat<S> qinv(const Quat<S>& q) {
    return conj(q);
}

template <class S>
bool qeq(const Quat<S>& p, const Quat<S>& q) {
    using Ops = ScalarOps<S>;
    return Ops::eq(p.w, q.w) && Ops::eq(p.x, q.x) && Ops::eq(p.y, q.y) && Ops::eq(p.z, q.z);
}

// Numeric lexicographic order on (w, x, y, z); exact backend compares exactly,
// float backend through the global tolerance, so both backends sort alike.
template <class S>
int qcompare(const Quat<S>& p, const Quat<S>& q) {
    using Ops = ScalarOps<S>;
    if (int c = Ops::compare(p.w, q.w)) return c;
    if (int c = Ops::compare(p.x, q.x)) return c;
    if (int c = Ops::compare(p.y, q.y)) return c;
    return Ops::compare(p.z, q.z);
}

// Representative of the sign class {q, -q}: first nonzero coordinate positive.
template <class S>
Quat<S> canonical_sign(const Quat<S>& q) {
    using Ops = ScalarOps<S>;
    for (const S* c : {&q.w, &q.x, &q.y, &q.z}) {
        int s = Ops::sign(*c);
        if (s > 0) return q;
        if (s < 0) return -q;
    }
    return q;
}

template <class S>
std::array<double, 4> to_double4(const Quat<S>& q) {
    using Ops = ScalarOps<S>;
    return {Ops::to_double(q.w), Ops::to_double(q.x), Ops::to_double(q.y), Ops::to_double(q.z)};
}

inline Quat<double> to_float(const Quat<FieldElem>& q) {
    return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()};
}

}  // namespace sq3
