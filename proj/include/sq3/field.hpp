#pragma once

#include <array>
#include <iosfwd>
#include <utility>

#include "sq3/rational.hpp"

namespace sq3 {

// Element of the real field Q(sqrt2, sqrt5), stored on the basis
// {1, sqrt2, sqrt5, sqrt10}. The representation is unique, so equality is
// componentwise and zero means all four coordinates vanish.
class FieldElem {
public:
    FieldElem() : FieldElem(Rational(0), 0, 0, 0) {}
    FieldElem(long v) : FieldElem(Rational(v), 0, 0, 0) {}  // NOLINT(google-explicit-constructor)
    explicit FieldElem(Rational a) : FieldElem(std::move(a), 0, 0, 0) {}
    FieldElem(Rational a, Rational b, Rational c, Rational d);

    static FieldElem sqrt2() { return {0, 1, 0, 0}; }
    static FieldElem sqrt5() { return {0, 0, 1, 0}; }
    static FieldElem sqrt10() { return {0, 0, 0, 1}; }
    static FieldElem half() { return FieldElem(Rational(1, 2)); }
    static FieldElem inv_sqrt2() { return {0, Rational(1, 2), 0, 0}; }
    // tau = (1+sqrt5)/2, the golden ratio; tau^2 = tau + 1.
    static FieldElem golden() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }

    const Rational& rat() const { return a_; }
    const Rational& coeff_sqrt2() const { return b_; }
    const Rational& coeff_sqrt5() const { return c_; }
    const Rational& coeff_sqrt10() const { return d_; }
    std::array<Rational, 4> coords() const { return {a_, b_, c_, d_}; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    FieldElem operator-() const { return {kCanonical, -a_, -b_, -c_, -d_}; }
    FieldElem operator+(const FieldElem& y) const {
        return {kCanonical, a_ + y.a_, b_ + y.b_, c_ + y.c_, d_ + y.d_};
    }
    FieldElem operator-(const FieldElem& y) const {
        return {kCanonical, a_ - y.a_, b_ - y.b_, c_ - y.c_, d_ - y.d_};
    }
    FieldElem operator*(const FieldElem& y) const;
    FieldElem operator/(const FieldElem& y) const { return *this * y.inverse(); }
    FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
    FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
    FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

    bool operator==(const FieldElem& y) const {
        return a_ == y.a_ && b_ == y.b_ && c_ == y.c_ && d_ == y.d_;
    }
    bool operator!=(const FieldElem& y) const { return !(*this == y); }

    // Galois conjugations (sqrt2 -> -sqrt2, sqrt5 -> -sqrt5) and the norm
    // down to Q, which is what makes exact inversion possible.
    FieldElem conj_sqrt2() const { return {kCanonical, a_, -b_, c_, -d_}; }
    FieldElem conj_sqrt5() const { return {kCanonical, a_, b_, -c_, -d_}; }
    Rational galois_norm() const;
    FieldElem inverse() const;  // throws std::domain_error on zero

    // Exact sign. Zero is decided by the representation; otherwise a dyadic
    // interval enclosure is refined (64 bits, doubling) until it excludes 0.
    int sign() const;
    int compare(const FieldElem& y) const;
    bool operator<(const FieldElem& y) const { return compare(y) < 0; }

    double to_double() const { return approx_; }
    // Rigorous rational enclosure [lo, hi] of the value at ~`bits` bits.
    std::pair<Rational, Rational> enclosure(unsigned bits) const;

    friend std::ostream& operator<<(std::ostream& os, const FieldElem& x);

private:
    // mpq arithmetic keeps results canonical; internal construction skips
    // the reduction pass the public constructor performs.
    struct CanonicalTag {};
    static constexpr CanonicalTag kCanonical{};
    FieldElem(CanonicalTag, Rational a, Rational b, Rational c, Rational d);

    Rational a_, b_, c_, d_;
    double approx_ = 0.0;    // float image, refreshed on construction
    double absbound_ = 0.0;  // sum of |term| magnitudes, for the fast sign path
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace sq3
