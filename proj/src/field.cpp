#include "sq3/field.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "sq3/scalar.hpp"

namespace sq3 {

namespace {
double g_float_eps = 1e-9;
}

double float_eps() { return g_float_eps; }
void set_float_eps(double eps) { g_float_eps = eps; }

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt5 = 2.2360679774997896964;
constexpr double kSqrt10 = 3.1622776601683793320;

// Dyadic enclosure of sqrt(n): lo = floor(sqrt(n*4^bits))/2^bits, hi = lo + 2^-bits.
std::pair<Rational, Rational> sqrt_enclosure(unsigned long n, unsigned bits) {
    mpz_class scaled = mpz_class(n) << (2 * bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    Rational lo(root, den);
    Rational hi(root + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

void add_scaled_interval(Rational& lo, Rational& hi, const Rational& coeff,
                         const std::pair<Rational, Rational>& box) {
    if (coeff == 0) return;
    if (coeff > 0) {
        lo += coeff * box.first;
        hi += coeff * box.second;
    } else {
        lo += coeff * box.second;
        hi += coeff * box.first;
    }
}

}  // namespace

FieldElem::FieldElem(Rational a, Rational b, Rational c, Rational d)
    : FieldElem(kCanonical, std::move(a), std::move(b), std::move(c), std::move(d)) {
    // mpq_class(p, q) does not reduce; comparisons need canonical form
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
    const double ad = a_.get_d();
    const double bd = b_.get_d() * kSqrt2;
    const double cd = c_.get_d() * kSqrt5;
    const double dd = d_.get_d() * kSqrt10;
    approx_ = ad + bd + cd + dd;
    absbound_ = std::fabs(ad) + std::fabs(bd) + std::fabs(cd) + std::fabs(dd);
}

FieldElem::FieldElem(CanonicalTag, Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const double ad = a_.get_d();
    const double bd = b_.get_d() * kSqrt2;
    const double cd = c_.get_d() * kSqrt5;
    const double dd = d_.get_d() * kSqrt10;
    approx_ = ad + bd + cd + dd;
    absbound_ = std::fabs(ad) + std::fabs(bd) + std::fabs(cd) + std::fabs(dd);
}

FieldElem FieldElem::operator*(const FieldElem& y) const {
    // Basis products: sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5,
    // sqrt5*sqrt10 = 5 sqrt2, and the squares 2, 5, 10.
    return {kCanonical,
            a_ * y.a_ + 2 * b_ * y.b_ + 5 * c_ * y.c_ + 10 * d_ * y.d_,
            a_ * y.b_ + b_ * y.a_ + 5 * (c_ * y.d_ + d_ * y.c_),
            a_ * y.c_ + c_ * y.a_ + 2 * (b_ * y.d_ + d_ * y.b_),
            a_ * y.d_ + d_ * y.a_ + b_ * y.c_ + c_ * y.b_};
}

Rational FieldElem::galois_norm() const {
    FieldElem prod = *this * conj_sqrt2();
    FieldElem full = prod * (conj_sqrt5() * conj_sqrt2().conj_sqrt5());
    // The product over the Galois orbit is rational by construction.
    return full.rat();
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
    FieldElem cofactor = conj_sqrt2() * conj_sqrt5() * conj_sqrt2().conj_sqrt5();
    FieldElem prod = *this * cofactor;
    const Rational& n = prod.rat();
    return {kCanonical, cofactor.a_ / n, cofactor.b_ / n, cofactor.c_ / n, cofactor.d_ / n};
}

std::pair<Rational, Rational> FieldElem::enclosure(unsigned bits) const {
    Rational lo = a_, hi = a_;
    add_scaled_interval(lo, hi, b_, sqrt_enclosure(2, bits));
    add_scaled_interval(lo, hi, c_, sqrt_enclosure(5, bits));
    add_scaled_interval(lo, hi, d_, sqrt_enclosure(10, bits));
    return {lo, hi};
}

int FieldElem::sign() const {
    if (is_zero()) return 0;
    // Fast path: the cached double carries a relative error of a few ulp per
    // term, so anything outside absbound * 1e-12 has a certified sign.
    const double margin = absbound_ * 1e-12;
    if (approx_ > margin) return 1;
    if (approx_ < -margin) return -1;
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = enclosure(bits);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (bits > (1u << 20))
            throw std::runtime_error("FieldElem::sign: enclosure failed to separate from zero");
    }
}

int FieldElem::compare(const FieldElem& y) const {
    // certified double fast path; error is a few ulp per term
    const double diff = approx_ - y.approx_;
    const double margin = (absbound_ + y.absbound_) * 1e-12;
    if (diff > margin) return 1;
    if (diff < -margin) return -1;
    if (*this == y) return 0;
    return (*this - y).sign();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    bool printed = false;
    auto emit = [&](const Rational& c, const char* radical) {
        if (c == 0) return;
        if (printed) os << (sign_of(c) > 0 ? " + " : " - ");
        else if (sign_of(c) < 0) os << "-";
        Rational mag = abs(c);
        if (mag != 1 || radical[0] == '\0') os << fraction_string(mag);
        if (radical[0] != '\0') {
            if (mag != 1) os << "*";
            os << radical;
        }
        printed = true;
    };
    emit(x.rat(), "");
    emit(x.coeff_sqrt2(), "sqrt2");
    emit(x.coeff_sqrt5(), "sqrt5");
    emit(x.coeff_sqrt10(), "sqrt10");
    if (!printed) os << "0";
    return os;
}

}  // namespace sq3
