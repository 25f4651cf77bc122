#pragma once

#include <string>
#include <vector>

#include "sq3/errors.hpp"
#include "sq3/quaternion.hpp"

namespace sq3 {

// The finite subgroups of the unit quaternions that occur as L/R carriers:
// binary cyclic C(k) of order k (odd k allowed), binary dihedral D(n) of
// order 4n, and the binary tetrahedral/octahedral/icosahedral groups.
enum class BinKind { C, D, T, O, I, Idagger };

struct GroupLabel {
    BinKind kind;
    long n = 0;  // C: group order; D: order is 4n; ignored otherwise

    bool operator==(const GroupLabel&) const = default;
};

std::string label_name(const GroupLabel& label);
long label_order(const GroupLabel& label);

// Exact coordinates exist only when every angle lands in Q(sqrt2, sqrt5):
// C(1), C(2), C(4), C(8) on the k-axis, D(1), D(2), D(4), and T, O, I, Idagger.
bool exact_supported(const GroupLabel& label);

template <class S>
struct BinaryGroup {
    GroupLabel label{};
    std::vector<Quat<S>> elems;  // canonically sorted, full element set

    std::size_t size() const { return elems.size(); }
    bool contains(const Quat<S>& q) const;
    int index_of(const Quat<S>& q) const;  // -1 when absent
};

template <class S>
BinaryGroup<S> build_group(const GroupLabel& label);

// Sign flip of every sqrt5 coefficient; an involutive field automorphism
// carrying I onto Idagger elementwise.
Quat<FieldElem> flip_sqrt5(const Quat<FieldElem>& q);

template <class S>
void sort_and_dedup(std::vector<Quat<S>>& v);

template <class S>
BinaryGroup<S> intersect(const BinaryGroup<S>& g1, const BinaryGroup<S>& g2);

template <class S>
bool subset_of(const BinaryGroup<S>& h, const BinaryGroup<S>& g);

// Exact normality test by conjugation; throws NotASubgroup when h is not
// contained in g.
template <class S>
bool normal_in(const BinaryGroup<S>& h, const BinaryGroup<S>& g);

struct CosetDecomp {
    int count = 0;
    std::vector<int> coset_of;   // g-element index -> coset id
    std::vector<int> rep_index;  // coset id -> representative element index
};

// Left cosets of h in g (h need not be normal here; callers that build
// quotients check normality separately).
template <class S>
CosetDecomp left_cosets(const BinaryGroup<S>& g, const BinaryGroup<S>& h);

template <class S>
bool group_axioms_hold(const BinaryGroup<S>& g);

template <class S>
std::vector<Quat<S>> small_generating_set(const BinaryGroup<S>& g);

// Rotation cos(2 pi t/order) + sin(2 pi t/order) k about the k-axis.
// Exact backend requires order | 8.
template <class S>
Quat<S> k_rotation(long t, long order);

template <class S>
Quat<S> quat_i() {
    return {S{}, ScalarOps<S>::one(), S{}, S{}};
}

// Exact-to-backend import (identity for FieldElem, rounding for double).
template <class S>
Quat<S> import_quat(const Quat<FieldElem>& q);

template <>
inline Quat<FieldElem> import_quat<FieldElem>(const Quat<FieldElem>& q) { return q; }

template <>
inline Quat<double> import_quat<double>(const Quat<FieldElem>& q) { return to_float(q); }

}  // namespace sq3
