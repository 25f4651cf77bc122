#pragma once

#include <string>
#include <vector>

#include "sq3/isometry.hpp"

namespace sq3 {

// Goursat datum (L/l; R/r; phi): l normal in L, r normal in R, phi an
// isomorphism of the quotients, carried as an explicit map on coset ids.
template <class S>
struct GoursatDatum {
    BinaryGroup<S> L, l, R, r;
    CosetDecomp cosL, cosR;
    std::vector<int> phi;  // L/l coset id -> R/r coset id
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct GroupSpec {
    std::string family;
    FamilyParams params;
};

// "duval:29", "duval:11a(m=2,n=3)", "duval:33(n=2,r=4,s=1,h=0)"
GroupSpec parse_group_spec(const std::string& text);

bool family_exists(const std::string& family);
std::vector<std::string> family_list();

// Parameter validation shared by both backends; throws InvalidParameters
// naming the violated condition.
void check_family_params(const std::string& family, const FamilyParams& params);

// True when every carrier group of the family lies in Q(sqrt2, sqrt5)^4.
bool exact_supported_family(const std::string& family, const FamilyParams& params);

// |R| * |l| / 2, doubled when the family has orientation-reversing elements.
long expected_order(const std::string& family, const FamilyParams& params);

template <class S>
GoursatDatum<S> goursat_datum(const std::string& family, const FamilyParams& params);

template <class S>
std::vector<Isometry<S>> preserving_pairs(const GoursatDatum<S>& d);

// Instantiate a finite subgroup of O(4) from its Du Val family id.
template <class S>
IsometryGroup<S> instantiate(const std::string& family, const FamilyParams& params = {});

// Re-checks the datum (normality, phi isomorphism) and reconstructs the
// fibered product, comparing against `expected` when given.
template <class S>
ValidationReport validate(const GoursatDatum<S>& d, const IsometryGroup<S>* expected = nullptr);

template <class S>
ValidationReport validate_family(const std::string& family, const FamilyParams& params = {});

template <class S>
IsometryGroup<S> preserving_part(const IsometryGroup<S>& g);

template <class S>
IsometryGroup<S> conjugated_by(const IsometryGroup<S>& g, const Isometry<S>& x);

}  // namespace sq3
