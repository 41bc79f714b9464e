#ifndef PSREP_CATALOG_HPP
#define PSREP_CATALOG_HPP

#include <array>
#include <string>
#include <vector>

namespace psrep {

enum class CaseTag {
    QuaternionicGeneric,   // e6_2, e7_m5, e8_m24, f4_4
    QuaternionicSO4d,      // so(4,d), d >= 4
    SplitExceptional,      // e6_6, e7_7, e8_8
};

std::string to_string(CaseTag tag);

// One catalog row: a rank-4 symmetric pair with its Heisenberg parabolic data.
// rho are the coordinates of the half-sum of positive compact roots in the
// strongly orthogonal basis; rho_g = 1 + d is the half-sum constant for g.
struct AlgebraData {
    std::string name;
    CaseTag case_tag;
    long long a;                   // restricted root multiplicity
    long long d;                   // dim_C K/L1 = (1/2) dim_R n1
    std::array<long long, 4> rho;
    long long rho_g;

    bool quaternionic() const { return case_tag != CaseTag::SplitExceptional; }
};

// Catalog identifiers: e6_2, e7_m5, e8_m24, f4_4, e6_6, e7_7, e8_8,
// and the one-parameter family so4d(d), d >= 4 (also accepted as "so4d:d").
AlgebraData lookup(const std::string& name);
AlgebraData lookup_so4d(long long d);

// The eight named algebras, with so4d represented by d = 4.
std::vector<AlgebraData> named_catalog();

struct CatalogCheck {
    std::string identity;
    bool ok;
};

// Checks d = sum(rho) and rho_g = 1 + d for every named entry and for
// so4d(d), d = 4..40.
std::vector<CatalogCheck> validate_catalog();

}  // namespace psrep

#endif
