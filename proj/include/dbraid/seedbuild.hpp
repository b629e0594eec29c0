#pragma once

#include <string>

#include "dbraid/gamma.hpp"

namespace dbraid {

// omega = sum_{c<e} Omega_{ce} dlog x_c ^ dlog x_e over solid crossings;
// entries are exact rationals (quarter-integers during assembly)
struct TwoFormCoeffs {
    std::vector<int> solid;
    RatMat omega;  // |J| x |J|, antisymmetric

    const Rat& at(int ci, int ei) const { return omega.at(ci, ei); }
};

struct Seed {
    std::string cartan_type;
    DoubleWord word;
    std::vector<int> solid;       // sorted J
    std::vector<char> frozen;     // aligned with solid
    std::vector<i64> d;           // aligned with solid
    std::vector<int> mut;         // sorted mutable crossings
    IntMat B_ext;                 // rows: solid order; cols: mut order
    IntMat chamber;               // M_{ce} = ord[(c-1, i_c), e]
    IntMat cluster_exp;           // row e of chamber^{-1}: x_e over the chamber minors
    OrdTable ord;
    TwoFormCoeffs omega;

    int solid_index(int c) const;
    int mut_index(int c) const;
    bool is_frozen(int c) const { return frozen[solid_index(c)] != 0; }
};

IntMat chamber_matrix(const DynkinData& D, const DoubleWord& word, const OrdTable& ord);
IntMat cluster_monomials(const IntMat& chamber);  // exact inverse
TwoFormCoeffs two_form(const DynkinData& D, const DoubleWord& word, const Crossings& cr,
                       const OrdTable& ord);
IntMat extract_B(const DynkinData& D, const DoubleWord& word, const TwoFormCoeffs& om,
                 const std::vector<char>& frozen);

Seed build_seed(const DynkinData& D, const DoubleWord& word, GammaMemo& memo);

// do the columns of B_ext span the full lattice over the mutable index set
bool really_full_rank(const IntMat& B_ext);
bool really_full_rank(const Seed& seed);

std::string export_seed_json(const Seed& seed);
std::string export_seed_dot(const Seed& seed);

}  // namespace dbraid
