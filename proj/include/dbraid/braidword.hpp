#pragma once

#include <string>
#include <vector>

#include "dbraid/rootsys.hpp"

namespace dbraid {

// A double braid word: letters in {±1,...,±rank}. Positions are 1-based to
// line up with the crossing indexing [1, m]; position 0 is the left boundary.
struct DoubleWord {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    int letter(int c) const { return letters[c - 1]; }  // 1-based
    bool operator==(const DoubleWord& o) const { return letters == o.letters; }
};

DoubleWord parse_word(const std::string& text, int rank);
std::string word_to_string(const DoubleWord& w);

WeylElt s_plus(const DynkinData& D, int i);   // s_i for i>0, id for i<0
WeylElt s_minus(const DynkinData& D, int i);  // id for i>0, s_{-i} for i<0

// Demazure product s^-_{i_m} * ... * s^-_{i_1} * s^+_{i_1} * ... * s^+_{i_m}
WeylElt demazure_pi(const DynkinData& D, const DoubleWord& w);

// The rightmost-greedy subexpression u_m = w0, u_{c-1} = min(u_c, s^- u_c s^+),
// and the solid/hollow split it induces.
struct Crossings {
    std::vector<WeylElt> u;       // size m+1, u[0..m]
    std::vector<WeylElt> w;       // w[c] = w0 * u[c]
    std::vector<int> solid;       // sorted solid positions (1-based)
    std::vector<char> solid_at;   // size m+1; solid_at[c] for c in [1,m]
    std::vector<i64> d_of;        // aligned with `solid`: d_{|i_c|}

    bool is_solid(int c) const { return solid_at[c] != 0; }
    int solid_index(int c) const;  // position of crossing c in `solid`, -1 if hollow
};

Crossings compute_crossings(const DynkinData& D, const DoubleWord& w);  // throws BadDemazure

// Variant of the greedy subexpression that takes max instead of min exactly at
// position e; detects whether e is mutable (aps.u[0] == id) or frozen.
struct ApsData {
    int e = 0;
    std::vector<WeylElt> u;
    bool is_mutable = false;
};

ApsData compute_aps(const DynkinData& D, const DoubleWord& w, const Crossings& cr, int e);

// letterwise j_c = -(i_c)^*; an involution
DoubleWord op_word(const DynkinData& D, const DoubleWord& w);

// drop the first c letters
DoubleWord suffix(const DoubleWord& w, int c);

}  // namespace dbraid
