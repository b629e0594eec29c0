#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "dbraid/braidword.hpp"

namespace dbraid {

// The cocharacter gamma(a, k, b) on W x I x W, evaluated by the Bruhat
// recursion (split off a left ascent of a and a right descent of b, compare
// the three Demazure products, branch). A GammaCtx carries the memo tables
// for one Dynkin type; it is not thread-safe, use one per worker.

struct GammaKey {
    std::array<int16_t, kMaxRank * kMaxRank> a;
    std::array<int16_t, kMaxRank * kMaxRank> b;
    int k;

    bool operator==(const GammaKey& o) const { return k == o.k && a == o.a && b == o.b; }
};

struct GammaKeyHash {
    size_t operator()(const GammaKey& g) const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(g.k);
        auto mix = [&h](const std::array<int16_t, kMaxRank * kMaxRank>& m) {
            for (int16_t v : m) {
                h ^= static_cast<uint16_t>(v);
                h *= 1099511628211ull;
            }
        };
        mix(g.a);
        mix(g.b);
        return static_cast<size_t>(h);
    }
};

struct GammaCtx {
    std::unordered_map<GammaKey, Cochar, GammaKeyHash> rec_memo;  // the recursion
    std::unordered_map<GammaKey, Cochar, GammaKeyHash> uv_memo;   // (u_c, u<e>_c, k) queries
    std::vector<std::vector<WeylElt>> elements_by_length;         // lazy group enumeration
};

// legacy name kept for the recursion-only memo
using GammaMemo = GammaCtx;

Cochar gamma(const DynkinData& D, const WeylElt& a, int k, const WeylElt& b, GammaCtx& ctx);

// test hook: `choose` picks among the admissible (ascent, descent) pairs at
// every recursion step; (0,0) reproduces the default smallest-index choice
Cochar gamma_with_choice(const DynkinData& D, const WeylElt& a, int k, const WeylElt& b,
                         const std::function<std::pair<int, int>(int n_asc, int n_desc)>& choose);

// The exponent of x_e in h^+_c, for k = i_e > 0, depends on the word only
// through the greedy fold U = u_c and the deviated fold V = u<e>_c: pick any
// (a, b) whose two-letter-tail canonical word reproduces (U, V) and evaluate
// the recursion there. Throws InternalInconsistency when no argument exists.
Cochar gamma_plus_from_folds(const DynkinData& D, const WeylElt& U, const WeylElt& V, int k,
                             GammaCtx& ctx);

// all fold-matched argument pairs (test hook for the uniqueness property)
std::vector<std::pair<WeylElt, WeylElt>> gamma_plus_arguments(const DynkinData& D, const WeylElt& U,
                                                              const WeylElt& V, int k, GammaCtx& ctx,
                                                              size_t max_count);

// exponent of x_e in the torus-valued function h^+_c
Cochar gamma_plus(const DynkinData& D, const DoubleWord& word, const Crossings& cr, int c, int e,
                  GammaCtx& ctx);

struct OrdTable {
    int m = 0, rank = 0;
    std::vector<int> solid;
    std::vector<i64> data;              // (m+1) x 2rank x |J|
    std::vector<std::vector<Cochar>> gp;  // gp[ei][c] = exponent of x_e in h^+_c

    static int k_slot(int rank, int k) { return k > 0 ? k - 1 : rank + (-k) - 1; }
    i64 ord(int c, int k, int e_index) const {
        return data[(static_cast<size_t>(c) * 2 * rank + k_slot(rank, k)) * solid.size() + e_index];
    }
    i64 ord_at(int c, int k, int e) const;  // by crossing number
};

// Full table of orders of vanishing; hard-checks nonnegativity,
// unitriangularity, the unit diagonal, and ord <= 1 in type A.
OrdTable ord_table(const DynkinData& D, const DoubleWord& word, const Crossings& cr, GammaCtx& ctx);

// compare the vanishing pattern of the table against the almost-positive
// sequence criterion; returns all mismatches (must be empty)
struct ApsMismatch {
    int c, k, e;
    bool table_zero, aps_equal;
};
std::vector<ApsMismatch> aps_zero_check(const DynkinData& D, const DoubleWord& word, GammaCtx& ctx);

}  // namespace dbraid
