#pragma once

#include <map>
#include <optional>

#include "dbraid/braidword.hpp"
#include "dbraid/poly.hpp"

namespace dbraid {

// Exact SL_n realization of the chain attached to a type-A double braid word:
// one parameter per letter, generalized minors as honest matrix minors,
// cluster variables by iterated exact division, orders of vanishing by
// valuation. Used as independent ground truth for the combinatorial engine.

constexpr int kOracleMaxLen = 12;

struct PolyMat {
    int n = 0;
    std::vector<Poly> a;

    PolyMat() = default;
    PolyMat(int n_, int nvars) : n(n_), a(static_cast<size_t>(n_) * n_, Poly::zero(nvars)) {}
    Poly& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    static PolyMat identity(int n, int nvars);
};

PolyMat pm_mul(const PolyMat& x, const PolyMat& y);
Poly pm_minor(const PolyMat& m, int k);  // leading principal k x k minor

// z_i(t) has block [[t,-1],[1,0]] at rows/cols (i, i+1); zbar_i(t) has
// [[t,1],[-1,0]]; zbar_i(t)^{-1} has [[0,-1],[1,t]].
PolyMat gen_z(int n, int nvars, int i, const Poly& t);
PolyMat gen_zbar(int n, int nvars, int i, const Poly& t);
PolyMat gen_zbar_inv(int n, int nvars, int i, const Poly& t);

// integer lift matrices for Weyl elements (type A), as described by the
// reduced word: line uses block [[0,-1],[1,0]], bbar uses [[0,1],[-1,0]]
IntMat lift_line(int n, const std::vector<int>& word);
IntMat lift_bbar(int n, const std::vector<int>& word);

struct OracleChain {
    DynkinData D;  // type A
    DoubleWord word;
    Crossings cr;
    int n = 0;       // matrix size rank+1
    int nvars = 0;   // one parameter per letter
    std::vector<PolyMat> Z;  // Z[0..m], Z[m] = identity
};

OracleChain param_chain(const DynkinData& D, const DoubleWord& word);

// grid minor at (c, k), k in +-I
Poly grid_minor_poly(const OracleChain& oc, int c, int k);

// cluster variables, processed from the largest solid crossing down; each is
// primitive with positive leading coefficient
std::map<int, Poly> extract_cluster_polys(const OracleChain& oc);

// full table ord[(c,k),e] by valuation, with the monomial-factorization check
struct OracleOrd {
    int m = 0, rank = 0;
    std::vector<int> solid;
    std::vector<i64> data;  // (m+1) x 2rank x |J|

    i64 ord(int c, int k, int e_index) const;
    static int k_slot(int rank, int k);
};

OracleOrd ord_oracle(const OracleChain& oc, const std::map<int, Poly>& cluster);

}  // namespace dbraid
