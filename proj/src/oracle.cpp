#include "dbraid/oracle.hpp"

#include <algorithm>

namespace dbraid {

PolyMat PolyMat::identity(int n, int nvars) {
    PolyMat m(n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nvars, 1);
    return m;
}

PolyMat pm_mul(const PolyMat& x, const PolyMat& y) {
    PolyMat r(x.n, 0);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Poly s = Poly::zero(0);
            for (int k = 0; k < x.n; ++k) {
                if (x.at(i, k).is_zero() || y.at(k, j).is_zero()) continue;
                s = s + x.at(i, k) * y.at(k, j);
            }
            r.at(i, j) = s;
        }
    return r;
}

namespace {

// determinant of the k x k top-left block by expansion along the last row of
// the submatrix, memoized on the column subset
Poly det_submatrix(const PolyMat& m, unsigned cols, int row, std::map<unsigned, Poly>& memo) {
    if (row < 0) return Poly::constant(0, 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(0);
    int pos = 0;
    for (int c = 0; c < m.n; ++c) {
        if (!(cols & (1u << c))) continue;
        const Poly& entry = m.at(row, c);
        if (!entry.is_zero()) {
            Poly sub = det_submatrix(m, cols & ~(1u << c), row - 1, memo);
            Poly term = entry * sub;
            acc = (pos % 2 == (row % 2)) ? acc + term : acc - term;
        }
        ++pos;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

Poly pm_minor(const PolyMat& m, int k) {
    if (k == 0) return Poly::constant(0, 1);
    std::map<unsigned, Poly> memo;
    unsigned cols = (1u << k) - 1;
    // sign bookkeeping: expanding along the bottom row each time, the parity
    // of the column's position within the subset decides the sign relative to
    // the row parity.
    return det_submatrix(m, cols, k - 1, memo);
}

PolyMat gen_z(int n, int nvars, int i, const Poly& t) {
    PolyMat m = PolyMat::identity(n, nvars);
    int r = i - 1;
    m.at(r, r) = t;
    m.at(r, r + 1) = Poly::constant(nvars, -1);
    m.at(r + 1, r) = Poly::constant(nvars, 1);
    m.at(r + 1, r + 1) = Poly::zero(nvars);
    return m;
}

PolyMat gen_zbar(int n, int nvars, int i, const Poly& t) {
    PolyMat m = PolyMat::identity(n, nvars);
    int r = i - 1;
    m.at(r, r) = t;
    m.at(r, r + 1) = Poly::constant(nvars, 1);
    m.at(r + 1, r) = Poly::constant(nvars, -1);
    m.at(r + 1, r + 1) = Poly::zero(nvars);
    return m;
}

PolyMat gen_zbar_inv(int n, int nvars, int i, const Poly& t) {
    PolyMat m = PolyMat::identity(n, nvars);
    int r = i - 1;
    m.at(r, r) = Poly::zero(nvars);
    m.at(r, r + 1) = Poly::constant(nvars, -1);
    m.at(r + 1, r) = Poly::constant(nvars, 1);
    m.at(r + 1, r + 1) = t;
    return m;
}

namespace {

IntMat lift_gen(int n, int i, int a, int b, int c, int d) {
    IntMat m = IntMat::identity(n);
    int r = i - 1;
    m.at(r, r) = a;
    m.at(r, r + 1) = b;
    m.at(r + 1, r) = c;
    m.at(r + 1, r + 1) = d;
    return m;
}

}  // namespace

IntMat lift_line(int n, const std::vector<int>& word) {
    IntMat m = IntMat::identity(n);
    for (int i : word) m = mat_mul(m, lift_gen(n, i, 0, -1, 1, 0));
    return m;
}

IntMat lift_bbar(int n, const std::vector<int>& word) {
    IntMat m = IntMat::identity(n);
    for (int i : word) m = mat_mul(m, lift_gen(n, i, 0, 1, -1, 0));
    return m;
}

OracleChain param_chain(const DynkinData& D, const DoubleWord& word) {
    if (D.letter != 'A') throw ConfigError("the symbolic chain is only realized in type A");
    if (word.size() > kOracleMaxLen) throw ConfigError("word too long for the symbolic chain");
    OracleChain oc{D, word, compute_crossings(D, word), D.rank + 1, word.size(), {}};
    const int m = word.size();
    oc.Z.assign(m + 1, PolyMat::identity(oc.n, oc.nvars));
    for (int c = m; c >= 1; --c) {
        Poly t = Poly::variable(oc.nvars, c - 1);
        int letter = word.letter(c);
        if (letter > 0) {
            oc.Z[c - 1] = pm_mul(oc.Z[c], gen_z(oc.n, oc.nvars, letter, t));
        } else {
            int is = D.star[-letter - 1] + 1;
            oc.Z[c - 1] = pm_mul(gen_zbar_inv(oc.n, oc.nvars, is, t), oc.Z[c]);
        }
    }
    return oc;
}

namespace {

PolyMat apply_int_left(const IntMat& l, const PolyMat& m) {
    PolyMat r(m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            Poly s = Poly::zero(0);
            for (int k = 0; k < m.n; ++k) {
                i64 c = l.at(i, k);
                if (c == 0 || m.at(k, j).is_zero()) continue;
                s = s + m.at(k, j) * c;
            }
            r.at(i, j) = s;
        }
    return r;
}

PolyMat apply_int_right(const PolyMat& m, const IntMat& l) {
    PolyMat r(m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            Poly s = Poly::zero(0);
            for (int k = 0; k < m.n; ++k) {
                i64 c = l.at(k, j);
                if (c == 0 || m.at(i, k).is_zero()) continue;
                s = s + m.at(i, k) * c;
            }
            r.at(i, j) = s;
        }
    return r;
}

std::vector<int> inverse_reduced_word(const DynkinData& D, const WeylElt& w) {
    auto rw = reduced_word(D, inverse(w));
    return rw;
}

}  // namespace

Poly grid_minor_poly(const OracleChain& oc, int c, int k) {
    // Delta_{c,k} = minor_{|k|}( bbar(v^{-1}) * Z_c * line(w) ) with
    // (v, w) = (w_c, id) for k > 0 and (w0, u_c^{-1}) for k < 0.
    const DynkinData& D = oc.D;
    if (k > 0) {
        IntMat left = lift_bbar(oc.n, inverse_reduced_word(D, oc.cr.w[c]));
        return pm_minor(apply_int_left(left, oc.Z[c]), k);
    }
    IntMat left = lift_bbar(oc.n, inverse_reduced_word(D, D.w0));
    IntMat right = lift_line(oc.n, reduced_word(D, inverse(oc.cr.u[c])));
    return pm_minor(apply_int_right(apply_int_left(left, oc.Z[c]), right), -k);
}

std::map<int, Poly> extract_cluster_polys(const OracleChain& oc) {
    std::map<int, Poly> out;
    std::vector<int> solid = oc.cr.solid;
    std::sort(solid.rbegin(), solid.rend());
    for (int e : solid) {
        Poly delta = grid_minor_poly(oc, e - 1, oc.word.letter(e));
        for (int f : solid) {
            if (f <= e) continue;
            const Poly& xf = out.at(f);
            while (true) {
                auto q = try_divide(delta, xf);
                if (!q) break;
                delta = *q;
            }
        }
        if (delta.is_zero()) throw DivisionFailure("chamber minor vanished during extraction");
        out[e] = primitive_part(delta);
    }
    return out;
}

int OracleOrd::k_slot(int rank, int k) { return k > 0 ? k - 1 : rank + (-k) - 1; }

i64 OracleOrd::ord(int c, int k, int e_index) const {
    int slot = k_slot(rank, k);
    return data[(static_cast<size_t>(c) * 2 * rank + slot) * solid.size() + e_index];
}

OracleOrd ord_oracle(const OracleChain& oc, const std::map<int, Poly>& cluster) {
    OracleOrd t;
    t.m = oc.word.size();
    t.rank = oc.D.rank;
    t.solid = oc.cr.solid;
    t.data.assign(static_cast<size_t>(t.m + 1) * 2 * t.rank * t.solid.size(), 0);
    for (int c = 0; c <= t.m; ++c)
        for (int sk = 0; sk < 2 * t.rank; ++sk) {
            int k = sk < t.rank ? sk + 1 : -(sk - t.rank + 1);
            Poly delta = grid_minor_poly(oc, c, k);
            if (delta.is_zero()) throw FactorizationFailure("grid minor is identically zero");
            for (size_t ei = 0; ei < t.solid.size(); ++ei) {
                const Poly& xe = cluster.at(t.solid[ei]);
                int v = 0;
                while (true) {
                    auto q = try_divide(delta, xe);
                    if (!q) break;
                    delta = *q;
                    ++v;
                }
                t.data[(static_cast<size_t>(c) * 2 * t.rank + sk) * t.solid.size() + ei] = v;
            }
            if (!delta.is_monomial() || !delta.is_constant())
                throw FactorizationFailure("grid minor is not a monomial in the cluster variables");
        }
    return t;
}

}  // namespace dbraid
