#include "dbraid/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dbraid {

namespace {

int idx(int r, int c) { return r * kMaxRank + c; }

// left multiply by s_i (0-based): only row i changes in the root action,
// M'_{i,j} = M_{i,j} - sum_l a_{l,i} M_{l,j}
void lmul_root(const DynkinData& D, std::array<int16_t, kMaxRank * kMaxRank>& m, int i, bool dual) {
    const int n = D.rank;
    for (int j = 0; j < n; ++j) {
        i64 s = 0;
        for (int l = 0; l < n; ++l) {
            i64 a = dual ? D.cartan.at(i, l) : D.cartan.at(l, i);
            if (a != 0) s += a * m[idx(l, j)];
        }
        m[idx(i, j)] = static_cast<int16_t>(m[idx(i, j)] - s);
    }
}

// right multiply by s_i: column updates, col_j -= a_{j,i} col_i for j != i,
// col_i = -col_i (combined: new col_j = col_j - a_{j,i} col_i, including j=i
// since a_{i,i} = 2).
void rmul_root(const DynkinData& D, std::array<int16_t, kMaxRank * kMaxRank>& m, int i, bool dual) {
    const int n = D.rank;
    std::array<i64, kMaxRank> coli;
    for (int r = 0; r < n; ++r) coli[r] = m[idx(r, i)];
    for (int j = 0; j < n; ++j) {
        i64 a = dual ? D.cartan.at(i, j) : D.cartan.at(j, i);
        if (a == 0) continue;
        for (int r = 0; r < n; ++r) m[idx(r, j)] = static_cast<int16_t>(m[idx(r, j)] - a * coli[r]);
    }
}

int column_sign(const WeylElt& w, const std::array<int16_t, kMaxRank * kMaxRank>& m, int i) {
    for (int r = 0; r < w.n; ++r) {
        int16_t v = m[idx(r, i)];
        if (v > 0) return 1;
        if (v < 0) return -1;
    }
    throw InternalInconsistency("zero column in Weyl matrix");
}

}  // namespace

bool is_right_ascent(const DynkinData& D, const WeylElt& w, int i) {
    (void)D;
    return column_sign(w, w.root, i - 1) > 0;
}

bool is_left_ascent(const DynkinData& D, const WeylElt& w, int i) {
    (void)D;
    return column_sign(w, w.root_inv, i - 1) > 0;
}

WeylElt weyl_apply_simple(const DynkinData& D, const WeylElt& w, int i, Side side) {
    WeylElt r = w;
    const int i0 = i - 1;
    if (side == Side::right) {
        r.len += is_right_ascent(D, w, i) ? 1 : -1;
        rmul_root(D, r.root, i0, false);
        lmul_root(D, r.root_inv, i0, false);
        rmul_root(D, r.coroot, i0, true);
        lmul_root(D, r.coroot_inv, i0, true);
    } else {
        r.len += is_left_ascent(D, w, i) ? 1 : -1;
        lmul_root(D, r.root, i0, false);
        rmul_root(D, r.root_inv, i0, false);
        lmul_root(D, r.coroot, i0, true);
        rmul_root(D, r.coroot_inv, i0, true);
    }
    return r;
}

WeylElt weyl_mul(const DynkinData& D, const WeylElt& u, const WeylElt& v) {
    const int n = D.rank;
    WeylElt r;
    r.n = n;
    auto mul = [n](const std::array<int16_t, kMaxRank * kMaxRank>& x,
                   const std::array<int16_t, kMaxRank * kMaxRank>& y,
                   std::array<int16_t, kMaxRank * kMaxRank>& out) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                i64 s = 0;
                for (int k = 0; k < n; ++k) s += static_cast<i64>(x[idx(i, k)]) * y[idx(k, j)];
                out[idx(i, j)] = static_cast<int16_t>(s);
            }
    };
    mul(u.root, v.root, r.root);
    mul(v.root_inv, u.root_inv, r.root_inv);
    mul(u.coroot, v.coroot, r.coroot);
    mul(v.coroot_inv, u.coroot_inv, r.coroot_inv);
    r.len = length(D, r);
    return r;
}

WeylElt inverse(const WeylElt& w) {
    WeylElt r = w;
    std::swap(r.root, r.root_inv);
    std::swap(r.coroot, r.coroot_inv);
    return r;
}

int length(const DynkinData& D, const WeylElt& w) {
    int cnt = 0;
    for (const auto& root : D.pos_roots) {
        i64 s = 0;
        for (int r = 0; r < D.rank && s == 0; ++r) {
            i64 v = 0;
            for (int c = 0; c < D.rank; ++c) v += static_cast<i64>(w.root[idx(r, c)]) * root[c];
            s = v;
        }
        if (s < 0) ++cnt;
    }
    return cnt;
}

WeylElt demazure_step(const DynkinData& D, const WeylElt& w, int i, Side side) {
    bool up = (side == Side::right) ? is_right_ascent(D, w, i) : is_left_ascent(D, w, i);
    return up ? weyl_apply_simple(D, w, i, side) : w;
}

std::vector<int> reduced_word(const DynkinData& D, const WeylElt& w) {
    std::vector<int> out;
    WeylElt cur = w;
    while (cur.len > 0) {
        int i = 1;
        for (; i <= D.rank; ++i)
            if (!is_left_ascent(D, cur, i)) break;
        if (i > D.rank) throw InternalInconsistency("no descent on a non-identity element");
        out.push_back(i);
        cur = weyl_apply_simple(D, cur, i, Side::left);
    }
    return out;
}

WeylElt demazure_product(const DynkinData& D, const WeylElt& u, const WeylElt& v) {
    WeylElt r = u;
    for (int i : reduced_word(D, v)) r = demazure_step(D, r, i, Side::right);
    return r;
}

Cochar act_coweight(const DynkinData& D, const WeylElt& w, const Cochar& v) {
    Cochar r(D.rank, 0);
    for (int i = 0; i < D.rank; ++i)
        for (int j = 0; j < D.rank; ++j) r[i] += static_cast<i64>(w.coroot[idx(i, j)]) * v[j];
    return r;
}

Cochar act_coweight_inv(const DynkinData& D, const WeylElt& w, const Cochar& v) {
    Cochar r(D.rank, 0);
    for (int i = 0; i < D.rank; ++i)
        for (int j = 0; j < D.rank; ++j) r[i] += static_cast<i64>(w.coroot_inv[idx(i, j)]) * v[j];
    return r;
}

Cochar star_coweight(const DynkinData& D, const Cochar& v) {
    Cochar r = act_coweight(D, D.w0, v);
    for (auto& x : r) x = -x;
    return r;
}

WeylElt star_elt(const DynkinData& D, const WeylElt& w) {
    return weyl_mul(D, D.w0, weyl_mul(D, w, D.w0));
}

Cochar simple_coroot(const DynkinData& D, int i) {
    Cochar v(D.rank, 0);
    v[i - 1] = 1;
    return v;
}

Cochar zero_cochar(const DynkinData& D) { return Cochar(D.rank, 0); }

namespace {

int expected_pos_roots(char t, int n) {
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

IntMat cartan_matrix(char t, int n) {
    IntMat a(n, n);
    for (int i = 0; i < n; ++i) a.at(i, i) = 2;
    auto link = [&](int i, int j) { a.at(i, j) = -1; a.at(j, i) = -1; };
    switch (t) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a.at(n - 2, n - 1) = -2;
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a.at(n - 1, n - 2) = -2;
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            a.at(2, 3) = -1;  // already set by chain, keep explicit
            a.at(1, 3) = -1;
            a.at(3, 1) = -1;
            a.at(1, 2) = 0;
            a.at(2, 1) = 0;
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a.at(1, 2) = -2;
            break;
        case 'G':
            a.at(0, 1) = -1;
            a.at(1, 0) = -3;
            break;
    }
    return a;
}

std::vector<i64> symmetrizers(char t, int n) {
    std::vector<i64> d(n, 1);
    if (t == 'B') d[n - 1] = 2;
    if (t == 'C') {
        for (int i = 0; i + 1 < n; ++i) d[i] = 2;
    }
    if (t == 'F') d[2] = d[3] = 2;
    if (t == 'G') d[0] = 3;
    return d;
}

}  // namespace

DynkinData build_dynkin(char letter, int rank) {
    letter = static_cast<char>(std::toupper(letter));
    bool ok = (letter == 'A' && rank >= 1) || (letter == 'B' && rank >= 2) || (letter == 'C' && rank >= 2) ||
              (letter == 'D' && rank >= 4) || (letter == 'E' && rank >= 6 && rank <= 8) ||
              (letter == 'F' && rank == 4) || (letter == 'G' && rank == 2);
    if (!ok || rank > kMaxRank)
        throw ConfigError("unsupported Dynkin type " + std::string(1, letter) + std::to_string(rank));

    DynkinData D;
    D.letter = letter;
    D.rank = rank;
    D.cartan = cartan_matrix(letter, rank);
    D.d = symmetrizers(letter, rank);

    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (D.d[i] * D.cartan.at(i, j) != D.d[j] * D.cartan.at(j, i))
                throw InternalInconsistency("symmetrizer mismatch in Cartan data");

    D.cox_m = IntMat(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) {
                D.cox_m.at(i, j) = 1;
                continue;
            }
            i64 p = D.cartan.at(i, j) * D.cartan.at(j, i);
            i64 m = p == 0 ? 2 : (p == 1 ? 3 : (p == 2 ? 4 : 6));
            if (p > 3) throw InternalInconsistency("Cartan product out of range");
            D.cox_m.at(i, j) = m;
        }

    // positive roots by closing the simple roots under simple reflections
    std::set<std::array<int16_t, kMaxRank>> pos;
    std::vector<std::array<int16_t, kMaxRank>> queue;
    for (int i = 0; i < rank; ++i) {
        std::array<int16_t, kMaxRank> e{};
        e[i] = 1;
        pos.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            // s_i(v) = v - <v, alpha_i^vee> alpha_i, <alpha_j, alpha_i^vee> = a_{j,i}
            i64 pair = 0;
            for (int j = 0; j < rank; ++j) pair += D.cartan.at(j, i) * v[j];
            auto w = v;
            w[i] = static_cast<int16_t>(w[i] - pair);
            bool positive = false, negative = false;
            for (int j = 0; j < rank; ++j) {
                if (w[j] > 0) positive = true;
                if (w[j] < 0) negative = true;
            }
            if (negative && positive) throw InternalInconsistency("mixed-sign root");
            if (negative) continue;
            if (pos.insert(w).second) queue.push_back(w);
        }
    }
    D.pos_roots.assign(pos.begin(), pos.end());
    D.n_pos_roots = static_cast<int>(D.pos_roots.size());
    if (D.n_pos_roots != expected_pos_roots(letter, rank))
        throw InternalInconsistency("unexpected number of positive roots");

    // identity and generators
    D.id.n = rank;
    for (int i = 0; i < rank; ++i) {
        D.id.root[idx(i, i)] = 1;
        D.id.root_inv[idx(i, i)] = 1;
        D.id.coroot[idx(i, i)] = 1;
        D.id.coroot_inv[idx(i, i)] = 1;
    }
    D.gen.resize(rank);
    for (int i = 1; i <= rank; ++i) D.gen[i - 1] = weyl_apply_simple(D, D.id, i, Side::right);

    // longest element by climbing ascents
    WeylElt w = D.id;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= rank; ++i)
            if (is_right_ascent(D, w, i)) {
                w = weyl_apply_simple(D, w, i, Side::right);
                moved = true;
                break;
            }
    }
    D.w0 = w;
    if (D.w0.len != D.n_pos_roots) throw InternalInconsistency("longest element has wrong length");

    // star: w0(alpha_j) = -alpha_{j*}
    D.star.assign(rank, -1);
    for (int j = 0; j < rank; ++j) {
        int target = -1;
        for (int r = 0; r < rank; ++r) {
            int16_t v = D.w0.root[idx(r, j)];
            if (v == 0) continue;
            if (v != -1 || target != -1) throw InternalInconsistency("w0 column is not a negative simple root");
            target = r;
        }
        D.star[j] = target;
    }
    for (int j = 0; j < rank; ++j)
        if (D.star[D.star[j]] != j) throw InternalInconsistency("star is not an involution");

    return D;
}

DynkinData build_dynkin(std::string_view type_str) {
    std::string s;
    for (char c : type_str)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw ConfigError("cannot parse Dynkin type '" + std::string(type_str) + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ConfigError("cannot parse Dynkin type '" + std::string(type_str) + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    return build_dynkin(s[0], rank);
}

}  // namespace dbraid
