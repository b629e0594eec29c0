#include "dbraid/seedbuild.hpp"

#include <algorithm>
#include <cstdlib>

#include "json.hpp"

namespace dbraid {

int Seed::solid_index(int c) const {
    auto it = std::lower_bound(solid.begin(), solid.end(), c);
    if (it == solid.end() || *it != c) throw ConfigError("crossing is not solid");
    return static_cast<int>(it - solid.begin());
}

int Seed::mut_index(int c) const {
    auto it = std::lower_bound(mut.begin(), mut.end(), c);
    if (it == mut.end() || *it != c) throw ConfigError("crossing is not mutable");
    return static_cast<int>(it - mut.begin());
}

IntMat chamber_matrix(const DynkinData& D, const DoubleWord& word, const OrdTable& ord) {
    (void)D;
    const int nJ = static_cast<int>(ord.solid.size());
    IntMat m(nJ, nJ);
    for (int ci = 0; ci < nJ; ++ci) {
        int c = ord.solid[ci];
        for (int ei = 0; ei < nJ; ++ei) m.at(ci, ei) = ord.ord(c - 1, word.letter(c), ei);
    }
    for (int i = 0; i < nJ; ++i) {
        if (m.at(i, i) != 1) throw InternalInconsistency("chamber matrix diagonal is not 1");
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) throw InternalInconsistency("chamber matrix is not unitriangular");
    }
    return m;
}

IntMat cluster_monomials(const IntMat& chamber) { return unitriangular_inverse(chamber); }

TwoFormCoeffs two_form(const DynkinData& D, const DoubleWord& word, const Crossings& cr,
                       const OrdTable& ord) {
    const int nJ = static_cast<int>(cr.solid.size());
    const int rank = D.rank;
    TwoFormCoeffs tf;
    tf.solid = cr.solid;
    tf.omega = RatMat(nJ, nJ);
    std::vector<i64> om4(static_cast<size_t>(nJ) * nJ, 0);  // 4 * Omega, exact

    std::vector<i64> P(nJ), Q(nJ);  // doubled one-form coefficients 2*L
    for (int c : cr.solid) {
        const int letter = word.letter(c);
        const int ai = std::abs(letter) - 1;
        for (int ei = 0; ei < nJ; ++ei) {
            P[ei] = Q[ei] = 0;
            for (int l = 0; l < rank; ++l) {
                i64 a = D.cartan.at(ai, l);
                if (a == 0) continue;
                int k = letter > 0 ? (l + 1) : -(l + 1);
                P[ei] += a * ord.ord(c - 1, k, ei);
                Q[ei] += a * ord.ord(c, k, ei);
            }
        }
        const i64 pref = (letter > 0 ? 1 : -1) * D.d[ai];
        for (int ei = 0; ei < nJ; ++ei)
            for (int fi = ei + 1; fi < nJ; ++fi)
                om4[static_cast<size_t>(ei) * nJ + fi] += pref * (P[ei] * Q[fi] - P[fi] * Q[ei]);
    }
    for (int ei = 0; ei < nJ; ++ei)
        for (int fi = ei + 1; fi < nJ; ++fi) {
            Rat v(om4[static_cast<size_t>(ei) * nJ + fi], 4);
            tf.omega.at(ei, fi) = v;
            tf.omega.at(fi, ei) = -v;
        }
    return tf;
}

IntMat extract_B(const DynkinData& D, const DoubleWord& word, const TwoFormCoeffs& om,
                 const std::vector<char>& frozen) {
    const int nJ = static_cast<int>(om.solid.size());
    std::vector<int> mut;
    for (int i = 0; i < nJ; ++i)
        if (!frozen[i]) mut.push_back(i);
    IntMat B(nJ, static_cast<int>(mut.size()));
    for (int ci = 0; ci < nJ; ++ci)
        for (size_t j = 0; j < mut.size(); ++j) {
            int ei = mut[j];
            if (ci == ei) continue;
            i64 de = D.d[std::abs(word.letter(om.solid[ei])) - 1];
            Rat b = om.at(ci, ei) / Rat(de);
            if (!b.is_integer())
                throw NonIntegral("exchange matrix entry (" + std::to_string(om.solid[ci]) + "," +
                                  std::to_string(om.solid[ei]) + ") is not an integer");
            B.at(ci, static_cast<int>(j)) = b.num;
        }
    // d-skew-symmetrizability of the principal part
    for (size_t i = 0; i < mut.size(); ++i)
        for (size_t j = 0; j < mut.size(); ++j) {
            i64 di = D.d[std::abs(word.letter(om.solid[mut[i]])) - 1];
            i64 dj = D.d[std::abs(word.letter(om.solid[mut[j]])) - 1];
            if (di * B.at(mut[i], static_cast<int>(j)) != -dj * B.at(mut[j], static_cast<int>(i)))
                throw InternalInconsistency("principal part is not d-skew-symmetrizable");
        }
    return B;
}

Seed build_seed(const DynkinData& D, const DoubleWord& word, GammaMemo& memo) {
    Seed s;
    s.cartan_type = D.name();
    s.word = word;
    Crossings cr = compute_crossings(D, word);
    s.solid = cr.solid;
    s.d = cr.d_of;
    s.frozen.assign(s.solid.size(), 0);
    for (size_t i = 0; i < s.solid.size(); ++i) {
        ApsData aps = compute_aps(D, word, cr, s.solid[i]);
        s.frozen[i] = aps.is_mutable ? 0 : 1;
        if (!s.frozen[i]) s.mut.push_back(s.solid[i]);
    }
    s.ord = ord_table(D, word, cr, memo);
    s.chamber = chamber_matrix(D, word, s.ord);
    s.cluster_exp = cluster_monomials(s.chamber);
    s.omega = two_form(D, word, cr, s.ord);
    s.B_ext = extract_B(D, word, s.omega, s.frozen);
    return s;
}

bool really_full_rank(const IntMat& B_ext) {
    if (B_ext.cols == 0) return true;
    auto inv = smith_invariants(B_ext);
    if (static_cast<int>(inv.size()) < B_ext.cols) return false;
    for (i64 v : inv)
        if (v != 1) return false;
    return true;
}

bool really_full_rank(const Seed& seed) { return really_full_rank(seed.B_ext); }

std::string export_seed_json(const Seed& seed) {
    using json = nlohmann::ordered_json;
    json j;
    j["cartan_type"] = seed.cartan_type;
    j["word"] = word_to_string(seed.word);
    j["solid"] = seed.solid;
    j["mutable"] = seed.mut;
    json frozen = json::array();
    for (size_t i = 0; i < seed.solid.size(); ++i)
        if (seed.frozen[i]) frozen.push_back(seed.solid[i]);
    j["frozen"] = frozen;
    j["d"] = seed.d;
    json ord = json::array();
    for (int c = 0; c <= seed.ord.m; ++c)
        for (int sk = 0; sk < 2 * seed.ord.rank; ++sk) {
            int k = sk < seed.ord.rank ? sk + 1 : -(sk - seed.ord.rank + 1);
            for (size_t ei = 0; ei < seed.solid.size(); ++ei) {
                i64 v = seed.ord.ord(c, k, static_cast<int>(ei));
                if (v != 0) ord.push_back(json::array({c, k, seed.solid[ei], v}));
            }
        }
    j["ord_table"] = ord;
    json cl = json::array();
    for (size_t e = 0; e < seed.solid.size(); ++e) {
        json row = json::array();
        for (size_t c = 0; c < seed.solid.size(); ++c)
            row.push_back(seed.cluster_exp.at(static_cast<int>(e), static_cast<int>(c)));
        cl.push_back(row);
    }
    j["cluster_in_chamber_minors"] = cl;
    // rows: mutable crossings first, then frozen, each in increasing order
    json B = json::array();
    auto emit_row = [&](int ci) {
        json row = json::array();
        for (int jj = 0; jj < seed.B_ext.cols; ++jj) row.push_back(seed.B_ext.at(ci, jj));
        B.push_back(row);
    };
    for (size_t i = 0; i < seed.solid.size(); ++i)
        if (!seed.frozen[i]) emit_row(static_cast<int>(i));
    for (size_t i = 0; i < seed.solid.size(); ++i)
        if (seed.frozen[i]) emit_row(static_cast<int>(i));
    j["B"] = B;
    return j.dump();
}

std::string export_seed_dot(const Seed& seed) {
    std::string out = "digraph seed {\n";
    for (size_t i = 0; i < seed.solid.size(); ++i) {
        out += "  x" + std::to_string(seed.solid[i]);
        out += seed.frozen[i] ? " [shape=box]" : " [shape=ellipse]";
        out += ";\n";
    }
    for (size_t ci = 0; ci < seed.solid.size(); ++ci)
        for (size_t j = 0; j < seed.mut.size(); ++j) {
            int e = seed.mut[j];
            if (seed.solid[ci] == e) continue;
            i64 b = seed.B_ext.at(static_cast<int>(ci), static_cast<int>(j));
            if (b > 0) {
                out += "  x" + std::to_string(seed.solid[ci]) + " -> x" + std::to_string(e) +
                       " [label=\"" + std::to_string(b) + "\"];\n";
            } else if (b < 0 && seed.frozen[ci]) {
                // frozen rows have no mirror column; keep the adjacency
                out += "  x" + std::to_string(e) + " -> x" + std::to_string(seed.solid[ci]) +
                       " [label=\"" + std::to_string(-b) + "\"];\n";
            }
        }
    out += "}\n";
    return out;
}

}  // namespace dbraid
