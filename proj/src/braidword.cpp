#include "dbraid/braidword.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace dbraid {

DoubleWord parse_word(const std::string& text, int rank) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    DoubleWord w;
    int v;
    while (in >> v) {
        if (v == 0 || std::abs(v) > rank)
            throw ConfigError("letter " + std::to_string(v) + " out of range for rank " + std::to_string(rank));
        w.letters.push_back(v);
    }
    if (!in.eof()) throw ConfigError("cannot parse word '" + text + "'");
    return w;
}

std::string word_to_string(const DoubleWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

WeylElt s_plus(const DynkinData& D, int i) { return i > 0 ? D.gen[i - 1] : D.id; }
WeylElt s_minus(const DynkinData& D, int i) { return i > 0 ? D.id : D.gen[-i - 1]; }

WeylElt demazure_pi(const DynkinData& D, const DoubleWord& w) {
    const int m = w.size();
    WeylElt pi = D.id;
    for (int c = m; c >= 1; --c)
        if (w.letter(c) < 0) pi = demazure_step(D, pi, -w.letter(c), Side::right);
    for (int c = 1; c <= m; ++c)
        if (w.letter(c) > 0) pi = demazure_step(D, pi, w.letter(c), Side::right);
    return pi;
}

namespace {

// the two candidates u and s^-_i u s^+_i are always Bruhat-adjacent
WeylElt flank(const DynkinData& D, const WeylElt& u, int letter) {
    return letter > 0 ? weyl_apply_simple(D, u, letter, Side::right)
                      : weyl_apply_simple(D, u, -letter, Side::left);
}

}  // namespace

int Crossings::solid_index(int c) const {
    auto it = std::lower_bound(solid.begin(), solid.end(), c);
    if (it == solid.end() || *it != c) return -1;
    return static_cast<int>(it - solid.begin());
}

Crossings compute_crossings(const DynkinData& D, const DoubleWord& word) {
    if (demazure_pi(D, word) != D.w0)
        throw BadDemazure("Demazure product of '" + word_to_string(word) + "' is not the longest element");
    const int m = word.size();
    Crossings cr;
    cr.u.assign(m + 1, D.id);
    cr.solid_at.assign(m + 1, 0);
    cr.u[m] = D.w0;
    for (int c = m; c >= 1; --c) {
        WeylElt cand = flank(D, cr.u[c], word.letter(c));
        if (std::abs(cand.len - cr.u[c].len) != 1) throw InternalInconsistency("candidates not adjacent");
        if (cand.len > cr.u[c].len) {
            cr.u[c - 1] = cr.u[c];  // solid: greedy fold stalls
            cr.solid_at[c] = 1;
        } else {
            cr.u[c - 1] = cand;
        }
    }
    if (!cr.u[0].is_identity()) throw InternalInconsistency("greedy subexpression did not reach the identity");
    cr.w.resize(m + 1);
    for (int c = 0; c <= m; ++c) cr.w[c] = weyl_mul(D, D.w0, cr.u[c]);
    for (int c = 1; c <= m; ++c)
        if (cr.solid_at[c]) {
            cr.solid.push_back(c);
            cr.d_of.push_back(D.d[std::abs(word.letter(c)) - 1]);
        }
    if (static_cast<int>(cr.solid.size()) != m - D.w0.len)
        throw InternalInconsistency("|J| != m - l(w0)");
    return cr;
}

ApsData compute_aps(const DynkinData& D, const DoubleWord& word, const Crossings& cr, int e) {
    if (cr.solid_index(e) < 0) throw ConfigError("crossing " + std::to_string(e) + " is not solid");
    const int m = word.size();
    ApsData aps;
    aps.e = e;
    aps.u.assign(m + 1, D.id);
    aps.u[m] = D.w0;
    for (int c = m; c >= 1; --c) {
        if (c > e) {
            aps.u[c - 1] = cr.u[c - 1];  // agrees with the greedy fold above e
            continue;
        }
        WeylElt cand = flank(D, aps.u[c], word.letter(c));
        bool take_longer = (c == e);
        if (take_longer)
            aps.u[c - 1] = cand.len > aps.u[c].len ? cand : aps.u[c];
        else
            aps.u[c - 1] = cand.len < aps.u[c].len ? cand : aps.u[c];
    }
    aps.is_mutable = aps.u[0].is_identity();
    return aps;
}

DoubleWord op_word(const DynkinData& D, const DoubleWord& w) {
    DoubleWord r;
    r.letters.reserve(w.letters.size());
    for (int v : w.letters) {
        int abs_star = D.star[std::abs(v) - 1] + 1;
        r.letters.push_back(v > 0 ? -abs_star : abs_star);
    }
    return r;
}

DoubleWord suffix(const DoubleWord& w, int c) {
    DoubleWord r;
    r.letters.assign(w.letters.begin() + c, w.letters.end());
    return r;
}

}  // namespace dbraid
