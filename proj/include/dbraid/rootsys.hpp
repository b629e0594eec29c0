#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dbraid/linalg.hpp"

namespace dbraid {

// Conventions, fixed once for the whole project:
//   * Cartan matrix a[i][j] = <alpha_i, alpha_j^vee>, so s_i(alpha_j) =
//     alpha_j - a[j][i] alpha_i and s_i(alpha_j^vee) = alpha_j^vee - a[i][j] alpha_i^vee.
//   * Nodes are numbered as in Bourbaki. 1-based in the public API, 0-based in storage.
//   * d_i are the minimal positive symmetrizers (d_i a_ij = d_j a_ji):
//     all 1 in ADE; B_n: (1,..,1,2); C_n: (2,..,2,1); F_4: (1,1,2,2); G_2: (3,1).
//     B_2 has a_12 = -2, G_2 has a_12 = -1, a_21 = -3 (node 1 short).

constexpr int kMaxRank = 8;

// A Weyl group element, stored as its action on the root lattice in the
// simple-root basis, together with the inverse and the contragredient
// (coroot-lattice) actions so that ascents/descents on either side and
// cocharacter actions are all table lookups. `len` is maintained
// incrementally by generator multiplication.
struct WeylElt {
    int n = 0;
    int len = 0;
    std::array<int16_t, kMaxRank * kMaxRank> root{};         // action on alpha_j
    std::array<int16_t, kMaxRank * kMaxRank> root_inv{};     // w^{-1} on alpha_j
    std::array<int16_t, kMaxRank * kMaxRank> coroot{};       // action on alpha_j^vee
    std::array<int16_t, kMaxRank * kMaxRank> coroot_inv{};   // w^{-1} on alpha_j^vee

    bool operator==(const WeylElt& o) const { return n == o.n && root == o.root; }
    bool operator!=(const WeylElt& o) const { return !(*this == o); }
    bool is_identity() const { return len == 0; }
};

struct WeylHash {
    size_t operator()(const WeylElt& w) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < w.n * w.n; ++i) {
            h ^= static_cast<uint64_t>(static_cast<uint16_t>(w.root[i]));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// Integer vector in the simple-coroot basis. Coordinate k equals the pairing
// with the fundamental weight omega_k.
using Cochar = std::vector<i64>;

enum class Side { left, right };

struct DynkinData {
    char letter = 'A';
    int rank = 0;
    IntMat cartan;            // a[i][j], 0-based
    std::vector<i64> d;       // minimal symmetrizers
    IntMat cox_m;             // orders m_ij of s_i s_j
    std::vector<int> star;    // 0-based involution i |-> i*
    WeylElt id;
    WeylElt w0;
    int n_pos_roots = 0;
    std::vector<std::array<int16_t, kMaxRank>> pos_roots;
    std::vector<WeylElt> gen;  // simple reflections, 0-based

    std::string name() const { return std::string(1, letter) + std::to_string(rank); }
    i64 a(int i, int j) const { return cartan.at(i, j); }   // 0-based
    int star1(int i) const { return star[i - 1] + 1; }      // 1-based
};

// type strings like "A3", "g2" (case-insensitive); throws ConfigError
DynkinData build_dynkin(std::string_view type_str);
DynkinData build_dynkin(char letter, int rank);

// i is 1-based everywhere below
WeylElt weyl_apply_simple(const DynkinData& D, const WeylElt& w, int i, Side side);
WeylElt weyl_mul(const DynkinData& D, const WeylElt& u, const WeylElt& v);
WeylElt inverse(const WeylElt& w);
int length(const DynkinData& D, const WeylElt& w);  // recount from scratch

bool is_right_ascent(const DynkinData& D, const WeylElt& w, int i);
bool is_left_ascent(const DynkinData& D, const WeylElt& w, int i);

// max(w, w s_i) resp. max(w, s_i w)
WeylElt demazure_step(const DynkinData& D, const WeylElt& w, int i, Side side);
// Demazure product of two group elements
WeylElt demazure_product(const DynkinData& D, const WeylElt& u, const WeylElt& v);

// any reduced word, built by peeling smallest left descents
std::vector<int> reduced_word(const DynkinData& D, const WeylElt& w);

Cochar act_coweight(const DynkinData& D, const WeylElt& w, const Cochar& v);
Cochar act_coweight_inv(const DynkinData& D, const WeylElt& w, const Cochar& v);
Cochar star_coweight(const DynkinData& D, const Cochar& v);  // v |-> -w0 . v
WeylElt star_elt(const DynkinData& D, const WeylElt& w);     // w0 w w0

Cochar simple_coroot(const DynkinData& D, int i);  // 1-based
Cochar zero_cochar(const DynkinData& D);

}  // namespace dbraid
