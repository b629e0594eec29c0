#include "doctest.h"

#include <set>

#include "dbraid/rootsys.hpp"

using namespace dbraid;

namespace {

// enumerate the full group by BFS on right multiplication
size_t group_order(const DynkinData& D) {
    std::set<std::vector<int16_t>> seen;
    std::vector<WeylElt> queue{D.id};
    auto key = [&](const WeylElt& w) {
        return std::vector<int16_t>(w.root.begin(), w.root.begin() + D.rank * kMaxRank);
    };
    seen.insert(key(D.id));
    while (!queue.empty()) {
        WeylElt w = queue.back();
        queue.pop_back();
        for (int i = 1; i <= D.rank; ++i) {
            WeylElt v = weyl_apply_simple(D, w, i, Side::right);
            if (seen.insert(key(v)).second) queue.push_back(v);
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("cartan data pinning") {
    auto A1 = build_dynkin("A1");
    CHECK(A1.a(0, 0) == 2);
    CHECK(A1.d == std::vector<i64>{1});
    CHECK(A1.star1(1) == 1);
    CHECK(A1.w0 == A1.gen[0]);

    auto G2 = build_dynkin("G2");
    CHECK(G2.a(0, 1) == -1);
    CHECK(G2.a(1, 0) == -3);
    CHECK(G2.d == std::vector<i64>{3, 1});
    CHECK(G2.cox_m.at(0, 1) == 6);
    CHECK(G2.n_pos_roots == 6);

    auto B2 = build_dynkin("B2");
    CHECK(B2.a(0, 1) == -2);
    CHECK(B2.a(1, 0) == -1);
    CHECK(B2.d == std::vector<i64>{1, 2});
    auto C2 = build_dynkin("c2");
    CHECK(C2.a(0, 1) == -1);
    CHECK(C2.a(1, 0) == -2);
    CHECK(C2.d == std::vector<i64>{2, 1});

    auto F4 = build_dynkin("F4");
    CHECK(F4.a(1, 2) == -2);
    CHECK(F4.a(2, 1) == -1);
    CHECK(F4.d == std::vector<i64>{1, 1, 2, 2});
    CHECK(F4.n_pos_roots == 24);

    auto A2 = build_dynkin("A2");
    CHECK(A2.star1(1) == 2);
    CHECK(A2.star1(2) == 1);

    auto E6 = build_dynkin("E6");
    CHECK(E6.n_pos_roots == 36);
    CHECK(E6.star1(1) == 6);
    CHECK(E6.star1(3) == 5);
    CHECK(E6.star1(2) == 2);
    CHECK(E6.star1(4) == 4);

    auto D4 = build_dynkin("D4");
    CHECK(D4.n_pos_roots == 12);
    CHECK(D4.star1(1) == 1);
    CHECK(D4.star1(3) == 3);

    CHECK_THROWS_AS(build_dynkin("D3"), ConfigError);
    CHECK_THROWS_AS(build_dynkin("H3"), ConfigError);
    CHECK_THROWS_AS(build_dynkin("B1"), ConfigError);
    CHECK_THROWS_AS(build_dynkin("E9"), ConfigError);
}

TEST_CASE("group orders") {
    CHECK(group_order(build_dynkin("A2")) == 6);
    CHECK(group_order(build_dynkin("B2")) == 8);
    CHECK(group_order(build_dynkin("G2")) == 12);
    CHECK(group_order(build_dynkin("A3")) == 24);
    CHECK(group_order(build_dynkin("D4")) == 192);
}

TEST_CASE("lengths and ascents") {
    auto A2 = build_dynkin("A2");
    CHECK(A2.id.len == 0);
    CHECK(A2.w0.len == 3);
    CHECK(length(A2, A2.w0) == 3);
    WeylElt s1 = A2.gen[0];
    WeylElt s1s2 = weyl_apply_simple(A2, s1, 2, Side::right);
    CHECK(s1s2.len == 2);
    CHECK(length(A2, s1s2) == 2);
    CHECK(is_right_ascent(A2, s1s2, 1));
    CHECK(!is_right_ascent(A2, s1, 1));
    CHECK(is_right_ascent(A2, A2.id, 1));
    WeylElt s121 = weyl_apply_simple(A2, s1s2, 1, Side::right);
    CHECK(s121 == A2.w0);
    CHECK(weyl_apply_simple(A2, s121, 1, Side::right).len == 2);

    auto G2 = build_dynkin("G2");
    CHECK(G2.w0.len == 6);
    auto A1 = build_dynkin("A1");
    CHECK(A1.id.len == 0);
}

TEST_CASE("demazure steps") {
    auto A2 = build_dynkin("A2");
    WeylElt s1 = A2.gen[0];
    CHECK(demazure_step(A2, s1, 1, Side::right) == s1);
    WeylElt s1s2 = weyl_apply_simple(A2, s1, 2, Side::right);
    CHECK(demazure_step(A2, s1, 2, Side::right) == s1s2);
    CHECK(demazure_step(A2, A2.w0, 2, Side::right) == A2.w0);
    // idempotence
    for (int i = 1; i <= 2; ++i) {
        WeylElt once = demazure_step(A2, s1s2, i, Side::right);
        CHECK(demazure_step(A2, once, i, Side::right) == once);
    }
    // element-level demazure product
    CHECK(demazure_product(A2, s1s2, s1s2) == A2.w0);
    CHECK(demazure_product(A2, A2.id, A2.w0) == A2.w0);
}

TEST_CASE("coweight actions") {
    auto A1 = build_dynkin("A1");
    CHECK(act_coweight(A1, A1.gen[0], simple_coroot(A1, 1)) == Cochar{-1});

    auto A2 = build_dynkin("A2");
    // s_2 alpha_1^vee = alpha_1^vee + alpha_2^vee
    CHECK(act_coweight(A2, A2.gen[1], simple_coroot(A2, 1)) == Cochar{1, 1});
    // w0 alpha_1^vee = -alpha_2^vee
    CHECK(act_coweight(A2, A2.w0, simple_coroot(A2, 1)) == Cochar{0, -1});
    CHECK(star_coweight(A2, simple_coroot(A2, 1)) == simple_coroot(A2, 2));
    CHECK(star_coweight(A1, simple_coroot(A1, 1)) == simple_coroot(A1, 1));

    auto A3 = build_dynkin("A3");
    Cochar v{1, 1, 0};
    CHECK(star_coweight(A3, v) == Cochar{0, 1, 1});

    // action respects inverses
    auto B2 = build_dynkin("B2");
    WeylElt w = weyl_apply_simple(B2, B2.gen[0], 2, Side::right);
    Cochar x{2, -1};
    CHECK(act_coweight_inv(B2, w, act_coweight(B2, w, x)) == x);
}

TEST_CASE("reduced words and star element") {
    auto A3 = build_dynkin("A3");
    auto rw = reduced_word(A3, A3.w0);
    CHECK(static_cast<int>(rw.size()) == A3.w0.len);
    WeylElt rebuilt = A3.id;  // w = s_{j_1} s_{j_2} ... s_{j_l}
    for (int i : rw) rebuilt = weyl_apply_simple(A3, rebuilt, i, Side::right);
    CHECK(rebuilt == A3.w0);

    CHECK(star_elt(A3, A3.gen[0]) == A3.gen[2]);
    CHECK(star_elt(A3, A3.gen[1]) == A3.gen[1]);
}

TEST_CASE("ascent dichotomy") {
    auto B2 = build_dynkin("B2");
    std::vector<WeylElt> all{B2.id};
    for (int a = 0; a < 3; ++a) {
        auto cur = all;
        for (const auto& w : cur)
            for (int i = 1; i <= 2; ++i) all.push_back(weyl_apply_simple(B2, w, i, Side::right));
    }
    for (const auto& w : all)
        for (int i = 1; i <= 2; ++i) {
            WeylElt ws = weyl_apply_simple(B2, w, i, Side::right);
            CHECK(is_right_ascent(B2, w, i) != is_right_ascent(B2, ws, i));
            CHECK(length(B2, w) == w.len);
        }
}
