#include "doctest.h"

#include "dbraid/linalg.hpp"

using namespace dbraid;

TEST_CASE("unitriangular inverse") {
    IntMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 1) = 1;
    IntMat inv = unitriangular_inverse(m);
    CHECK(inv.at(0, 0) == 1);
    CHECK(inv.at(0, 1) == -1);
    CHECK(inv.at(1, 1) == 1);
    CHECK(mat_mul(m, inv) == IntMat::identity(2));
}

TEST_CASE("smith invariants") {
    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 6;
    auto inv = smith_invariants(m);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 6);

    IntMat b(3, 1);
    b.at(0, 0) = 0;
    b.at(1, 0) = 1;
    b.at(2, 0) = 0;
    auto i2 = smith_invariants(b);
    REQUIRE(i2.size() == 1);
    CHECK(i2[0] == 1);

    IntMat c(2, 2);
    c.at(0, 0) = 4;
    c.at(0, 1) = 6;
    c.at(1, 0) = 0;
    c.at(1, 1) = 4;
    auto i3 = smith_invariants(c);  // det 16, gcd of entries 2
    REQUIRE(i3.size() == 2);
    CHECK(i3[0] * i3[1] == 16);
    CHECK(i3[0] == 2);
}

TEST_CASE("lattice solve") {
    IntMat basis(3, 2);
    basis.at(0, 0) = 2;
    basis.at(1, 1) = 3;
    auto sol = lattice_solve(basis, {4, 3, 0});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);
    CHECK(!lattice_solve(basis, {1, 0, 0}).has_value());
    CHECK(!lattice_solve(basis, {0, 0, 1}).has_value());
}

TEST_CASE("rationals") {
    Rat a(1, 2), b(1, 3);
    CHECK((a + b) == Rat(5, 6));
    CHECK((a * b) == Rat(1, 6));
    CHECK((a - a).is_zero());
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(4, -8) == Rat(-1, 2));
}
