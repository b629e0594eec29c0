#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "dbraid/errors.hpp"

namespace dbraid {

using i64 = long long;

// Dense row-major integer matrix. Sizes here are tiny (rank <= 8 for root
// systems, a few dozen for seeds), so no effort is spent on performance.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
std::vector<i64> mat_vec(const IntMat& m, const std::vector<i64>& v);

// Inverse of an upper unitriangular integer matrix (exact, by back substitution).
IntMat unitriangular_inverse(const IntMat& m);

// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonnegative,
// zeros for the rank deficiency trimmed off).
std::vector<i64> smith_invariants(IntMat m);

// Solve sum_j x_j * basis_col_j = target over the integers, if possible.
// `basis` holds the generators as columns.
std::optional<std::vector<i64>> lattice_solve(const IntMat& basis, const std::vector<i64>& target);

// Do the columns of `a` and `b` span the same sublattice?
bool same_column_lattice(const IntMat& a, const IntMat& b);

// Exact rational number on int64. Seed data keeps numerators tiny; overflow
// is asserted in debug only.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InternalInconsistency("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& x, const Rat& y) { return Rat(x.num * y.den + y.num * x.den, x.den * y.den); }
    friend Rat operator-(const Rat& x, const Rat& y) { return Rat(x.num * y.den - y.num * x.den, x.den * y.den); }
    friend Rat operator*(const Rat& x, const Rat& y) { return Rat(x.num * y.num, x.den * y.den); }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw InternalInconsistency("rational division by zero");
        return Rat(x.num * y.den, x.den * y.num);
    }
    Rat operator-() const {
        Rat r;
        r.num = -num;
        r.den = den;
        return r;
    }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
};

inline int sgn(const Rat& r) { return r.num > 0 ? 1 : (r.num < 0 ? -1 : 0); }
inline int sgn(i64 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

}  // namespace dbraid
