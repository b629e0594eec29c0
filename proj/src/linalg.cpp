#include "dbraid/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace dbraid {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

std::vector<i64> mat_vec(const IntMat& m, const std::vector<i64>& v) {
    assert(static_cast<int>(v.size()) == m.cols);
    std::vector<i64> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

IntMat unitriangular_inverse(const IntMat& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 1) throw InternalInconsistency("matrix is not unitriangular");
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) throw InternalInconsistency("matrix is not unitriangular");
    }
    IntMat inv = IntMat::identity(n);
    // solve M * inv = I column by column, top entries last
    for (int c = 0; c < n; ++c) {
        for (int r = n - 1; r >= 0; --r) {
            i64 s = (r == c) ? 1 : 0;
            for (int k = r + 1; k < n; ++k) s -= m.at(r, k) * inv.at(k, c);
            inv.at(r, c) = s;
        }
    }
    return inv;
}

namespace {

void swap_rows(IntMat& m, int r1, int r2) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}
void swap_cols(IntMat& m, int c1, int c2) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

}  // namespace

std::vector<i64> smith_invariants(IntMat m) {
    const int n = std::min(m.rows, m.cols);
    std::vector<i64> inv;
    int t = 0;
    while (t < n) {
        // find a nonzero pivot in the remaining block
        int pr = -1, pc = -1;
        i64 best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                i64 v = m.at(i, j) < 0 ? -m.at(i, j) : m.at(i, j);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                i64 q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    swap_rows(m, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                i64 q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    swap_cols(m, t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // enforce the divisibility chain
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            i64 a = m.at(i, i), b = m.at(j, j);
            if (b % a != 0) {
                i64 g = std::gcd(std::abs(a), std::abs(b));
                i64 l = std::abs(a / g * b);
                m.at(i, i) = g;
                m.at(j, j) = l;
            }
        }
    for (int i = 0; i < t; ++i) inv.push_back(std::abs(m.at(i, i)));
    std::sort(inv.begin(), inv.end());
    return inv;
}

namespace {

// Column-style Hermite reduction with transform tracking: returns H = B * U
// (U unimodular), H in column echelon form, plus the pivot row of each column.
struct Hnf {
    IntMat h, u;
    std::vector<int> pivot_row;  // per column of h, -1 for zero columns
};

Hnf hermite_cols(const IntMat& b) {
    Hnf r;
    r.h = b;
    r.u = IntMat::identity(b.cols);
    int col = 0;
    r.pivot_row.assign(b.cols, -1);
    for (int row = 0; row < b.rows && col < b.cols; ++row) {
        // gcd out everything in this row to a single column
        while (true) {
            int nz = -1;
            for (int j = col; j < r.h.cols; ++j)
                if (r.h.at(row, j) != 0) {
                    if (nz < 0 || std::abs(r.h.at(row, j)) < std::abs(r.h.at(row, nz))) nz = j;
                }
            if (nz < 0) break;
            swap_cols(r.h, col, nz);
            swap_cols(r.u, col, nz);
            bool reduced = true;
            for (int j = col + 1; j < r.h.cols; ++j) {
                if (r.h.at(row, j) == 0) continue;
                i64 q = r.h.at(row, j) / r.h.at(row, col);
                for (int i = 0; i < r.h.rows; ++i) r.h.at(i, j) -= q * r.h.at(i, col);
                for (int i = 0; i < r.u.rows; ++i) r.u.at(i, j) -= q * r.u.at(i, col);
                if (r.h.at(row, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (r.h.at(row, col) != 0) {
            if (r.h.at(row, col) < 0) {
                for (int i = 0; i < r.h.rows; ++i) r.h.at(i, col) = -r.h.at(i, col);
                for (int i = 0; i < r.u.rows; ++i) r.u.at(i, col) = -r.u.at(i, col);
            }
            r.pivot_row[col] = row;
            ++col;
        }
    }
    r.h.cols = col;  // logical truncation: only first `col` columns meaningful
    return r;
}

}  // namespace

std::optional<std::vector<i64>> lattice_solve(const IntMat& basis, const std::vector<i64>& target) {
    assert(static_cast<int>(target.size()) == basis.rows);
    Hnf hh = hermite_cols(basis);
    std::vector<i64> rem = target;
    std::vector<i64> y(basis.cols, 0);
    for (int j = 0; j < hh.h.cols; ++j) {
        int pr = hh.pivot_row[j];
        i64 p = hh.h.at(pr, j);
        if (rem[pr] % p != 0) return std::nullopt;
        i64 q = rem[pr] / p;
        y[j] = q;
        for (int i = 0; i < basis.rows; ++i) rem[i] -= q * hh.h.at(i, j);
    }
    for (i64 v : rem)
        if (v != 0) return std::nullopt;
    // x = U * y
    std::vector<i64> x(basis.cols, 0);
    for (int i = 0; i < basis.cols; ++i)
        for (int j = 0; j < basis.cols; ++j) x[i] += hh.u.at(i, j) * y[j];
    return x;
}

bool same_column_lattice(const IntMat& a, const IntMat& b) {
    if (a.rows != b.rows) return false;
    for (int j = 0; j < b.cols; ++j) {
        std::vector<i64> col(b.rows);
        for (int i = 0; i < b.rows; ++i) col[i] = b.at(i, j);
        if (!lattice_solve(a, col)) return false;
    }
    for (int j = 0; j < a.cols; ++j) {
        std::vector<i64> col(a.rows);
        for (int i = 0; i < a.rows; ++i) col[i] = a.at(i, j);
        if (!lattice_solve(b, col)) return false;
    }
    return true;
}

}  // namespace dbraid
