#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbraid/linalg.hpp"

namespace dbraid {

// Sparse multivariate Laurent polynomials with exact integer coefficients.
// Exponents are allowed to be negative (the seed calculus needs Laurent
// monomials); the oracle itself only ever produces honest polynomials.

constexpr int kMaxVars = 16;
constexpr size_t kTermLimit = 1u << 21;

struct Mono {
    std::array<int8_t, kMaxVars> e{};

    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator<(const Mono& o) const { return e < o.e; }  // lex
};

struct Poly {
    int nvars = 0;
    // sorted by monomial, lex descending; no zero coefficients
    std::vector<std::pair<Mono, i64>> terms;

    static Poly zero(int nvars) { return Poly{nvars, {}}; }
    static Poly constant(int nvars, i64 c);
    static Poly variable(int nvars, int var, int exp = 1);  // var 0-based
    static Poly monomial(int nvars, const Mono& m, i64 c);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms.size() == 1; }
    size_t size() const { return terms.size(); }
    i64 leading_coeff() const { return terms.empty() ? 0 : terms.front().second; }

    // smallest/largest exponent of a variable over all terms (0 if absent)
    int min_exp(int var) const;
    int max_exp(int var) const;

    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }

    std::string str(const std::string& var_prefix = "t") const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, i64 c);

Poly poly_pow(const Poly& a, int k);  // k >= 0

// Exact division; nullopt when b does not divide a. Works for Laurent inputs.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);

// multiplicity of b in a (a != 0, b non-unit)
int valuation(const Poly& a, const Poly& b);

// integer content (gcd of coefficients, positive); 0 for the zero polynomial
i64 content(const Poly& a);

// divide by content and normalize the sign of the lex-leading coefficient
Poly primitive_part(const Poly& a);

// substitute variable -> polynomial
Poly substitute(const Poly& a, int var, const Poly& value);

// substitute variable -> num/den; returns (p, k) with the result equal to
// p / den^k, k = max exponent of `var` in a (requires nonnegative exponents)
std::pair<Poly, int> substitute_rational(const Poly& a, int var, const Poly& num, const Poly& den);

// equality up to a nonzero rational constant
bool proportional(const Poly& a, const Poly& b);

}  // namespace dbraid
