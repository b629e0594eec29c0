#include "dbraid/poly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace dbraid {

namespace {

struct MonoHash {
    size_t operator()(const Mono& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int8_t v : m.e) {
            h ^= static_cast<uint8_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// terms stored lex-descending
bool term_order(const std::pair<Mono, i64>& a, const std::pair<Mono, i64>& b) { return b.first < a.first; }

Poly from_map(int nvars, std::unordered_map<Mono, i64, MonoHash>&& acc) {
    Poly r;
    r.nvars = nvars;
    r.terms.reserve(acc.size());
    for (auto& kv : acc)
        if (kv.second != 0) r.terms.emplace_back(kv.first, kv.second);
    std::sort(r.terms.begin(), r.terms.end(), term_order);
    return r;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int8_t>(a.e[i] + b.e[i]);
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int8_t>(a.e[i] - b.e[i]);
    return r;
}

}  // namespace

Poly Poly::constant(int nvars, i64 c) {
    Poly r;
    r.nvars = nvars;
    if (c != 0) r.terms.emplace_back(Mono{}, c);
    return r;
}

Poly Poly::variable(int nvars, int var, int exp) {
    Mono m;
    m.e[var] = static_cast<int8_t>(exp);
    return monomial(nvars, m, 1);
}

Poly Poly::monomial(int nvars, const Mono& m, i64 c) {
    Poly r;
    r.nvars = nvars;
    if (c != 0) r.terms.emplace_back(m, c);
    return r;
}

bool Poly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms[0].first == Mono{});
}

int Poly::min_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms) {
        if (first || t.first.e[var] < m) m = t.first.e[var];
        first = false;
    }
    return m;
}

int Poly::max_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms) {
        if (first || t.first.e[var] > m) m = t.first.e[var];
        first = false;
    }
    return m;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.nvars = std::max(a.nvars, b.nvars);
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && b.terms[j].first < a.terms[i].first)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || a.terms[i].first < b.terms[j].first) {
            r.terms.push_back(b.terms[j++]);
        } else {
            i64 c = a.terms[i].second + b.terms[j].second;
            if (c != 0) r.terms.emplace_back(a.terms[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, i64 c) {
    if (c == 0) return Poly::zero(a.nvars);
    Poly r = a;
    for (auto& t : r.terms) t.second *= c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(std::max(a.nvars, b.nvars));
    std::unordered_map<Mono, i64, MonoHash> acc;
    acc.reserve(a.terms.size() * 2);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc[mono_mul(ta.first, tb.first)] += ta.second * tb.second;
    if (acc.size() > kTermLimit) throw DivisionFailure("polynomial term limit exceeded");
    return from_map(std::max(a.nvars, b.nvars), std::move(acc));
}

Poly poly_pow(const Poly& a, int k) {
    Poly r = Poly::constant(a.nvars, 1);
    Poly base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionFailure("division by zero polynomial");
    const int nv = std::max(a.nvars, b.nvars);
    if (a.is_zero()) return Poly::zero(nv);
    // clear Laurent shifts
    Mono shift_a, shift_b;
    for (int v = 0; v < kMaxVars; ++v) {
        shift_a.e[v] = static_cast<int8_t>(-std::min(0, a.min_exp(v)));
        shift_b.e[v] = static_cast<int8_t>(-std::min(0, b.min_exp(v)));
    }
    Poly num = a, den = b;
    for (auto& t : num.terms) t.first = mono_mul(t.first, shift_a);
    for (auto& t : den.terms) t.first = mono_mul(t.first, shift_b);
    std::sort(num.terms.begin(), num.terms.end(), term_order);
    std::sort(den.terms.begin(), den.terms.end(), term_order);

    Poly q = Poly::zero(nv);
    Poly r = num;
    const Mono& ltd = den.terms.front().first;
    const i64 lcd = den.terms.front().second;
    while (!r.is_zero()) {
        const Mono& ltr = r.terms.front().first;
        Mono t = mono_div(ltr, ltd);
        for (int v = 0; v < kMaxVars; ++v)
            if (t.e[v] < 0) return std::nullopt;
        if (r.terms.front().second % lcd != 0) return std::nullopt;
        i64 c = r.terms.front().second / lcd;
        Poly piece = Poly::monomial(nv, t, c);
        q = q + piece;
        r = r - piece * den;
        if (q.terms.size() > kTermLimit) throw DivisionFailure("polynomial term limit exceeded");
    }
    // undo the shifts: a/b = (num / x^sa) / (den / x^sb) = q * x^{sb - sa}
    Mono corr = mono_div(shift_b, shift_a);
    for (auto& t : q.terms) t.first = mono_mul(t.first, corr);
    std::sort(q.terms.begin(), q.terms.end(), term_order);
    return q;
}

int valuation(const Poly& a, const Poly& b) {
    if (a.is_zero()) throw FactorizationFailure("valuation of the zero polynomial");
    int v = 0;
    Poly cur = a;
    while (true) {
        auto q = try_divide(cur, b);
        if (!q) return v;
        cur = *q;
        ++v;
        if (v > 256) throw FactorizationFailure("runaway valuation (unit divisor?)");
    }
}

i64 content(const Poly& a) {
    i64 g = 0;
    for (const auto& t : a.terms) g = std::gcd(g, t.second < 0 ? -t.second : t.second);
    return g;
}

Poly primitive_part(const Poly& a) {
    if (a.is_zero()) return a;
    i64 g = content(a);
    if (a.terms.front().second < 0) g = -g;
    Poly r = a;
    for (auto& t : r.terms) t.second /= g;
    return r;
}

Poly substitute(const Poly& a, int var, const Poly& value) {
    // group by the exponent of `var`, then Horner on decreasing exponents
    std::unordered_map<int, Poly> groups;
    int lo = 0, hi = 0;
    for (const auto& t : a.terms) {
        int k = t.first.e[var];
        lo = std::min(lo, k);
        hi = std::max(hi, k);
        Mono m = t.first;
        m.e[var] = 0;
        auto it = groups.find(k);
        if (it == groups.end()) it = groups.emplace(k, Poly::zero(a.nvars)).first;
        it->second = it->second + Poly::monomial(a.nvars, m, t.second);
    }
    if (lo < 0) throw DivisionFailure("substitution into a Laurent exponent");
    Poly out = Poly::zero(a.nvars);
    for (int k = hi; k >= 0; --k) {
        out = out * value;
        auto it = groups.find(k);
        if (it != groups.end()) out = out + it->second;
    }
    return out;
}

std::pair<Poly, int> substitute_rational(const Poly& a, int var, const Poly& num, const Poly& den) {
    int d = 0;
    for (const auto& t : a.terms) {
        if (t.first.e[var] < 0) throw DivisionFailure("rational substitution into a Laurent exponent");
        d = std::max(d, static_cast<int>(t.first.e[var]));
    }
    Poly out = Poly::zero(std::max({a.nvars, num.nvars, den.nvars}));
    for (const auto& t : a.terms) {
        int k = t.first.e[var];
        Mono m = t.first;
        m.e[var] = 0;
        Poly piece = Poly::monomial(out.nvars, m, t.second) * poly_pow(num, k) * poly_pow(den, d - k);
        out = out + piece;
    }
    return {out, d};
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms.size() != b.terms.size()) return false;
    i64 ca = a.terms.front().second, cb = b.terms.front().second;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (!(a.terms[i].first == b.terms[i].first)) return false;
        if (a.terms[i].second * cb != b.terms[i].second * ca) return false;
    }
    return true;
}

std::string Poly::str(const std::string& var_prefix) const {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        i64 c = terms[i].second;
        if (i) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        i64 ac = c < 0 ? -c : c;
        bool printed = false;
        if (ac != 1) {
            out += std::to_string(ac);
            printed = true;
        }
        for (int v = 0; v < kMaxVars; ++v) {
            int e = terms[i].first.e[v];
            if (e == 0) continue;
            if (printed) out += "*";
            out += var_prefix + std::to_string(v + 1);
            if (e != 1) out += "^" + std::to_string(e);
            printed = true;
        }
        if (!printed) out += "1";
    }
    return out;
}

}  // namespace dbraid
