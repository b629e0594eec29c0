#include "dbraid/clusterops.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dbraid {

int AbstractSeed::index_of(int label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    throw ConfigError("no index labelled " + std::to_string(label));
}

i64 AbstractSeed::B(int i, int j) const {
    Rat b = Bhat(i, j);
    if (!b.is_integer()) throw NonIntegral("exchange matrix entry is not an integer");
    return b.num;
}

std::vector<int> AbstractSeed::mutable_labels() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!frozen[i]) out.push_back(labels[i]);
    return out;
}

std::vector<int> AbstractSeed::frozen_labels() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (frozen[i]) out.push_back(labels[i]);
    return out;
}

AbstractSeed to_abstract(const Seed& seed) {
    AbstractSeed a;
    a.labels = seed.solid;
    a.frozen = seed.frozen;
    a.d = seed.d;
    a.omega = seed.omega.omega;
    return a;
}

AbstractSeed abstract_from_B(const std::vector<int>& labels, const std::vector<char>& frozen,
                             const std::vector<i64>& d, const IntMat& B_full) {
    const int n = static_cast<int>(labels.size());
    AbstractSeed a;
    a.labels = labels;
    a.frozen = frozen;
    a.d = d;
    a.omega = RatMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.omega.at(i, j) = Rat(B_full.at(i, j) * d[j]);
    // consistency: omega must come out antisymmetric
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.omega.at(i, j) != -a.omega.at(j, i))
                throw InternalInconsistency("B matrix is not d-skew-symmetrizable");
    return a;
}

AbstractSeed mutate(const AbstractSeed& s, int label) {
    const int k = s.index_of(label);
    if (s.frozen[k]) throw NotMutable("cannot mutate frozen index " + std::to_string(label));
    const int n = s.size();
    // integrality at k
    std::vector<i64> colk(n);
    for (int i = 0; i < n; ++i) {
        Rat b = s.Bhat(i, k);
        if (!b.is_integer()) throw NonIntegral("seed is not integral at the mutated index");
        colk[i] = b.num;
    }

    AbstractSeed r = s;
    // omega' in the mutated basis: standard matrix mutation of Bhat, written
    // directly on omega: for i,j != k
    //   omega'_{ij} = omega_{ij} + sgn(omega_{ik}) * max(omega_{ik} omega_{kj}, 0) / d_k
    // and omega'_{ik} = -omega_{ik}, omega'_{kj} = -omega_{kj}.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k || i == j) continue;
            const Rat& oik = s.omega.at(i, k);
            const Rat& okj = s.omega.at(k, j);
            Rat prod = oik * okj;
            if (sgn(prod) <= 0) continue;
            Rat adj = prod / Rat(s.d[k]);
            if (sgn(oik) < 0) adj = -adj;
            r.omega.at(i, j) = s.omega.at(i, j) + adj;
        }
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        r.omega.at(i, k) = -s.omega.at(i, k);
        r.omega.at(k, i) = -s.omega.at(k, i);
    }

    if (s.vars) {
        const auto& v = *s.vars;
        int nv = v[k].nvars;
        Poly pos = Poly::constant(nv, 1), neg = Poly::constant(nv, 1);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            i64 b = colk[i];
            if (b > 0) pos = pos * poly_pow(v[i], static_cast<int>(b));
            if (b < 0) neg = neg * poly_pow(v[i], static_cast<int>(-b));
        }
        Poly num = pos + neg;
        // Laurent division by v[k]
        auto q = try_divide(num, v[k]);
        if (!q) throw DivisionFailure("exchange binomial is not divisible by the mutated variable");
        auto vars = v;
        vars[k] = *q;
        r.vars = std::move(vars);
    }
    return r;
}

AbstractSeed mutate_seq(const AbstractSeed& s, const std::vector<int>& labels) {
    AbstractSeed r = s;
    for (int l : labels) r = mutate(r, l);
    return r;
}

AbstractSeed freeze(const AbstractSeed& s, const std::set<int>& labels) {
    AbstractSeed r = s;
    for (int l : labels) {
        int i = r.index_of(l);
        if (r.frozen[i]) throw ConfigError("index already frozen");
        r.frozen[i] = 1;
    }
    return r;
}

AbstractSeed relabel(const AbstractSeed& s, const std::map<int, int>& pi) {
    AbstractSeed r = s;
    for (int i = 0; i < r.size(); ++i) {
        auto it = pi.find(r.labels[i]);
        if (it != pi.end()) r.labels[i] = it->second;
    }
    // relabeling must stay injective
    auto sorted = r.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("relabeling is not a bijection");
    return r;
}

bool is_sink(const AbstractSeed& s, int label) {
    int k = s.index_of(label);
    if (s.frozen[k]) return false;
    for (int j = 0; j < s.size(); ++j) {
        if (j == k || s.frozen[j]) continue;
        if (sgn(s.omega.at(k, j)) > 0) return false;  // arrow k -> j
    }
    return true;
}

std::vector<int> in_neighbors(const AbstractSeed& s, int label) {
    int k = s.index_of(label);
    std::vector<int> out;
    for (int j = 0; j < s.size(); ++j) {
        if (j == k || s.frozen[j]) continue;
        if (sgn(s.omega.at(j, k)) > 0) out.push_back(s.labels[j]);
    }
    return out;
}

AbstractSeed contract(const AbstractSeed& s, int sink_label, int frozen_label) {
    const int si = s.index_of(sink_label);
    const int fi = s.index_of(frozen_label);
    if (s.frozen[si]) throw AssumptionViolated("contraction point must be mutable");
    if (!s.frozen[fi]) throw AssumptionViolated("companion index must be frozen");
    if (!is_sink(s, sink_label)) throw AssumptionViolated("contraction point must be a sink");
    i64 bfs = s.B(fi, si);
    if (bfs != 1 && bfs != -1)
        throw AssumptionViolated("frozen companion must meet the sink with coefficient +-1");
    for (int j = 0; j < s.size(); ++j) {
        if (j == si || s.frozen[j]) continue;
        if (s.B(fi, j) != 0)
            throw AssumptionViolated("frozen companion meets a mutable index other than the sink");
    }

    // exchange binomial for the sink: x_s x_s' = M1 + x_f M2; dlog x_f is
    // replaced by dlog M1 - dlog M2, dlog x_s by 0
    const int n = s.size();
    std::vector<Rat> sub(n);  // dlog x_f = sum_j sub[j] dlog x_j over j != s, f
    for (int j = 0; j < n; ++j) {
        if (j == si || j == fi) continue;
        Rat b = s.Bhat(j, si);
        if (!b.is_integer()) throw NonIntegral("seed is not integral at the sink");
        // with B_{fs} = +1 the frozen variable sits in the positive product,
        // so dlog x_f = dlog M1 - dlog M2 = sum_j (-B_{js}) dlog x_j; the
        // other sign flips everything
        sub[j] = Rat(bfs > 0 ? -b.num : b.num);
    }

    std::vector<int> keep;
    for (int j = 0; j < n; ++j)
        if (j != si && j != fi) keep.push_back(j);

    AbstractSeed r;
    for (int j : keep) {
        r.labels.push_back(s.labels[j]);
        r.d.push_back(s.d[j]);
        bool frz = s.frozen[j] != 0;
        for (int nb : in_neighbors(s, sink_label))
            if (s.labels[j] == nb) frz = true;
        r.frozen.push_back(frz ? 1 : 0);
    }
    r.omega = RatMat(n - 2, n - 2);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) {
            int ia = keep[a], ib = keep[b];
            Rat v = s.omega.at(ia, ib);
            // substitute dlog x_f: omega_{if} dlog x_i ^ dlog x_f picks up
            // omega_{if} * sub[j] on dlog x_i ^ dlog x_j
            v = v + s.omega.at(ia, fi) * sub[ib];
            v = v + sub[ia] * s.omega.at(fi, ib);
            r.omega.at(static_cast<int>(a), static_cast<int>(b)) = v;
        }
    return r;
}

QuasiResult quasi_equivalent(const AbstractSeed& s1, const AbstractSeed& s2) {
    QuasiResult res;
    if (!s1.vars || !s2.vars) throw IncomparableLattices("both seeds need variables in a common lattice");
    if (s1.size() != s2.size()) {
        res.reason = "sizes differ";
        return res;
    }
    const int n = s1.size();
    if (s1.labels != s2.labels) {
        res.reason = "labels differ";
        return res;
    }
    if (s1.d != s2.d) {
        res.reason = "symmetrizers differ";
        return res;
    }
    if (s1.frozen != s2.frozen) {
        res.reason = "frozen sets differ";
        return res;
    }
    if (!(s1.omega == s2.omega)) {
        res.reason = "two-forms differ";
        return res;
    }
    // exponent vectors; every variable must be a Laurent monomial here
    const int nv = kMaxVars;
    auto expvec = [&](const Poly& p) {
        if (!p.is_monomial()) throw IncomparableLattices("variable is not a lattice point");
        std::vector<i64> v(nv);
        for (int i = 0; i < nv; ++i) v[i] = p.terms[0].first.e[i];
        return v;
    };
    std::vector<int> fro;
    for (int i = 0; i < n; ++i)
        if (s1.frozen[i]) fro.push_back(i);
    IntMat f1(nv, static_cast<int>(fro.size())), f2(nv, static_cast<int>(fro.size()));
    for (size_t j = 0; j < fro.size(); ++j) {
        auto v1 = expvec((*s1.vars)[fro[j]]);
        auto v2 = expvec((*s2.vars)[fro[j]]);
        for (int i = 0; i < nv; ++i) {
            f1.at(i, static_cast<int>(j)) = v1[i];
            f2.at(i, static_cast<int>(j)) = v2[i];
        }
    }
    if (!same_column_lattice(f1, f2)) {
        res.reason = "frozen sublattices differ";
        return res;
    }
    for (int i = 0; i < n; ++i) {
        if (s1.frozen[i]) continue;
        auto v1 = expvec((*s1.vars)[i]);
        auto v2 = expvec((*s2.vars)[i]);
        std::vector<i64> diff(nv);
        for (int l = 0; l < nv; ++l) diff[l] = v2[l] - v1[l];
        auto sol = lattice_solve(f1, diff);
        if (!sol) {
            res.reason = "variable " + std::to_string(s1.labels[i]) +
                         " does not differ by a frozen Laurent monomial";
            return res;
        }
        res.witness[s1.labels[i]] = *sol;
    }
    res.equivalent = true;
    return res;
}

std::vector<int> parse_mutation_seq(const std::string& text) {
    std::string s;
    for (char c : text) s += (std::isdigit(static_cast<unsigned char>(c)) ? c : ' ');
    std::istringstream in(s);
    std::vector<int> listed;
    int v;
    while (in >> v) listed.push_back(v);
    if (!in.eof()) throw ConfigError("cannot parse mutation sequence '" + text + "'");
    // composition order: the last listed index acts first
    std::reverse(listed.begin(), listed.end());
    return listed;
}

bool principal_parts_equal(const AbstractSeed& a, const AbstractSeed& b, std::string* why) {
    auto ma = a.mutable_labels(), mb = b.mutable_labels();
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) {
        if (why) *why = "mutable label sets differ";
        return false;
    }
    for (int la : ma)
        for (int lb : ma) {
            if (a.Bhat(a.index_of(la), a.index_of(lb)) != b.Bhat(b.index_of(la), b.index_of(lb))) {
                if (why)
                    *why = "B[" + std::to_string(la) + "][" + std::to_string(lb) + "] differs";
                return false;
            }
        }
    return true;
}

}  // namespace dbraid
