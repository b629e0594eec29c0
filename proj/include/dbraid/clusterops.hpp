#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "dbraid/poly.hpp"
#include "dbraid/seedbuild.hpp"

namespace dbraid {

// A seed detached from a braid word: labelled indices, frozen split,
// symmetrizers, and the full two-form coefficient matrix (the extended
// exchange matrix is derived from it). `vars` optionally tracks cluster
// variables as Laurent polynomials over some ambient variable set; mutation
// keeps them up to date via the exchange relation.
struct AbstractSeed {
    std::vector<int> labels;
    std::vector<char> frozen;
    std::vector<i64> d;
    RatMat omega;
    std::optional<std::vector<Poly>> vars;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(int label) const;
    bool label_mutable(int label) const { return frozen[index_of(label)] == 0; }

    Rat Bhat(int i, int j) const { return omega.at(i, j) / Rat(d[j]); }
    i64 B(int i, int j) const;  // requires an integral entry

    std::vector<int> mutable_labels() const;
    std::vector<int> frozen_labels() const;
};

AbstractSeed to_abstract(const Seed& seed);
AbstractSeed abstract_from_B(const std::vector<int>& labels, const std::vector<char>& frozen,
                             const std::vector<i64>& d, const IntMat& B_full);

AbstractSeed mutate(const AbstractSeed& s, int label);
AbstractSeed mutate_seq(const AbstractSeed& s, const std::vector<int>& labels);
AbstractSeed freeze(const AbstractSeed& s, const std::set<int>& labels);
AbstractSeed relabel(const AbstractSeed& s, const std::map<int, int>& pi);

// contraction at a mutable sink s with a dedicated frozen f
// (B_{fs} = +-1, B_{fj} = 0 for mutable j != s)
AbstractSeed contract(const AbstractSeed& s, int sink_label, int frozen_label);

bool is_sink(const AbstractSeed& s, int label);
std::vector<int> in_neighbors(const AbstractSeed& s, int label);

// quasi-equivalence of two seeds whose variables live in one ambient lattice;
// monomial witnesses (exponents over the frozen variables of s1) are returned
// per mutable index on success
struct QuasiResult {
    bool equivalent = false;
    std::string reason;
    std::map<int, std::vector<i64>> witness;
};
QuasiResult quasi_equivalent(const AbstractSeed& s1, const AbstractSeed& s2);

// "mu(4,3,4)" or "4 3 4"; both use composition order (the last listed index
// is applied first)
std::vector<int> parse_mutation_seq(const std::string& text);

// principal parts agree entrywise over the shared mutable labels
bool principal_parts_equal(const AbstractSeed& a, const AbstractSeed& b, std::string* why = nullptr);

}  // namespace dbraid
