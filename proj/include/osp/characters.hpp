#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osp/osp.hpp"

namespace osp {

// Exponent vectors are (z, x_a for a in vars) in alphabet order.
struct WeightPolynomial {
    std::vector<Letter> vars;
    std::map<std::vector<int>, long long> terms;

    void add(const std::vector<int>& e, long long c);
    void add(const WeightPolynomial& o);
    WeightPolynomial scaled(long long c, int z_shift = 0) const;
    bool operator==(const WeightPolynomial& o) const { return vars == o.vars && terms == o.terms; }
    int degree(const std::vector<int>& e) const;  // total x-degree, z excluded
};

std::vector<int> exponent_of(const std::map<Letter, int>& content, const std::vector<Letter>& vars, int z);
std::string to_string(const WeightPolynomial& p);
std::string to_csv(const WeightPolynomial& p);
std::string to_json(const WeightPolynomial& p);

// all semistandard tableaux of shape mu over A
std::vector<Tableau> sst(const Partition& mu, const Alphabet& A);

WeightPolynomial schur(const Partition& mu, const Alphabet& A, int degree_bound);
WeightPolynomial osp_character(const PShape& s, const Alphabet& A, int degree_bound);

// Q is over the integer letters 1..2L
bool is_kostka(const Tableau& Q, const PShape& s);
std::vector<Tableau> kostka_set(const Partition& mu, const PShape& s);

struct PsiImage {
    Tableau P;
    Tableau Q;
    bool operator==(const PsiImage&) const = default;
};
PsiImage psi(const OspTableau& T);
// throws std::runtime_error when (P,Q) is not an image
OspTableau psi_inverse(const PsiImage& pq, const PShape& s, const Alphabet& A);

struct ExpandReport {
    bool ok = true;
    std::string witness;
    std::vector<std::pair<Partition, int>> kostka;  // mu with K != 0
    WeightPolynomial lhs, rhs;
};
// osp_character against z^ell sum_mu K_mu s_{mu'}; P has shape mu' when Q has shape mu
ExpandReport schur_expand(const PShape& s, const Alphabet& A, int degree_bound);

enum class Classical { B, C };

// weights in doubled epsilon coordinates
struct WeylCharacter {
    long long dim = 0;
    std::map<std::vector<int>, long long> mult;
};
long long weyl_dimension(Classical t, int m, const std::vector<int>& hw2);
WeylCharacter weyl_oracle_doubled(Classical t, int m, const std::vector<int>& hw2);
WeylCharacter weyl_oracle(Classical t, int m, const Partition& hw);

// epsilon weight (doubled) of an osp tableau over J_{m+0}
std::vector<int> classical_weight(const OspTableau& T, int m);

}  // namespace osp
