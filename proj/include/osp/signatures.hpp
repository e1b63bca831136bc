#pragma once

#include <utility>
#include <vector>

#include "osp/tableau.hpp"

namespace osp {

// +1, -1 or 0 per position
using SignSequence = std::vector<int>;

struct Signature {
    int a = 0;  // surviving minus
    int b = 0;  // surviving plus
    bool operator==(const Signature&) const = default;
};

// cancel (+,-) pairs separated only by dots, until no - lies right of a +
SignSequence reduce(const SignSequence& s);
Signature count(const SignSequence& reduced);

SignSequence k_sequence(const Word& w, int k);
Signature k_signature(const Word& w, int k);
inline Signature k_signature(const Tableau& T, int k) { return k_signature(reading_word(T), k); }

Word r_op(const Word& w, int k);
Word varrho_op(const Word& w, int k);
// refill T along its reading word
Tableau r_op(const Tableau& T, int k);
Tableau varrho_op(const Tableau& T, int k);
Tableau refill(const Tableau& shape_of, const Word& w);

// combinatorial R-matrix; requires ht(S) >= ht(T); returns (T#, S#)
std::pair<Column, Column> r_matrix(const Column& S, const Column& T);

Signature pair_signature(const Column& S1, const Column& S2);

}  // namespace osp
