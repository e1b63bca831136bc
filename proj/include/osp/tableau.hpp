#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osp/alphabet.hpp"

namespace osp {

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros

Partition conjugate(const Partition& p);
int size(const Partition& p);
Partition normalize(Partition p);
// all partitions of n (reverse lexicographic)
std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1);
std::string to_string(const Partition& p);

// entries listed top to bottom
using Column = std::vector<Letter>;

// S(i): the i-th entry from the bottom, i >= 1
inline Letter from_bottom(const Column& S, int i) { return S[S.size() - i]; }
int height(const Column& S);
bool is_column(const Column& S);

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

// Column-major tableau of a skew shape. Column j occupies rows
// offset[j] .. offset[j]+cols[j].size()-1. An empty offset vector means all zeros.
struct Tableau {
    std::vector<Column> cols;
    std::vector<int> offset;

    int top(std::size_t j) const { return offset.empty() ? 0 : offset[j]; }
    int cells() const;
    bool empty() const { return cells() == 0; }
    // column heights, trailing empties dropped
    std::vector<int> heights() const;
    // outer shape as a partition (rows); only meaningful for straight shapes
    Partition shape() const;
    Letter at(int row, int col) const;
    bool operator==(const Tableau&) const = default;
};

// two-column skew tableau of shape lambda(a,b,c): L is offset by b
Tableau two_column(const Column& L, const Column& R, int b);

bool is_semistandard(const Tableau& T);
Word reading_word(const Tableau& T);
Word reverse_word(const Tableau& T);

// Super Schensted column insertion into a straight-shape tableau.
Cell column_insert(Tableau& T, Letter a);
void insert_word(Tableau& T, const Word& w, std::vector<Cell>* created = nullptr);
Tableau insert_tableau(const Tableau& S, const Tableau& T);
inline Tableau insert_column(const Column& S, const Tableau& T) { return insert_tableau(Tableau{{S}, {}}, T); }

// Undo the insertion that created cell c (a removable corner). Returns the letter.
Letter uninsert(Tableau& T, Cell c);
// cells in insertion order; returns the inserted word in insertion order
Word inverse_insertion(Tableau P, const std::vector<Cell>& cells);

struct RecordingPair {
    Tableau P;
    Tableau Q;  // on the conjugate skew shape, entries k and k+1
    std::vector<Cell> cells;  // cells of P in creation order
};

RecordingPair recording_pair(const Column& S1, const Column& S2, const Tableau& U, int k);

// straight-shape tableau from rows (top to bottom, left to right)
Tableau from_rows(const std::vector<std::vector<Letter>>& rows);
std::vector<std::vector<Letter>> to_rows(const Tableau& T);

std::string to_string(const Tableau& T);

}  // namespace osp
