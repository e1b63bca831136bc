#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osp/signatures.hpp"

namespace osp {

enum class G { b, bb, c };

std::string to_string(G g);
G parse_g(const std::string& s);

// A two-column piece (T^L, T^R) of T^g(a), or a spin column (empty, T).
struct Piece {
    Column L;
    Column R;
    int a = 0;
    bool spin = false;

    int cells() const { return height(L) + height(R); }
    int c() const { return height(L) - a; }
    int b() const { return height(R) - c(); }
    auto operator<=>(const Piece&) const = default;
};

struct Split {
    Column L;  // ^L T, height c
    Column R;  // ^R T, height a+b+c
};

struct PShape {
    G g = G::c;
    Partition lambda;
    int ell = 1;
    bool operator==(const PShape&) const = default;
};

bool in_P(const PShape& s);
bool has_spin_slot(const PShape& s);
int tuple_length(const PShape& s);
// a-value of piece k (1-based), 0 for the spin slot
int piece_a(const PShape& s, int k);
// truncation to J_{m+n} (plus=true) or J_{m|n}
bool compatible(const PShape& s, int m, int n, bool plus);
void validate(const PShape& s);

bool is_member(const Piece& T, G g, int a);
bool is_member(const Piece& T, G g, int a, const Alphabet& A);
Split split(const Piece& T);
bool is_admissible(const Piece& S, const Piece& T);
bool is_admissible(const Piece& S, const Split& sS, const Piece& T, const Split& sT);

// Tuple (T_L, ..., T_1) stored with T_1 first.
struct OspTableau {
    PShape shape;
    std::vector<Piece> pieces;

    int degree() const;
    std::map<Letter, int> content() const;
    bool operator==(const OspTableau& o) const { return shape == o.shape && pieces == o.pieces; }
    bool operator<(const OspTableau& o) const { return pieces < o.pieces; }
};

bool is_osp_tableau(const OspTableau& T, const Alphabet& A);

// all columns over A with height <= h
std::vector<Column> all_columns(const Alphabet& A, int h);
// all members of T^g_A(a) (spin columns when spin) with at most max_cells cells
std::vector<Piece> all_pieces(G g, int a, bool spin, const Alphabet& A, int max_cells);

// degree_bound < 0 means unbounded; only allowed for all-even alphabets
std::vector<OspTableau> enumerate(const PShape& s, const Alphabet& A, int degree_bound, bool parallel = true);
std::vector<OspTableau> enumerate_serial(const PShape& s, const Alphabet& A, int degree_bound);

// deterministic ordering: by content over A, then by serialized form
void sort_canonical(std::vector<OspTableau>& v, const Alphabet& A);

std::string to_string(const Piece& p);
std::string to_string(const OspTableau& T);

}  // namespace osp
