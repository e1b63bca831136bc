#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osp/osp.hpp"

namespace osp {

enum class Conv { Plus, Super };

// Crystal indices use the letter encoding: bar(k) for k-bar, zero for 0,
// integer(i) / half(j) for the unbarred indices.
using Index = Letter;

std::vector<Index> indices(int m, int n, Conv conv);
std::string index_string(Index i);

// edge source -> target of a non-special index; m is needed to spot m-bar
struct Edge {
    Letter source;
    Letter target;
};
Edge edge_of(Index i, Conv conv);
inline bool is_top_index(Index i, int m) { return i == Letter::bar(m); }

enum class Dir { E, F };

// signature rule (lower tensor rule) on a word with a given edge
std::optional<Word> lower_rule(const Word& w, Edge ed, Dir d);
int lower_eps(const Word& w, Edge ed);
int lower_phi(const Word& w, Edge ed);

// operator on a word in the given convention; the word is read as a tensor
// w_1 (x) ... (x) w_r of letters. m-bar is not a word index.
std::optional<Word> word_op(const Word& w, Index i, Dir d, Conv conv);

std::optional<Piece> piece_op(const Piece& T, Index i, Dir d, G g, int m, Conv conv);
// a tensor of pieces, T_1 first
std::optional<std::vector<Piece>> tuple_op(const std::vector<Piece>& P, Index i, Dir d, G g, int m, Conv conv);
std::optional<OspTableau> osp_op(const OspTableau& T, Index i, Dir d, int m, Conv conv);
int osp_eps(const OspTableau& T, Index i, int m, Conv conv);
int osp_phi(const OspTableau& T, Index i, int m, Conv conv);

// <coroot_i, wt(T)>
int coroot_pairing(const OspTableau& T, Index i, int m, int n, Conv conv);

// H_(lambda,ell) for m+n and H^natural_(lambda,ell) for m|n
OspTableau highest_element(const PShape& s, const Alphabet& A);
// the gl(m|n) highest weight tableau H^natural_lambda
Tableau natural_highest_tableau(const Partition& lambda, int m, int n);
// (T_L -> (... (T_2 -> T_1)))
Tableau insertion_image(const OspTableau& T);

struct CrystalGraph {
    static constexpr int NONE = -1;
    static constexpr int TRUNCATED = -2;

    Alphabet A;
    Conv conv = Conv::Plus;
    std::vector<Index> idx;
    std::vector<OspTableau> nodes;
    std::vector<std::vector<int>> f;  // f[node][index position]
    std::vector<std::vector<int>> e;
    bool truncated = false;

    int find(const OspTableau& T) const;
    std::size_t size() const { return nodes.size(); }
};

// degree_bound < 0: no bound (all-even alphabets only)
CrystalGraph build_graph(const OspTableau& seed, const Alphabet& A, Conv conv, int degree_bound,
                         bool parallel = true);
// edges on an explicit node list; results outside the list are TRUNCATED when
// their degree exceeds degree_bound, otherwise recorded in `escapes`
CrystalGraph graph_on(const std::vector<OspTableau>& nodes, const Alphabet& A, Conv conv, int degree_bound,
                      std::vector<std::string>* escapes = nullptr);

struct Report {
    bool ok = true;
    std::string witness;
    void fail(const std::string& w) {
        if (ok) witness = w;
        ok = false;
    }
};

Report verify_axioms(const CrystalGraph& G);

struct Connectivity {
    int components = 0;
    std::vector<int> sources;  // nodes killed by every e
};
Connectivity check_connected(const CrystalGraph& G);

std::string to_dot(const CrystalGraph& G);
std::string to_json(const CrystalGraph& G);

}  // namespace osp
