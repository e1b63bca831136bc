#include "osp/osp.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osp {

std::string to_string(G g) {
    switch (g) {
        case G::b: return "b";
        case G::bb: return "bb";
        case G::c: return "c";
    }
    return "?";
}

G parse_g(const std::string& s) {
    if (s == "b") return G::b;
    if (s == "bb") return G::bb;
    if (s == "c") return G::c;
    throw std::invalid_argument("unknown g '" + s + "' (expected b, bb or c)");
}

static int lambda1(const PShape& s) { return s.lambda.empty() ? 0 : s.lambda[0]; }

bool in_P(const PShape& s) {
    if (s.ell < 1) return false;
    if (normalize(s.lambda) != s.lambda) return false;
    int d = s.g == G::c ? s.ell - lambda1(s) : s.ell - 2 * lambda1(s);
    if (d < 0) return false;
    if (s.g == G::bb && d % 2) return false;
    return true;
}

bool has_spin_slot(const PShape& s) { return s.g == G::b && (s.ell - 2 * lambda1(s)) % 2 == 1; }

int tuple_length(const PShape& s) {
    if (s.g == G::c) return s.ell;
    if (has_spin_slot(s)) return (s.ell + 1) / 2;
    return s.ell / 2;
}

int piece_a(const PShape& s, int k) {
    if (has_spin_slot(s) && k == tuple_length(s)) return 0;
    Partition c = conjugate(s.lambda);
    return k <= static_cast<int>(c.size()) ? c[k - 1] : 0;
}

bool compatible(const PShape& s, int m, int n, bool plus) {
    if (plus) return static_cast<int>(s.lambda.size()) <= m + n;
    return static_cast<int>(s.lambda.size()) <= m || s.lambda[m] <= n;
}

void validate(const PShape& s) {
    if (!in_P(s))
        throw std::invalid_argument("shape (" + to_string(s.lambda) + "," + std::to_string(s.ell) +
                                    ") is not admissible for g=" + to_string(s.g));
}

bool is_member(const Piece& T, G g, int a) {
    if (T.spin) return a == 0 && T.L.empty() && is_column(T.R) && g == G::b;
    if (!is_column(T.L) || !is_column(T.R)) return false;
    int c = height(T.L) - a;
    if (c < 0) return false;
    int b = height(T.R) - c;
    if (b < 0) return false;
    if (T.a != a) return false;
    if (g == G::c && b != 0) return false;
    if (!is_semistandard(two_column(T.L, T.R, b))) return false;
    if (g != G::c && pair_signature(T.L, T.R) != Signature{a, b}) return false;
    return true;
}

bool is_member(const Piece& T, G g, int a, const Alphabet& A) {
    for (auto x : T.L)
        if (!A.contains(x)) return false;
    for (auto x : T.R)
        if (!A.contains(x)) return false;
    return is_member(T, g, a);
}

Split split(const Piece& T) {
    if (T.spin) return Split{{}, T.R};
    Tableau P{{T.R}, {}};
    insert_word(P, T.L);
    while (P.cols.size() < 2) P.cols.emplace_back();
    auto [l, r] = r_matrix(P.cols[0], P.cols[1]);
    return Split{l, r};
}

static bool leq(Letter x, Letter y) { return x < y || (x == y && x.parity() == 0); }

bool is_admissible(const Piece& S, const Split& sS, const Piece& T, const Split& sT) {
    int p = S.a, q = T.a;
    if (p > q) throw std::invalid_argument("admissibility needs p <= q");
    if (height(S.R) + p > height(T.L)) return false;
    int h2 = height(sS.R);
    if (h2 > height(T.L)) return false;
    for (int i = 1; i <= h2; ++i)
        if (!leq(from_bottom(sS.R, i), from_bottom(T.L, i))) return false;
    for (int i = 1; i <= height(sT.L); ++i) {
        int j = i + q - p;
        if (j > height(S.R)) break;
        if (!leq(from_bottom(S.R, j), from_bottom(sT.L, i))) return false;
    }
    return true;
}

bool is_admissible(const Piece& S, const Piece& T) { return is_admissible(S, split(S), T, split(T)); }

int OspTableau::degree() const {
    int d = 0;
    for (auto& p : pieces) d += p.cells();
    return d;
}

std::map<Letter, int> OspTableau::content() const {
    std::map<Letter, int> m;
    for (auto& p : pieces) {
        for (auto x : p.L) ++m[x];
        for (auto x : p.R) ++m[x];
    }
    return m;
}

bool is_osp_tableau(const OspTableau& T, const Alphabet& A) {
    const PShape& s = T.shape;
    if (!in_P(s)) return false;
    int L = tuple_length(s);
    if (static_cast<int>(T.pieces.size()) != L) return false;
    for (int k = 1; k <= L; ++k) {
        const Piece& P = T.pieces[k - 1];
        bool spin = has_spin_slot(s) && k == L;
        if (P.spin != spin) return false;
        if (!is_member(P, s.g, piece_a(s, k), A)) return false;
    }
    for (int k = 1; k < L; ++k)
        if (!is_admissible(T.pieces[k], T.pieces[k - 1])) return false;
    return true;
}

static void columns_rec(const std::vector<Letter>& ev, const std::vector<Letter>& od, std::size_t i, int room,
                        Column& cur, std::vector<Column>& out) {
    std::size_t total = ev.size() + od.size();
    if (i == total) {
        out.push_back(cur);
        return;
    }
    bool even = i < ev.size();
    Letter x = even ? ev[i] : od[i - ev.size()];
    int maxk = even ? std::min(room, 1) : room;
    for (int k = 0; k <= maxk; ++k) {
        for (int t = 0; t < k; ++t) cur.push_back(x);
        columns_rec(ev, od, i + 1, room - k, cur, out);
        for (int t = 0; t < k; ++t) cur.pop_back();
    }
}

std::vector<Column> all_columns(const Alphabet& A, int h) {
    std::vector<Column> out;
    Column cur;
    // letters of A in order: evens and odds interleave in the total order, so
    // collect by order and sort afterwards
    columns_rec(A.even_letters(), A.odd_letters(), 0, std::max(h, 0), cur, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end(), [](const Column& x, const Column& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::vector<Piece> all_pieces(G g, int a, bool spin, const Alphabet& A, int max_cells) {
    std::vector<Piece> out;
    if (max_cells < 0) return out;
    std::vector<Column> cols = all_columns(A, max_cells);
    if (spin) {
        for (auto& c : cols) out.push_back(Piece{{}, c, 0, true});
        return out;
    }
    for (auto& L : cols) {
        if (height(L) < a) continue;
        int c = height(L) - a;
        for (auto& R : cols) {
            if (height(L) + height(R) > max_cells) break;
            if (height(R) < c) continue;
            if (g == G::c && height(R) != c) continue;
            Piece P{L, R, a, false};
            if (is_member(P, g, a)) out.push_back(P);
        }
    }
    return out;
}

namespace {

struct Slot {
    std::vector<Piece> pieces;
    std::vector<Split> splits;
};

struct Search {
    const PShape* s;
    int L;
    int bound;
    std::vector<Slot> slots;    // index k-1
    std::vector<int> min_rest;  // minimal cells needed by slots k..L-1 (0-based)
};

void dfs(const Search& S, int k, std::vector<Piece>& cur, std::vector<std::size_t>& idx, int used,
         std::vector<OspTableau>& out) {
    if (k == S.L) {
        out.push_back(OspTableau{*S.s, cur});
        return;
    }
    const Slot& sl = S.slots[k];
    const Piece& prev = cur.back();
    const Split& prev_split = S.slots[k - 1].splits[idx[k - 1]];
    for (std::size_t i = 0; i < sl.pieces.size(); ++i) {
        const Piece& P = sl.pieces[i];
        if (used + P.cells() + S.min_rest[k + 1] > S.bound) continue;
        if (!is_admissible(P, sl.splits[i], prev, prev_split)) continue;
        idx[k] = i;
        cur.push_back(P);
        dfs(S, k + 1, cur, idx, used + P.cells(), out);
        cur.pop_back();
    }
}

std::vector<OspTableau> run(const PShape& s, const Alphabet& A, int degree_bound, bool parallel) {
    validate(s);
    if (degree_bound < 0) {
        if (A.odd_count() > 0) throw std::invalid_argument("a degree bound is required when n > 0");
        degree_bound = 2 * static_cast<int>(A.size()) * tuple_length(s);
    }
    int L = tuple_length(s);
    Search S{&s, L, degree_bound, {}, {}};
    std::map<std::pair<int, bool>, int> cache;
    S.min_rest.assign(L + 1, 0);
    for (int k = L; k >= 1; --k) S.min_rest[k - 1] = S.min_rest[k] + piece_a(s, k);
    for (int k = 1; k <= L; ++k) {
        bool spin = has_spin_slot(s) && k == L;
        int a = piece_a(s, k);
        int room = degree_bound - (S.min_rest[0] - a);
        auto key = std::make_pair(a, spin);
        auto it = cache.find(key);
        if (it != cache.end()) {
            S.slots.push_back(S.slots[it->second]);
            continue;
        }
        Slot sl;
        sl.pieces = all_pieces(s.g, a, spin, A, room);
        for (auto& p : sl.pieces) sl.splits.push_back(split(p));
        cache[key] = k - 1;
        S.slots.push_back(std::move(sl));
    }

    std::vector<OspTableau> out;
    const Slot& first = S.slots[0];
    const int nfirst = static_cast<int>(first.pieces.size());
    std::vector<std::vector<OspTableau>> parts(nfirst);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < nfirst; ++i) {
        const Piece& P = first.pieces[i];
        if (P.cells() + S.min_rest[1] > degree_bound) continue;
        std::vector<std::size_t> idx(L, 0);
        idx[0] = i;
        std::vector<Piece> cur;
        cur.reserve(L);
        cur.push_back(P);
        dfs(S, 1, cur, idx, P.cells(), parts[i]);
    }
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    sort_canonical(out, A);
    return out;
}

}  // namespace

std::vector<OspTableau> enumerate(const PShape& s, const Alphabet& A, int degree_bound, bool parallel) {
    return run(s, A, degree_bound, parallel);
}

std::vector<OspTableau> enumerate_serial(const PShape& s, const Alphabet& A, int degree_bound) {
    return run(s, A, degree_bound, false);
}

void sort_canonical(std::vector<OspTableau>& v, const Alphabet& A) {
    std::vector<std::pair<std::pair<std::vector<int>, std::string>, std::size_t>> keys;
    keys.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto c = v[i].content();
        std::vector<int> w;
        for (auto x : A.letters) w.push_back(c.count(x) ? c[x] : 0);
        keys.push_back({{w, to_string(v[i])}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<OspTableau> out;
    out.reserve(v.size());
    for (auto& k : keys) out.push_back(std::move(v[k.second]));
    v = std::move(out);
}

std::string to_string(const Piece& p) {
    if (p.spin) return "sp" + to_string(p.R);
    return "(" + to_string(p.L) + "|" + to_string(p.R) + ")";
}

std::string to_string(const OspTableau& T) {
    std::string s;
    for (std::size_t k = T.pieces.size(); k-- > 0;) {
        s += to_string(T.pieces[k]);
        if (k) s += " ";
    }
    return s;
}

}  // namespace osp
