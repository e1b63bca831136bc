#include "osp/kn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "osp/characters.hpp"
#include "osp/crystal.hpp"

namespace osp {

static int kn_key(Letter x) {
    if (x.is_integer()) return x.index();
    if (x.is_zero()) return 1000;
    if (x.is_bar()) return 2000 - x.index();
    throw std::invalid_argument("not a KN letter: " + to_string(x));
}

bool kn_less(Letter x, Letter y) { return kn_key(x) < kn_key(y); }

std::vector<int> KNTableau::heights() const {
    std::vector<int> h;
    for (auto& c : cols) h.push_back(static_cast<int>(c.entries.size()));
    return h;
}

static void check_even(const Column& c, int m) {
    for (auto x : c)
        if (!x.is_bar() || x.index() > m) throw std::invalid_argument("KN conversion needs letters of J_{m+0}");
}

KNColumn to_kn_column(const Piece& T, G g, int m) {
    check_even(T.L, m);
    check_even(T.R, m);
    KNColumn out;
    if (T.spin) {
        out.spin = true;
        for (int k = 1; k <= m; ++k) {
            bool minus = std::find(T.R.begin(), T.R.end(), Letter::bar(k)) != T.R.end();
            out.entries.push_back(minus ? Letter::bar(k) : Letter::integer(k));
        }
        std::sort(out.entries.begin(), out.entries.end(), kn_less);
        return out;
    }
    Split sp = split(T);
    for (int k = 1; k <= m; ++k)
        if (std::find(sp.R.begin(), sp.R.end(), Letter::bar(k)) == sp.R.end()) out.entries.push_back(Letter::integer(k));
    if (g != G::c) {
        int zeros = T.a + height(T.R) - height(T.L);
        for (int i = 0; i < zeros; ++i) out.entries.push_back(Letter::zero());
    }
    out.entries.insert(out.entries.end(), sp.L.begin(), sp.L.end());
    return out;
}

KNTableau to_kn_tableau(const OspTableau& T, int m) {
    KNTableau K;
    for (std::size_t k = T.pieces.size(); k-- > 0;) K.cols.push_back(to_kn_column(T.pieces[k], T.shape.g, m));
    auto h = K.heights();
    for (std::size_t j = 1; j < h.size(); ++j)
        if (h[j] > h[j - 1]) throw std::logic_error("converted columns do not form a Young diagram");
    return K;
}

Piece from_kn_column(const KNColumn& c, G g, int m, int a) {
    if (c.spin) {
        Column R;
        for (auto x : c.entries)
            if (x.is_bar()) R.push_back(x);
        std::sort(R.begin(), R.end());
        return Piece{{}, R, 0, true};
    }
    std::set<int> sigma;
    int zeros = 0;
    Column lL, lR;
    for (auto x : c.entries) {
        if (x.is_integer()) sigma.insert(x.index());
        else if (x.is_zero()) ++zeros;
        else lL.push_back(x);
    }
    if (g == G::c && zeros) throw std::invalid_argument("zero entries in a type C column");
    if (static_cast<int>(c.entries.size()) != m - a) throw std::invalid_argument("KN column height is not m - a");
    for (int k = m; k >= 1; --k)
        if (!sigma.count(k)) lR.push_back(Letter::bar(k));
    std::sort(lL.begin(), lL.end());
    const int b = zeros, cc = height(lL);
    Tableau P{{lR}, {}};
    insert_word(P, lL);
    std::vector<Cell> created;
    for (std::size_t j = 0; j < P.cols.size(); ++j)
        for (int r = 0; r < height(P.cols[j]); ++r)
            if (j > 0 || r >= b + cc) created.push_back(Cell{r, static_cast<int>(j)});
    std::sort(created.begin(), created.end(), [](const Cell& x, const Cell& y) { return x.row < y.row; });
    for (std::size_t i = 1; i < created.size(); ++i)
        if (created[i].row == created[i - 1].row) throw std::runtime_error("KN column does not come from a piece");
    Column L;
    for (auto it = created.rbegin(); it != created.rend(); ++it) L.insert(L.begin(), uninsert(P, *it));
    Column R = P.cols.empty() ? Column{} : P.cols[0];
    return Piece{L, R, a, false};
}

OspTableau from_kn_tableau(const KNTableau& K, const PShape& s, int m) {
    OspTableau T{s, {}};
    const int L = tuple_length(s);
    if (static_cast<int>(K.cols.size()) != L) throw std::invalid_argument("KN tableau has the wrong number of columns");
    for (int k = 1; k <= L; ++k) T.pieces.push_back(from_kn_column(K.cols[L - k], s.g, m, piece_a(s, k)));
    if (!is_osp_tableau(T, standard_alphabet(AlphabetKind::JPlus, m, 0)))
        throw std::runtime_error("KN tableau does not come from an orthosymplectic tableau");
    return T;
}

std::vector<int> kn_weight(const KNTableau& K, int m) {
    std::vector<int> w(m, 0);
    for (auto& c : K.cols) {
        int unit = c.spin ? 1 : 2;
        for (auto x : c.entries) {
            if (x.is_integer()) w[x.index() - 1] += unit;
            else if (x.is_bar()) w[x.index() - 1] -= unit;
        }
    }
    return w;
}

std::string to_string(const KNColumn& c) { return (c.spin ? "sp" : "") + to_string(c.entries); }

std::string to_string(const KNTableau& K) {
    std::string s;
    for (std::size_t j = 0; j < K.cols.size(); ++j) s += (j ? " " : "") + to_string(K.cols[j]);
    return s;
}

KNReport verify_kn_correspondence(const PShape& s, int m) {
    KNReport rep;
    auto fail = [&](const std::string& w) {
        if (rep.ok) rep.witness = w;
        rep.ok = false;
    };
    if (s.g == G::bb) throw std::invalid_argument("KN correspondence is for g = b or c");
    Alphabet A = standard_alphabet(AlphabetKind::JPlus, m, 0);
    auto E = enumerate(s, A, -1);
    rep.count = E.size();
    std::set<KNTableau> seen;
    bool first = true;
    for (auto& T : E) {
        KNTableau K = to_kn_tableau(T, m);
        if (first) rep.heights = K.heights();
        first = false;
        if (K.heights() != rep.heights) fail("ragged shapes at " + to_string(T));
        if (!seen.insert(K).second) fail("two tableaux map to " + to_string(K));
        try {
            if (!(from_kn_tableau(K, s, m) == T)) fail("inverse conversion differs at " + to_string(T));
        } catch (const std::exception& e) {
            fail(std::string("inverse conversion failed at ") + to_string(T) + ": " + e.what());
        }
        if (kn_weight(K, m) != classical_weight(T, m)) fail("weight dictionary broken at " + to_string(T));
    }
    rep.highest_weight2 = kn_weight(to_kn_tableau(highest_element(s, A), m), m);
    rep.weyl_dim = weyl_dimension(s.g == G::c ? Classical::C : Classical::B, m, rep.highest_weight2);
    if (static_cast<long long>(rep.count) != rep.weyl_dim)
        fail(std::to_string(rep.count) + " tableaux but dimension " + std::to_string(rep.weyl_dim));
    return rep;
}

}  // namespace osp
