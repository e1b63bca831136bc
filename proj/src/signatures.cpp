#include "osp/signatures.hpp"

#include <algorithm>
#include <stdexcept>

namespace osp {

SignSequence reduce(const SignSequence& s) {
    SignSequence r = s;
    std::vector<std::size_t> open;  // unmatched + positions
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 1) open.push_back(i);
        else if (r[i] == -1 && !open.empty()) {
            r[open.back()] = 0;
            r[i] = 0;
            open.pop_back();
        }
    }
    return r;
}

Signature count(const SignSequence& reduced) {
    Signature g;
    for (int x : reduced) {
        if (x == -1) ++g.a;
        if (x == 1) ++g.b;
    }
    return g;
}

SignSequence k_sequence(const Word& w, int k) {
    SignSequence s(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::integer(k)) s[i] = 1;
        else if (w[i] == Letter::integer(k + 1)) s[i] = -1;
    }
    return s;
}

Signature k_signature(const Word& w, int k) { return count(reduce(k_sequence(w, k))); }

Word r_op(const Word& w, int k) {
    SignSequence red = reduce(k_sequence(w, k));
    Signature g = count(red);
    Word out = w;
    if (g.a <= g.b) {
        int left = g.b - g.a;
        for (std::size_t i = 0; i < out.size() && left > 0; ++i)
            if (red[i] == 1) {
                out[i] = Letter::integer(k + 1);
                --left;
            }
    } else {
        int left = g.a - g.b;
        for (std::size_t i = out.size(); i-- > 0 && left > 0;)
            if (red[i] == -1) {
                out[i] = Letter::integer(k);
                --left;
            }
    }
    return out;
}

Word varrho_op(const Word& w, int k) {
    SignSequence red = reduce(k_sequence(w, k));
    Word out = w;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (red[i] == -1) out[i] = Letter::integer(k);
    return out;
}

Tableau refill(const Tableau& shape_of, const Word& w) {
    Tableau T = shape_of;
    std::size_t p = 0;
    for (std::size_t j = T.cols.size(); j-- > 0;)
        for (auto& x : T.cols[j]) x = w.at(p++);
    return T;
}

Tableau r_op(const Tableau& T, int k) { return refill(T, r_op(reading_word(T), k)); }
Tableau varrho_op(const Tableau& T, int k) { return refill(T, varrho_op(reading_word(T), k)); }

std::pair<Column, Column> r_matrix(const Column& S, const Column& T) {
    if (S.size() < T.size()) throw std::invalid_argument("r_matrix needs ht(S) >= ht(T)");
    std::vector<bool> taken(S.size(), false);
    Column sel;
    for (int u = 1; u <= height(T); ++u) {
        Letter t = from_bottom(T, u);
        int best = -1;
        // scan from the bottom so the lowest among equal maxima wins
        for (int i = static_cast<int>(S.size()) - 1; i >= 0; --i) {
            if (taken[i]) continue;
            bool ok = t.parity() == 0 ? S[i] <= t : S[i] < t;
            if (ok && (best < 0 || S[best] < S[i])) best = i;
        }
        if (best < 0)
            for (int i = static_cast<int>(S.size()) - 1; i >= 0; --i)
                if (!taken[i] && (best < 0 || S[best] < S[i])) best = i;
        taken[best] = true;
        sel.push_back(S[best]);
    }
    Column rest;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (!taken[i]) rest.push_back(S[i]);
    rest.insert(rest.end(), T.begin(), T.end());
    std::sort(sel.begin(), sel.end());
    std::sort(rest.begin(), rest.end());
    return {sel, rest};
}

Signature pair_signature(const Column& S1, const Column& S2) {
    return k_signature(recording_pair(S1, S2, Tableau{}, 1).Q, 1);
}

}  // namespace osp
