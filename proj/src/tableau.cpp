#include "osp/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace osp {

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p[0]; ++j) {
        int h = 0;
        while (h < static_cast<int>(p.size()) && p[h] > j) ++h;
        c.push_back(h);
    }
    return c;
}

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition normalize(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

static void parts_rec(int n, int max_part, int max_parts, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        parts_rec(n - k, k, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    Partition cur;
    parts_rec(n, max_part < 0 ? n : max_part, max_parts < 0 ? n + 1 : max_parts, cur, out);
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

int height(const Column& S) { return static_cast<int>(S.size()); }

bool is_column(const Column& S) {
    for (std::size_t i = 1; i < S.size(); ++i) {
        if (S[i] < S[i - 1]) return false;
        if (S[i] == S[i - 1] && S[i].parity() == 0) return false;
    }
    return true;
}

int Tableau::cells() const {
    int s = 0;
    for (auto& c : cols) s += static_cast<int>(c.size());
    return s;
}

std::vector<int> Tableau::heights() const {
    std::vector<int> h;
    for (auto& c : cols) h.push_back(static_cast<int>(c.size()));
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

Partition Tableau::shape() const {
    Partition h;
    for (std::size_t j = 0; j < cols.size(); ++j) h.push_back(top(j) + static_cast<int>(cols[j].size()));
    return conjugate(normalize(h));
}

Letter Tableau::at(int row, int col) const {
    const Column& c = cols.at(col);
    int i = row - top(col);
    if (i < 0 || i >= static_cast<int>(c.size())) throw std::out_of_range("cell outside tableau");
    return c[i];
}

Tableau two_column(const Column& L, const Column& R, int b) {
    return Tableau{{L, R}, {b, 0}};
}

bool is_semistandard(const Tableau& T) {
    if (!T.offset.empty() && T.offset.size() != T.cols.size())
        throw std::invalid_argument("offset vector does not match columns");
    int prev_top = -1, prev_bot = -1;
    bool first = true;
    for (std::size_t j = 0; j < T.cols.size(); ++j) {
        if (!is_column(T.cols[j])) return false;
        if (T.cols[j].empty()) continue;
        int t = T.top(j), b = t + static_cast<int>(T.cols[j].size());
        if (!first && (t > prev_top || b > prev_bot)) return false;
        first = false;
        prev_top = t;
        prev_bot = b;
    }
    for (std::size_t j = 0; j + 1 < T.cols.size(); ++j) {
        const Column& A = T.cols[j];
        const Column& B = T.cols[j + 1];
        int ta = T.top(j), tb = T.top(j + 1);
        int lo = std::max(ta, tb);
        int hi = std::min(ta + static_cast<int>(A.size()), tb + static_cast<int>(B.size()));
        for (int r = lo; r < hi; ++r) {
            Letter x = A[r - ta], y = B[r - tb];
            if (y < x) return false;
            if (x == y && x.parity() == 1) return false;
        }
    }
    return true;
}

Word reading_word(const Tableau& T) {
    Word w;
    for (std::size_t j = T.cols.size(); j-- > 0;) w.insert(w.end(), T.cols[j].begin(), T.cols[j].end());
    return w;
}

Word reverse_word(const Tableau& T) {
    Word w = reading_word(T);
    std::reverse(w.begin(), w.end());
    return w;
}

Cell column_insert(Tableau& T, Letter a) {
    for (std::size_t j = 0;; ++j) {
        if (j == T.cols.size()) {
            T.cols.emplace_back();
            if (!T.offset.empty()) T.offset.push_back(0);
        }
        Column& c = T.cols[j];
        auto it = a.parity() == 0 ? std::lower_bound(c.begin(), c.end(), a)
                                  : std::upper_bound(c.begin(), c.end(), a);
        if (it == c.end()) {
            c.push_back(a);
            return Cell{static_cast<int>(c.size()) - 1, static_cast<int>(j)};
        }
        std::swap(*it, a);
    }
}

void insert_word(Tableau& T, const Word& w, std::vector<Cell>* created) {
    for (Letter a : w) {
        Cell c = column_insert(T, a);
        if (created) created->push_back(c);
    }
}

Tableau insert_tableau(const Tableau& S, const Tableau& T) {
    Tableau P = T;
    insert_word(P, reading_word(S));
    while (!P.cols.empty() && P.cols.back().empty()) {
        P.cols.pop_back();
        if (!P.offset.empty()) P.offset.pop_back();
    }
    return P;
}

Letter uninsert(Tableau& T, Cell c) {
    if (c.col >= static_cast<int>(T.cols.size()) ||
        static_cast<int>(T.cols[c.col].size()) != c.row + 1)
        throw std::runtime_error("reverse bumping: cell is not at the bottom of its column");
    if (c.col + 1 < static_cast<int>(T.cols.size()) &&
        static_cast<int>(T.cols[c.col + 1].size()) > c.row)
        throw std::runtime_error("reverse bumping: cell is not a corner");
    Letter x = T.cols[c.col].back();
    T.cols[c.col].pop_back();
    while (!T.cols.empty() && T.cols.back().empty()) T.cols.pop_back();
    for (int j = c.col - 1; j >= 0; --j) {
        Column& col = T.cols[j];
        int pick = -1;
        for (int i = static_cast<int>(col.size()) - 1; i >= 0; --i) {
            Letter y = col[i];
            if (y.parity() == 0 ? y <= x : y < x) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw std::runtime_error("reverse bumping failed");
        std::swap(col[pick], x);
    }
    return x;
}

Word inverse_insertion(Tableau P, const std::vector<Cell>& cells) {
    Word w;
    for (std::size_t i = cells.size(); i-- > 0;) w.push_back(uninsert(P, cells[i]));
    std::reverse(w.begin(), w.end());
    return w;
}

RecordingPair recording_pair(const Column& S1, const Column& S2, const Tableau& U, int k) {
    RecordingPair rp;
    rp.P = U;
    rp.P.offset.clear();
    std::vector<Cell> c2, c1;
    insert_word(rp.P, S2, &c2);
    insert_word(rp.P, S1, &c1);
    std::map<std::pair<int, int>, int> label;
    for (auto& c : c2) label[{c.row, c.col}] = k;
    for (auto& c : c1) label[{c.row, c.col}] = k + 1;
    rp.cells = c2;
    rp.cells.insert(rp.cells.end(), c1.begin(), c1.end());

    Partition urows = U.shape();
    Partition prows = rp.P.shape();
    for (std::size_t r = 0; r < prows.size(); ++r) {
        int from = r < urows.size() ? urows[r] : 0;
        Column qc;
        for (int c = from; c < prows[r]; ++c) qc.push_back(Letter::integer(label.at({static_cast<int>(r), c})));
        rp.Q.cols.push_back(qc);
        rp.Q.offset.push_back(from);
    }
    return rp;
}

Tableau from_rows(const std::vector<std::vector<Letter>>& rows) {
    Tableau T;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c >= T.cols.size()) T.cols.resize(c + 1);
            if (T.cols[c].size() != r) throw std::invalid_argument("rows do not form a straight shape");
            T.cols[c].push_back(rows[r][c]);
        }
    return T;
}

std::vector<std::vector<Letter>> to_rows(const Tableau& T) {
    std::vector<std::vector<Letter>> rows;
    for (std::size_t j = 0; j < T.cols.size(); ++j)
        for (std::size_t i = 0; i < T.cols[j].size(); ++i) {
            std::size_t r = T.top(j) + i;
            if (r >= rows.size()) rows.resize(r + 1);
            rows[r].push_back(T.cols[j][i]);
        }
    return rows;
}

std::string to_string(const Tableau& T) {
    std::string s = "{";
    for (std::size_t j = 0; j < T.cols.size(); ++j) {
        if (j) s += ",";
        if (T.top(j)) s += std::to_string(T.top(j)) + ":";
        s += to_string(T.cols[j]);
    }
    return s + "}";
}

}  // namespace osp
