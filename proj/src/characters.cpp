#include "osp/characters.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace osp {

void WeightPolynomial::add(const std::vector<int>& e, long long c) {
    if (c == 0) return;
    auto& v = terms[e];
    v += c;
    if (v == 0) terms.erase(e);
}

void WeightPolynomial::add(const WeightPolynomial& o) {
    if (vars.empty()) vars = o.vars;
    if (!o.terms.empty() && o.vars != vars) throw std::invalid_argument("weight polynomials over different variables");
    for (auto& [e, c] : o.terms) add(e, c);
}

WeightPolynomial WeightPolynomial::scaled(long long c, int z_shift) const {
    WeightPolynomial r{vars, {}};
    for (auto& [key, v] : terms) {
        auto e = key;
        e[0] += z_shift;
        r.add(e, v * c);
    }
    return r;
}

int WeightPolynomial::degree(const std::vector<int>& e) const { return std::accumulate(e.begin() + 1, e.end(), 0); }

std::vector<int> exponent_of(const std::map<Letter, int>& content, const std::vector<Letter>& vars, int z) {
    std::vector<int> e{z};
    for (auto x : vars) {
        auto it = content.find(x);
        e.push_back(it == content.end() ? 0 : it->second);
    }
    return e;
}

std::string to_string(const WeightPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (auto& [e, c] : p.terms) {
        if (!first) o << " + ";
        first = false;
        bool mono = false;
        if (c != 1) {
            o << c;
            mono = true;
        }
        auto factor = [&](const std::string& v, int k) {
            if (k == 0) return;
            if (mono) o << "*";
            o << v;
            if (k != 1) o << "^" << k;
            mono = true;
        };
        factor("z", e[0]);
        for (std::size_t i = 0; i < p.vars.size(); ++i) factor("x[" + to_string(p.vars[i]) + "]", e[i + 1]);
        if (!mono) o << "1";
    }
    return o.str();
}

std::string to_csv(const WeightPolynomial& p) {
    std::ostringstream o;
    o << "z";
    for (auto x : p.vars) o << "," << to_string(x);
    o << ",coefficient\n";
    for (auto& [e, c] : p.terms) {
        for (std::size_t i = 0; i < e.size(); ++i) o << (i ? "," : "") << e[i];
        o << "," << c << "\n";
    }
    return o.str();
}

std::string to_json(const WeightPolynomial& p) {
    nlohmann::ordered_json j;
    j["variables"] = nlohmann::ordered_json::array();
    for (auto x : p.vars) j["variables"].push_back(to_string(x));
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& [e, c] : p.terms)
        j["terms"].push_back({{"z", e[0]}, {"exponents", std::vector<int>(e.begin() + 1, e.end())}, {"coefficient", c}});
    return j.dump(2) + "\n";
}

namespace {

struct SstFill {
    const Partition& mu;
    const std::vector<Letter>& letters;
    std::vector<std::vector<Letter>> rows;
    std::vector<Tableau>& out;

    void go(std::size_t r, std::size_t c) {
        if (r == mu.size()) {
            out.push_back(from_rows(rows));
            return;
        }
        if (static_cast<int>(c) == mu[r]) {
            go(r + 1, 0);
            return;
        }
        for (auto x : letters) {
            if (c > 0) {
                Letter l = rows[r][c - 1];
                if (x < l || (x == l && x.parity() == 1)) continue;
            }
            if (r > 0) {
                Letter u = rows[r - 1][c];
                if (x < u || (x == u && x.parity() == 0)) continue;
            }
            rows[r].push_back(x);
            go(r, c + 1);
            rows[r].pop_back();
        }
    }
};

}  // namespace

std::vector<Tableau> sst(const Partition& mu, const Alphabet& A) {
    std::vector<Tableau> out;
    SstFill f{mu, A.letters, std::vector<std::vector<Letter>>(mu.size()), out};
    f.go(0, 0);
    return out;
}

static std::map<Letter, int> tableau_content(const Tableau& T) {
    std::map<Letter, int> c;
    for (auto& col : T.cols)
        for (auto x : col) ++c[x];
    return c;
}

WeightPolynomial schur(const Partition& mu, const Alphabet& A, int degree_bound) {
    WeightPolynomial p{A.letters, {}};
    if (degree_bound >= 0 && size(mu) > degree_bound) return p;
    for (auto& T : sst(mu, A)) p.add(exponent_of(tableau_content(T), A.letters, 0), 1);
    return p;
}

WeightPolynomial osp_character(const PShape& s, const Alphabet& A, int degree_bound) {
    WeightPolynomial p{A.letters, {}};
    for (auto& T : enumerate(s, A, degree_bound)) p.add(exponent_of(T.content(), A.letters, s.ell), 1);
    return p;
}

bool is_kostka(const Tableau& Q, const PShape& s) {
    const int L = tuple_length(s);
    std::vector<int> m(2 * L + 3, 0);
    for (auto& col : Q.cols)
        for (auto x : col) {
            if (!x.is_integer() || x.index() > 2 * L) return false;
            ++m[x.index()];
        }
    if (!is_semistandard(Q)) return false;
    auto lp = [&](int k) { return k >= 1 && k <= L ? piece_a(s, k) : 0; };
    auto sig = [&](const Tableau& T, int k) { return k_signature(T, k); };
    if (s.g == G::c) {
        for (int k = 1; k <= L; ++k) {
            if (m[2 * k] - m[2 * k - 1] != lp(k)) return false;
            if (sig(Q, 2 * k - 1) != Signature{lp(k), 0}) return false;
        }
        for (int k = 1; k <= L - 1; ++k) {
            int d = m[2 * k] - m[2 * k + 2];
            if (d < 0) return false;
            if (sig(r_op(Q, 2 * k + 1), 2 * k) != Signature{0, d}) return false;
            Signature g = sig(r_op(Q, 2 * k - 1), 2 * k);
            int p = lp(k) - lp(k + 1) - g.a;
            if (p < 0 || d - g.b != p) return false;
        }
        return true;
    }
    if (has_spin_slot(s) && m[2 * L] != 0) return false;
    for (int k = 1; k <= L; ++k) {
        int t = m[2 * k] - lp(k);
        if (t < 0 || m[2 * k - 1] < t) return false;
        if (sig(Q, 2 * k - 1) != Signature{lp(k), m[2 * k - 1] - m[2 * k] + lp(k)}) return false;
    }
    for (int k = 1; k <= L - 1; ++k) {
        int d = m[2 * k] - m[2 * k + 1] - lp(k + 1);
        if (d < 0) return false;
        if (sig(varrho_op(Q, 2 * k + 1), 2 * k) != Signature{0, d}) return false;
        Signature g = sig(varrho_op(Q, 2 * k - 1), 2 * k);
        int p = lp(k) - lp(k + 1) - g.a;
        if (p < 0 || d - g.b != p) return false;
    }
    return true;
}

std::vector<Tableau> kostka_set(const Partition& mu, const PShape& s) {
    const int L = tuple_length(s);
    std::vector<Letter> labels;
    for (int j = 1; j <= 2 * L; ++j) labels.push_back(Letter::integer(j));
    std::vector<Tableau> out;
    for (auto& Q : sst(mu, custom_alphabet(labels)))
        if (is_kostka(Q, s)) out.push_back(Q);
    return out;
}

PsiImage psi(const OspTableau& T) {
    PsiImage r;
    int label = 0;
    auto step = [&](const Column& c) {
        ++label;
        std::vector<Cell> created;
        insert_word(r.P, c, &created);
        for (auto& cell : created) {
            if (static_cast<int>(r.Q.cols.size()) <= cell.row) r.Q.cols.resize(cell.row + 1);
            r.Q.cols[cell.row].push_back(Letter::integer(label));
        }
    };
    for (auto& p : T.pieces) {
        step(p.R);
        step(p.L);
    }
    return r;
}

OspTableau psi_inverse(const PsiImage& pq, const PShape& s, const Alphabet& A) {
    const int L = tuple_length(s);
    // P has shape mu', so its rows match the columns of Q
    std::vector<int> qcol;
    for (auto& c : pq.Q.cols) qcol.push_back(static_cast<int>(c.size()));
    while (!qcol.empty() && qcol.back() == 0) qcol.pop_back();
    if (pq.P.shape() != qcol) throw std::runtime_error("psi inverse: shapes of P and Q do not match");
    for (auto& col : pq.Q.cols)
        for (auto x : col)
            if (!x.is_integer() || x.index() > 2 * L) throw std::runtime_error("psi inverse: label out of range");
    Tableau P = pq.P;
    P.offset.clear();
    std::vector<Column> words(2 * L);
    for (int label = 2 * L; label >= 1; --label) {
        std::vector<Cell> cells;
        for (std::size_t r = 0; r < pq.Q.cols.size(); ++r) {
            const Column& qc = pq.Q.cols[r];
            for (std::size_t i = 0; i < qc.size(); ++i)
                if (qc[i] == Letter::integer(label)) cells.push_back(Cell{static_cast<int>(r), static_cast<int>(i)});
        }
        Column w;
        for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
            try {
                w.insert(w.begin(), uninsert(P, *it));
            } catch (const std::exception& e) {
                throw std::runtime_error(std::string("psi inverse failed: ") + e.what());
            }
        }
        words[label - 1] = w;
    }
    OspTableau T{s, {}};
    for (int k = 1; k <= L; ++k) {
        bool spin = has_spin_slot(s) && k == L;
        Piece p{words[2 * k - 1], words[2 * k - 2], piece_a(s, k), spin};
        if (spin && !p.L.empty()) throw std::runtime_error("psi inverse: spin slot has a left column");
        if (!is_column(p.L) || !is_column(p.R)) throw std::runtime_error("psi inverse: recovered words are not columns");
        T.pieces.push_back(p);
    }
    if (!is_osp_tableau(T, A)) throw std::runtime_error("psi inverse: result is not an orthosymplectic tableau");
    return T;
}

ExpandReport schur_expand(const PShape& s, const Alphabet& A, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("schur_expand needs a degree bound");
    ExpandReport rep;
    rep.lhs = osp_character(s, A, degree_bound);
    rep.lhs.vars = A.letters;
    rep.rhs = WeightPolynomial{A.letters, {}};
    const int L = tuple_length(s);
    std::vector<Partition> mus;
    for (int d = 0; d <= degree_bound; ++d)
        for (auto& mu : partitions_of(d, 2 * L)) mus.push_back(mu);
    std::vector<int> K(mus.size(), 0);
    const int nm = static_cast<int>(mus.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nm; ++i) K[i] = static_cast<int>(kostka_set(mus[i], s).size());
    for (int i = 0; i < nm; ++i) {
        if (K[i] == 0) continue;
        rep.kostka.push_back({mus[i], K[i]});
        rep.rhs.add(schur(conjugate(mus[i]), A, degree_bound).scaled(K[i], s.ell));
    }
    if (!(rep.lhs == rep.rhs)) {
        rep.ok = false;
        for (auto& [e, c] : rep.lhs.terms) {
            auto it = rep.rhs.terms.find(e);
            long long r = it == rep.rhs.terms.end() ? 0 : it->second;
            if (r != c) {
                WeightPolynomial one{A.letters, {}};
                one.add(e, 1);
                rep.witness = "coefficient of " + to_string(one) + ": " + std::to_string(c) + " vs " + std::to_string(r);
                return rep;
            }
        }
        for (auto& [e, c] : rep.rhs.terms)
            if (!rep.lhs.terms.count(e)) {
                WeightPolynomial one{A.letters, {}};
                one.add(e, 1);
                rep.witness = "coefficient of " + to_string(one) + ": 0 vs " + std::to_string(c);
                return rep;
            }
    }
    return rep;
}

namespace {

std::vector<std::vector<int>> positive_roots(Classical t, int m) {
    std::vector<std::vector<int>> R;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> a(m, 0), b(m, 0);
            a[i] = 2, a[j] = -2;
            b[i] = 2, b[j] = 2;
            R.push_back(a);
            R.push_back(b);
        }
    for (int i = 0; i < m; ++i) {
        std::vector<int> a(m, 0);
        a[i] = t == Classical::B ? 2 : 4;
        R.push_back(a);
    }
    return R;
}

std::vector<int> rho2(Classical t, int m) {
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = t == Classical::B ? 2 * (m - i) - 1 : 2 * (m - i);
    return r;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b, int k = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

void check_hw(Classical t, int m, const std::vector<int>& hw2) {
    if (static_cast<int>(hw2.size()) != m) throw std::invalid_argument("highest weight must have m coordinates");
    for (int i = 0; i < m; ++i) {
        if (hw2[i] < 0 || (i + 1 < m && hw2[i] < hw2[i + 1])) throw std::invalid_argument("highest weight not dominant");
        if ((hw2[i] - hw2[0]) % 2) throw std::invalid_argument("highest weight not integral");
        if (t == Classical::C && hw2[i] % 2) throw std::invalid_argument("type C weights are integral");
    }
}

}  // namespace

long long weyl_dimension(Classical t, int m, const std::vector<int>& hw2) {
    check_hw(t, m, hw2);
    auto rho = rho2(t, m);
    auto lr = plus(hw2, rho);
    // exact: accumulate as a reduced fraction
    long long num = 1, den = 1;
    for (auto& a : positive_roots(t, m)) {
        num *= dot(lr, a);
        den *= dot(rho, a);
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw std::logic_error("Weyl dimension is not an integer");
    return num;
}

WeylCharacter weyl_oracle_doubled(Classical t, int m, const std::vector<int>& hw2) {
    check_hw(t, m, hw2);
    WeylCharacter ch;
    auto roots = positive_roots(t, m);
    auto rho = rho2(t, m);
    const int top = hw2.empty() ? 0 : hw2[0];
    // all candidate weights in the box |v_i| <= top with the parity of hw2
    std::vector<std::vector<int>> cand;
    std::vector<int> v(m);
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            cand.push_back(v);
            return;
        }
        for (int x = -top; x <= top; x += 2) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    // any functional positive on positive roots orders the recursion
    auto height = [&](const std::vector<int>& w) {
        long long h = 0;
        for (int i = 0; i < m; ++i) h += static_cast<long long>(m - i) * w[i];
        return h;
    };
    std::stable_sort(cand.begin(), cand.end(), [&](auto& a, auto& b) { return height(a) > height(b); });
    auto lr = plus(hw2, rho);
    const long long norm = dot(lr, lr);
    for (auto& mu : cand) {
        if (mu == hw2) {
            ch.mult[mu] = 1;
            continue;
        }
        long long num = 0;
        for (auto& a : roots)
            for (int k = 1;; ++k) {
                auto w = plus(mu, a, k);
                if (height(w) > height(hw2)) break;
                auto it = ch.mult.find(w);
                if (it != ch.mult.end()) num += it->second * dot(w, a);
            }
        if (num == 0) continue;
        auto mr = plus(mu, rho);
        long long den = norm - dot(mr, mr);
        if (den <= 0 || (2 * num) % den) throw std::logic_error("Freudenthal recursion broke down");
        ch.mult[mu] = 2 * num / den;
    }
    for (auto& [w, k] : ch.mult) ch.dim += k;
    return ch;
}

WeylCharacter weyl_oracle(Classical t, int m, const Partition& hw) {
    if (static_cast<int>(hw.size()) > m) throw std::invalid_argument("highest weight has more than m parts");
    std::vector<int> hw2(m, 0);
    for (std::size_t i = 0; i < hw.size(); ++i) hw2[i] = 2 * hw[i];
    return weyl_oracle_doubled(t, m, hw2);
}

std::vector<int> classical_weight(const OspTableau& T, int m) {
    auto c = T.content();
    std::vector<int> v(m);
    for (int j = 1; j <= m; ++j) {
        int cj = c.count(Letter::bar(j)) ? c[Letter::bar(j)] : 0;
        v[j - 1] = T.shape.g == G::c ? 2 * (T.shape.ell - cj) : T.shape.ell - 2 * cj;
    }
    return v;
}

}  // namespace osp
