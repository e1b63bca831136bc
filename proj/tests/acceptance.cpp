#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "osp/characters.hpp"
#include "osp/crystal.hpp"
#include "osp/fock.hpp"
#include "osp/kn.hpp"

using namespace osp;

namespace {

struct Result {
    bool ok = true;
    std::vector<std::string> notes;
    int failures = 0;
    void fail(const std::string& s) {
        ok = false;
        if (++failures <= 12) notes.push_back("FAIL " + s);
    }
    void info(const std::string& s) { notes.push_back(s); }
    void check(bool c, const std::string& s) {
        if (!c) fail(s);
    }
};

Column col(std::initializer_list<const char*> l) {
    Column c;
    for (auto s : l) c.push_back(parse_letter(s));
    return c;
}

std::string pair_string(const Column& a, const Column& b) { return to_string(a) + " " + to_string(b); }

std::string name(const PShape& s) {
    return to_string(s.g) + "(" + to_string(s.lambda) + "," + std::to_string(s.ell) + ")";
}

std::vector<PShape> shapes(G g, int max_size, int max_ell) {
    std::vector<PShape> out;
    for (int ell = 1; ell <= max_ell; ++ell)
        for (int d = 0; d <= max_size; ++d)
            for (auto& lam : partitions_of(d)) {
                PShape s{g, lam, ell};
                if (in_P(s)) out.push_back(s);
            }
    return out;
}

// 5 letters with the parity pattern given by mask
Alphabet mixed_alphabet(int mask, int size = 5) {
    std::vector<Letter> v;
    int code = 0;
    for (int i = 0; i < size; ++i) {
        int want = (mask >> i) & 1;
        ++code;
        if ((code & 1) != want) ++code;
        v.push_back(Letter(code));
    }
    return custom_alphabet(v);
}

// ---- 1

Result c1() {
    Result r;
    Piece S{col({"b4", "b3", "b1", "1/2", "1/2"}), col({"b3", "b2", "3/2"}), 2, false};
    Piece T{col({"b3", "b1", "1/2", "3/2", "3/2", "5/2"}), col({"b4", "b3", "b2", "b1", "5/2"}), 3, false};
    Alphabet A = standard_alphabet(AlphabetKind::JSuper, 4, 3);
    r.check(is_member(S, G::b, 2, A), "S is not in T^b(2)");
    r.check(to_string(S) == "([b4,b3,b1,1/2,1/2]|[b3,b2,3/2])", "S prints as " + to_string(S));
    auto sS = split(S);
    std::string got = pair_string(sS.L, sS.R);
    if (got != "[b3,b1,1/2] [b4,b3,b2,1/2,3/2]")
        r.fail("(^LS,^RS) = " + got + ", printed [b3,b1,1/2] [b4,b3,b2,1/2,3/2]");
    r.check(is_member(T, G::b, 3, A), "T is not in T^b(3)");
    std::string ins = to_string(insert_column(T.L, Tableau{{T.R}, {}}));
    r.check(ins == "{[b4,b3,b2,b1,1/2,3/2,3/2,5/2],[b3,b1,5/2]}", "(T^L -> T^R) = " + ins);
    auto sT = split(T);
    got = pair_string(sT.L, sT.R);
    r.check(got == "[b3,b1,3/2] [b4,b3,b2,b1,1/2,3/2,5/2,5/2]", "(^LT,^RT) = " + got);
    r.check(is_admissible(S, T), "S < T fails");
    Piece c{col({"b5", "b3", "b2"}), col({"b4", "b1"}), 1, false};
    Piece b{col({"b5", "b3", "b1"}), col({"b5", "b4", "b1"}), 1, false};
    got = to_string(to_kn_column(c, G::c, 5));
    r.check(got == "[2,5,b5,b2]", "type C column " + got);
    got = to_string(to_kn_column(b, G::b, 5));
    r.check(got == "[2,0,b5,b1]", "type B column " + got);
    return r;
}

// ---- 2

Result c2() {
    Result r;
    long long shapes_checked = 0;
    for (int mask = 0; mask < 32 && r.ok; ++mask) {
        Alphabet A = mixed_alphabet(mask);
        auto cols = all_columns(A, 5);
        const int nc = static_cast<int>(cols.size());
        std::vector<std::string> bad(nc);
        long long cnt = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : cnt)
        for (int i = 0; i < nc; ++i) {
            for (int j = 0; j < nc && bad[i].empty(); ++j) {
                const Column &L = cols[i], &R = cols[j];
                Signature sg = pair_signature(L, R);
                int hl = height(L), hr = height(R);
                for (int c = 0; c <= std::min(hl, hr); ++c) {
                    int a = hl - c, b = hr - c;
                    bool ss = is_semistandard(two_column(L, R, b));
                    bool pred = false;
                    for (int p = 0; p <= std::min(a, b); ++p) pred = pred || sg == Signature{a - p, b - p};
                    ++cnt;
                    if (ss != pred) {
                        bad[i] = to_string(A) + " " + pair_string(L, R) + " c=" + std::to_string(c) +
                                 " semistandard=" + std::to_string(ss) + " signature=(" + std::to_string(sg.a) +
                                 "," + std::to_string(sg.b) + ")";
                        break;
                    }
                }
            }
        }
        shapes_checked += cnt;
        for (auto& s : bad)
            if (!s.empty()) {
                r.fail(s);
                break;
            }
    }
    r.info(std::to_string(shapes_checked) + " fillings over 32 parity patterns");
    return r;
}

// ---- 3

Tableau random_tableau(std::mt19937& rng, const Alphabet& A, int max_len) {
    Tableau U;
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    Word w;
    for (int t = 0; t < len; ++t) w.push_back(A.letters[rng() % A.size()]);
    insert_word(U, w);
    return U;
}

Result c3() {
    Result r;
    std::mt19937 rng(20240531);
    std::vector<Alphabet> alph;
    std::vector<std::vector<Column>> cols;
    for (int mask = 0; mask < 32; ++mask) {
        alph.push_back(mixed_alphabet(mask));
        cols.push_back(all_columns(alph.back(), 5));
    }
    for (int part = 1; part <= 2; ++part) {
        int done = 0, nontrivial = 0;
        while (done < 2000 && r.ok) {
            int t = rng() % 32;
            const auto& cs = cols[t];
            Column S1 = cs[rng() % cs.size()], S2 = cs[rng() % cs.size()];
            int k = 1 + static_cast<int>(rng() % 3);
            Tableau U = random_tableau(rng, alph[t], 6);
            Column T1, T2;
            if (part == 1) {
                if (height(S1) < height(S2) || !is_semistandard(two_column(S1, S2, 0))) continue;
                std::tie(T1, T2) = r_matrix(S1, S2);
            } else {
                Tableau ins = insert_column(S1, Tableau{{S2}, {}});
                if (ins.cols.size() > 2) continue;
                Column right = ins.cols.size() > 1 ? ins.cols[1] : Column{};
                std::tie(T1, T2) = r_matrix(ins.cols[0], right);
            }
            auto q1 = recording_pair(S1, S2, U, k);
            auto q2 = recording_pair(T1, T2, U, k);
            Tableau lhs = part == 1 ? r_op(q1.Q, k) : varrho_op(q1.Q, k);
            if (!(q1.P == q2.P) || !(lhs == q2.Q)) {
                r.fail(std::string(part == 1 ? "r_k" : "varrho_k") + ": S1=" + to_string(S1) + " S2=" + to_string(S2) +
                       " U=" + to_string(U) + " k=" + std::to_string(k) + " got " + to_string(lhs) + " want " +
                       to_string(q2.Q));
                break;
            }
            if (!(q1.Q == q2.Q)) ++nontrivial;
            ++done;
        }
        r.info(std::string(part == 1 ? "r_k" : "varrho_k") + ": " + std::to_string(done) + " instances, " +
               std::to_string(nontrivial) + " with Q changed");
    }
    return r;
}

// ---- 4

Result c4() {
    Result r;
    const int D = 6;
    std::vector<Alphabet> alphs{standard_alphabet(AlphabetKind::JSuper, 2, 1),
                                standard_alphabet(AlphabetKind::JPlus, 2, 0)};
    long long total = 0;
    for (G g : {G::b, G::bb, G::c})
        for (auto& s : shapes(g, 3, 2))
            for (auto& A : alphs) {
                if (!compatible(s, A.m, A.n, A.kind == AlphabetKind::JPlus)) continue;
                auto Ts = enumerate(s, A, D);
                std::set<std::pair<std::string, std::string>> images;
                for (auto& T : Ts) {
                    auto im = psi(T);
                    auto cT = T.content();
                    std::map<Letter, int> cP;
                    for (auto& c : im.P.cols)
                        for (auto x : c) ++cP[x];
                    std::string tag = name(s) + " over " + to_string(A) + " at " + to_string(T);
                    if (cP != cT) r.fail("weight not preserved, " + tag);
                    if (!is_semistandard(im.P)) r.fail("P not semistandard, " + tag);
                    if (!(conjugate(im.Q.shape()) == im.P.shape()) && !im.P.empty())
                        r.fail("P shape is not the conjugate of Q's, " + tag);
                    if (!is_kostka(im.Q, s)) r.fail("Q not in K, " + tag);
                    images.insert({to_string(im.P), to_string(im.Q)});
                    try {
                        if (!(psi_inverse(im, s, A) == T)) r.fail("round trip, " + tag);
                    } catch (const std::exception& e) {
                        r.fail(std::string("inverse threw ") + e.what() + ", " + tag);
                    }
                    if (!r.ok) return r;
                }
                if (images.size() != Ts.size()) r.fail("psi not injective on " + name(s));
                long long target = 0;
                for (int d = 0; d <= D; ++d)
                    for (auto& mu : partitions_of(d, 2 * tuple_length(s))) {
                        auto K = kostka_set(mu, s).size();
                        if (K) target += static_cast<long long>(K) * sst(conjugate(mu), A).size();
                    }
                if (target != static_cast<long long>(Ts.size()))
                    r.fail("surjectivity count " + name(s) + " over " + to_string(A) + ": " +
                           std::to_string(Ts.size()) + " vs " + std::to_string(target));
                total += Ts.size();
                if (!r.ok) return r;
            }
    r.info(std::to_string(total) + " tableaux");
    return r;
}

// ---- 5

Result c5() {
    Result r;
    std::mt19937 rng(7);
    const int D = 8;
    int count = 0;
    for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}})
        for (G g : {G::b, G::bb, G::c}) {
            Alphabet A = standard_alphabet(AlphabetKind::JSuper, m, n);
            std::vector<PShape> pool;
            for (auto& s : shapes(g, 4, 3))
                if (compatible(s, m, n, false)) pool.push_back(s);
            std::shuffle(pool.begin(), pool.end(), rng);
            if (pool.size() > 10) pool.resize(10);
            for (auto& s : pool) {
                auto e = schur_expand(s, A, D);
                ++count;
                if (!e.ok) r.fail(name(s) + " over " + to_string(A) + ": " + e.witness);
            }
        }
    r.info(std::to_string(count) + " shapes");
    return r;
}

// ---- 6

Result c6() {
    Result r;
    int checked = 0;
    for (int m : {2, 3})
        for (G g : {G::c, G::b}) {
            Classical t = g == G::c ? Classical::C : Classical::B;
            for (auto& s : shapes(g, 3 * m, 3)) {
                if (!compatible(s, m, 0, true)) continue;
                auto rep = verify_kn_correspondence(s, m);
                std::string tag = name(s) + " m=" + std::to_string(m);
                if (!rep.ok) {
                    r.fail(tag + ": " + rep.witness);
                    continue;
                }
                Alphabet A = standard_alphabet(AlphabetKind::JPlus, m, 0);
                auto Ts = enumerate(s, A, -1);
                auto W = weyl_oracle_doubled(t, m, rep.highest_weight2);
                std::map<std::vector<int>, long long> mult;
                for (auto& T : Ts) ++mult[classical_weight(T, m)];
                if (static_cast<long long>(Ts.size()) != W.dim) r.fail(tag + ": dimension");
                if (mult != W.mult) r.fail(tag + ": character");
                ++checked;
            }
        }
    auto four = enumerate(PShape{G::c, {1}, 1}, standard_alphabet(AlphabetKind::JPlus, 2, 0), -1).size();
    r.check(four == 4, "dim for (c, m=2, (1), 1) is " + std::to_string(four));
    for (int m : {2, 3}) {
        auto sp = enumerate(PShape{G::b, {}, 1}, standard_alphabet(AlphabetKind::JPlus, m, 0), -1).size();
        r.check(sp == (1u << m), "spin set has " + std::to_string(sp) + " elements for m=" + std::to_string(m));
    }
    r.info(std::to_string(checked) + " shapes");
    return r;
}

// ---- 7

Result c7() {
    Result r;
    int full = 0, trunc = 0;
    for (int m : {2, 3})
        for (G g : {G::b, G::bb, G::c})
            for (auto& s : shapes(g, 3 * m, 3)) {
                if (!compatible(s, m, 0, true)) continue;
                Alphabet A = standard_alphabet(AlphabetKind::JPlus, m, 0);
                auto H = highest_element(s, A);
                auto Gr = build_graph(H, A, Conv::Plus, -1);
                std::string tag = name(s) + " m=" + std::to_string(m);
                auto ax = verify_axioms(Gr);
                if (!ax.ok) r.fail(tag + ": " + ax.witness);
                auto cc = check_connected(Gr);
                if (cc.sources.size() != 1 || Gr.nodes[cc.sources[0]].pieces != H.pieces)
                    r.fail(tag + ": source is not unique or not H");
                if (Gr.size() != enumerate(s, A, -1).size()) r.fail(tag + ": graph misses tableaux");
                ++full;
            }
    const int D = 6;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (G g : {G::b, G::bb, G::c})
                for (auto& s : shapes(g, 4, 3)) {
                    if (!compatible(s, m, n, false)) continue;
                    Alphabet A = standard_alphabet(AlphabetKind::JSuper, m, n);
                    auto nodes = enumerate(s, A, D);
                    std::vector<std::string> esc;
                    auto Gr = graph_on(nodes, A, Conv::Super, D, &esc);
                    std::string tag = name(s) + " over " + to_string(A);
                    if (!esc.empty()) r.fail(tag + ": not closed, " + esc[0]);
                    auto ax = verify_axioms(Gr);
                    if (!ax.ok) r.fail(tag + ": " + ax.witness);
                    if (check_connected(Gr).components != 1) r.fail(tag + ": not connected");
                    auto H = highest_element(s, A);
                    if (Gr.find(H) < 0) r.fail(tag + ": H not found");
                    ++trunc;
                }
    r.info(std::to_string(full) + " full graphs, " + std::to_string(trunc) + " truncated node sets");
    return r;
}

// ---- 8

Result c8() {
    Result r;
    const int D = 5;
    for (FockG g : {FockG::c, FockG::b, FockG::d, FockG::bb})
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (g == FockG::d && m < 2) continue;
                auto S = make_space(g, m, n);
                std::string tag = to_string(g) + " " + std::to_string(m) + "|" + std::to_string(n);
                auto a = check_algebra_relations(S, D);
                if (!a.ok) r.fail(tag + " algebra: " + a.witness);
                auto u = check_uq_relations(S, D);
                if (!u.ok) r.fail(tag + " U_q: " + u.witness);
                if (m <= 2 && n <= 2) {
                    auto se = check_serre_relations(S, 4);
                    if (!se.ok) r.fail(tag + " Serre: " + se.witness);
                }
            }
    for (FockG g : {FockG::c, FockG::b, FockG::bb})
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n) {
                auto c = crystal_base_check(make_space(g, m, n), D);
                if (!c.ok)
                    r.fail(to_string(g) + " " + std::to_string(m) + "|" + std::to_string(n) +
                           " crystal base: " + c.witness);
            }
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            auto gl = check_gl_factorization(m, n, 4);
            if (!gl.ok) r.fail("gl factorization: " + gl.witness);
        }
    return r;
}

// ---- 9

Result c9() {
    Result r;
    int done = 0;
    for (FockG g : {FockG::b, FockG::bb})
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n)
                for (int a = 0; a <= m + 2; ++a) {
                    if (n == 0 && a > m) continue;
                    try {
                        auto h = highest_weight_vector_b(a, m, n, g);
                        ++done;
                        if (!h.table_agrees)
                            r.info(to_string(g) + " " + std::to_string(m) + "|" + std::to_string(n) + " a=" +
                                   std::to_string(a) + ": " + h.table_note);
                    } catch (const std::exception& e) {
                        r.fail(to_string(g) + " " + std::to_string(m) + "|" + std::to_string(n) + " a=" +
                               std::to_string(a) + ": " + e.what());
                    }
                }
    r.info(std::to_string(done) + " vectors");
    return r;
}

// ---- 10

Result c10() {
    Result r;
    const int D = 6;
    int count = 0;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (G g : {G::b, G::bb, G::c})
                for (auto& s : shapes(g, 3, 2)) {
                    if (!compatible(s, m, n, false)) continue;
                    Alphabet A = standard_alphabet(AlphabetKind::JSuper, m, n);
                    std::string tag = name(s) + " over " + to_string(A);
                    auto Gr = build_graph(highest_element(s, A), A, Conv::Super, D);
                    auto nodes = enumerate(s, A, D);
                    std::set<std::vector<Piece>> a, b;
                    for (auto& T : Gr.nodes) a.insert(T.pieces);
                    for (auto& T : nodes) b.insert(T.pieces);
                    if (a != b)
                        r.fail(tag + ": component has " + std::to_string(a.size()) + " nodes, T has " +
                               std::to_string(b.size()));
                    auto Go = graph_on(nodes, A, Conv::Super, D);
                    for (std::size_t u = 0; u < Gr.size() && r.ok; ++u) {
                        int v = Go.find(Gr.nodes[u]);
                        for (std::size_t j = 0; j < Gr.idx.size(); ++j) {
                            int x = Gr.f[u][j], y = Go.f[v][j];
                            bool same = x < 0 ? y == x : (y >= 0 && Go.nodes[y].pieces == Gr.nodes[x].pieces);
                            if (!same) r.fail(tag + ": edge " + index_string(Gr.idx[j]) + " differs");
                        }
                    }
                    auto e = schur_expand(s, A, D);
                    if (!e.ok) r.fail(tag + ": character " + e.witness);
                    ++count;
                }
    r.info(std::to_string(count) + " shapes");
    return r;
}

struct Criterion {
    const char* title;
    std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "-v")) verbose = true;
    }
    std::vector<Criterion> all{
        {"worked example regressions", c1},
        {"signature condition", c2},
        {"R-matrix and r_k / varrho_k on recording tableaux", c3},
        {"psi bijection onto SST x K", c4},
        {"Schur expansion of the character", c5},
        {"n = 0 characters against the Weyl oracle", c6},
        {"crystal axioms and connectedness", c7},
        {"Fock space relations and crystal base", c8},
        {"highest weight vectors of type B", c9},
        {"component of H in the tensor product", c10},
    };
    bool ok = true;
    for (std::size_t k = 1; k <= all.size(); ++k) {
        if (only && static_cast<int>(k) != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = all[k - 1].run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", k, all[k - 1].title, secs);
        for (auto& n : r.notes)
            if (verbose || !r.ok) std::printf("     %s\n", n.c_str());
        if (r.failures > 12) std::printf("     ... %d failures in total\n", r.failures);
        ok = ok && r.ok;
    }
    return ok ? 0 : 1;
}
