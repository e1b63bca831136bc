#include "osp/crystal.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace osp {

std::vector<Index> indices(int m, int n, Conv conv) {
    std::vector<Index> r;
    for (int k = m; k >= 1; --k) r.push_back(Letter::bar(k));
    if (n >= 1) r.push_back(Letter::zero());
    for (int i = 1; i + 1 <= n; ++i) r.push_back(conv == Conv::Plus ? Letter::integer(i) : Letter::half(i));
    return r;
}

std::string index_string(Index i) { return to_string(i); }

Edge edge_of(Index i, Conv conv) {
    if (i.is_bar()) return {Letter::bar(i.index() + 1), i};
    if (i.is_zero()) return {Letter::bar(1), conv == Conv::Plus ? Letter::integer(1) : Letter::half(1)};
    return {i, Letter(i.code + 2)};
}

static SignSequence signs(const Word& w, Edge ed) {
    SignSequence s(w.size(), 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == ed.source) s[p] = 1;
        else if (w[p] == ed.target) s[p] = -1;
    }
    return s;
}

// position acted on by the lower rule, or -1
static int lower_position(const SignSequence& red, Dir d) {
    if (d == Dir::F) {
        for (std::size_t p = 0; p < red.size(); ++p)
            if (red[p] == 1) return static_cast<int>(p);
    } else {
        for (std::size_t p = red.size(); p-- > 0;)
            if (red[p] == -1) return static_cast<int>(p);
    }
    return -1;
}

std::optional<Word> lower_rule(const Word& w, Edge ed, Dir d) {
    int p = lower_position(reduce(signs(w, ed)), d);
    if (p < 0) return std::nullopt;
    Word r = w;
    r[p] = d == Dir::F ? ed.target : ed.source;
    return r;
}

int lower_eps(const Word& w, Edge ed) { return count(reduce(signs(w, ed))).a; }
int lower_phi(const Word& w, Edge ed) { return count(reduce(signs(w, ed))).b; }

namespace {

// position in w changed by index i (non-top) and the new letter
struct Action {
    int pos = -1;
    Letter to;
};

Action word_action(const Word& w, Index i, Dir d, Conv conv) {
    Edge ed = edge_of(i, conv);
    if (conv == Conv::Super && i.is_zero()) {
        for (std::size_t p = w.size(); p-- > 0;) {
            if (w[p] == Letter::bar(1) || w[p] == Letter::half(1)) {
                if (d == Dir::F && w[p] == Letter::bar(1)) return {static_cast<int>(p), Letter::half(1)};
                if (d == Dir::E && w[p] == Letter::half(1)) return {static_cast<int>(p), Letter::bar(1)};
                return {};
            }
        }
        return {};
    }
    if (conv == Conv::Super && i.is_bar()) {
        Word r(w.rbegin(), w.rend());
        int p = lower_position(reduce(signs(r, ed)), d);
        if (p < 0) return {};
        return {static_cast<int>(w.size()) - 1 - p, d == Dir::F ? ed.target : ed.source};
    }
    int p = lower_position(reduce(signs(w, ed)), d);
    if (p < 0) return {};
    return {p, d == Dir::F ? ed.target : ed.source};
}

int word_eps(const Word& w, Index i, Conv conv, bool eps) {
    Edge ed = edge_of(i, conv);
    if (conv == Conv::Super && i.is_zero()) return word_action(w, i, eps ? Dir::E : Dir::F, conv).pos >= 0 ? 1 : 0;
    Signature g;
    if (conv == Conv::Super && i.is_bar()) g = count(reduce(signs(Word(w.rbegin(), w.rend()), ed)));
    else g = count(reduce(signs(w, ed)));
    return eps ? g.a : g.b;
}

struct Slot {
    int piece;
    bool left;
    int row;
};

// tensor word in the super convention: reverse of w(T_1^R) w(T_1^L) ... w(T_L^R) w(T_L^L)
Word tensor_word(const std::vector<Piece>& P, Conv conv, std::vector<Slot>* where) {
    Word v;
    std::vector<Slot> sl;
    for (std::size_t k = 0; k < P.size(); ++k) {
        for (std::size_t r = 0; r < P[k].R.size(); ++r) {
            v.push_back(P[k].R[r]);
            sl.push_back({static_cast<int>(k), false, static_cast<int>(r)});
        }
        for (std::size_t r = 0; r < P[k].L.size(); ++r) {
            v.push_back(P[k].L[r]);
            sl.push_back({static_cast<int>(k), true, static_cast<int>(r)});
        }
    }
    if (conv == Conv::Super) {
        std::reverse(v.begin(), v.end());
        std::reverse(sl.begin(), sl.end());
    }
    if (where) *where = std::move(sl);
    return v;
}

struct Atom {
    int piece;
    bool left;  // only for b-type
    int sign;
};

std::vector<Atom> top_atoms(const std::vector<Piece>& P, G g, int m) {
    const Letter top = Letter::bar(m);
    std::vector<Atom> at;
    for (std::size_t k = 0; k < P.size(); ++k) {
        const Piece& p = P[k];
        if (g == G::c) {
            bool lt = !p.L.empty() && p.L[0] == top;
            bool rt = !p.R.empty() && p.R[0] == top;
            int s = (lt && rt) ? -1 : (!lt && !rt ? 1 : 0);
            at.push_back({static_cast<int>(k), false, s});
        } else {
            at.push_back({static_cast<int>(k), false, (!p.R.empty() && p.R[0] == top) ? -1 : 1});
            if (!p.spin) at.push_back({static_cast<int>(k), true, (!p.L.empty() && p.L[0] == top) ? -1 : 1});
        }
    }
    return at;
}

SignSequence atom_signs(const std::vector<Atom>& at) {
    SignSequence s;
    for (auto& a : at) s.push_back(a.sign);
    return s;
}

std::optional<std::vector<Piece>> top_op(std::vector<Piece> P, G g, int m, Dir d) {
    auto at = top_atoms(P, g, m);
    int p = lower_position(reduce(atom_signs(at)), d);
    if (p < 0) return std::nullopt;
    const Letter top = Letter::bar(m);
    Piece& pc = P[at[p].piece];
    auto apply = [&](Column& c) {
        if (d == Dir::F) c.insert(c.begin(), top);
        else c.erase(c.begin());
    };
    if (g == G::c) {
        apply(pc.L);
        apply(pc.R);
    } else {
        apply(at[p].left ? pc.L : pc.R);
    }
    return P;
}

std::optional<std::vector<Piece>> pieces_op(const std::vector<Piece>& P, Index i, Dir d, G g, int m, Conv conv) {
    if (is_top_index(i, m)) return top_op(P, g, m, d);
    std::vector<Slot> where;
    Word w = tensor_word(P, conv, &where);
    Action a = word_action(w, i, d, conv);
    if (a.pos < 0) return std::nullopt;
    std::vector<Piece> out = P;
    const Slot& s = where[a.pos];
    Piece& pc = out[s.piece];
    (s.left ? pc.L : pc.R)[s.row] = a.to;
    return out;
}

int pieces_count(const std::vector<Piece>& P, Index i, G g, int m, Conv conv, bool eps) {
    if (is_top_index(i, m)) {
        Signature s = count(reduce(atom_signs(top_atoms(P, g, m))));
        return eps ? s.a : s.b;
    }
    return word_eps(tensor_word(P, conv, nullptr), i, conv, eps);
}

}  // namespace

std::optional<Word> word_op(const Word& w, Index i, Dir d, Conv conv) {
    Action a = word_action(w, i, d, conv);
    if (a.pos < 0) return std::nullopt;
    Word r = w;
    r[a.pos] = a.to;
    return r;
}

std::optional<Piece> piece_op(const Piece& T, Index i, Dir d, G g, int m, Conv conv) {
    auto r = pieces_op({T}, i, d, g, m, conv);
    if (!r) return std::nullopt;
    return (*r)[0];
}

std::optional<std::vector<Piece>> tuple_op(const std::vector<Piece>& P, Index i, Dir d, G g, int m, Conv conv) {
    return pieces_op(P, i, d, g, m, conv);
}

std::optional<OspTableau> osp_op(const OspTableau& T, Index i, Dir d, int m, Conv conv) {
    auto r = pieces_op(T.pieces, i, d, T.shape.g, m, conv);
    if (!r) return std::nullopt;
    return OspTableau{T.shape, std::move(*r)};
}

int osp_eps(const OspTableau& T, Index i, int m, Conv conv) {
    return pieces_count(T.pieces, i, T.shape.g, m, conv, true);
}

int osp_phi(const OspTableau& T, Index i, int m, Conv conv) {
    return pieces_count(T.pieces, i, T.shape.g, m, conv, false);
}

int coroot_pairing(const OspTableau& T, Index i, int m, int /*n*/, Conv conv) {
    auto c = T.content();
    auto get = [&](Letter x) { return c.count(x) ? c[x] : 0; };
    if (is_top_index(i, m)) {
        int top = get(Letter::bar(m));
        return T.shape.g == G::c ? T.shape.ell - top : T.shape.ell - 2 * top;
    }
    Edge ed = edge_of(i, conv);
    return get(ed.source) - get(ed.target);
}

Tableau natural_highest_tableau(const Partition& lambda, int m, int n) {
    std::vector<std::vector<Letter>> rows;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        std::vector<Letter> row;
        for (int j = 1; j <= lambda[r]; ++j) {
            if (static_cast<int>(r) < m) row.push_back(Letter::bar(m - static_cast<int>(r)));
            else {
                if (j > n) throw std::invalid_argument("shape does not fit the alphabet");
                row.push_back(Letter::half(j));
            }
        }
        rows.push_back(row);
    }
    return from_rows(rows);
}

Tableau insertion_image(const OspTableau& T) {
    Tableau P;
    for (auto& p : T.pieces) {
        insert_word(P, p.R);
        insert_word(P, p.L);
    }
    return P;
}

OspTableau highest_element(const PShape& s, const Alphabet& A) {
    validate(s);
    if (A.kind != AlphabetKind::JSuper || A.n == 0) {
        if (!compatible(s, A.m, A.n, true)) throw std::invalid_argument("shape not representable over the alphabet");
        OspTableau H{s, {}};
        int L = tuple_length(s);
        for (int k = 1; k <= L; ++k) {
            if (has_spin_slot(s) && k == L) {
                H.pieces.push_back(Piece{{}, {}, 0, true});
                continue;
            }
            int a = piece_a(s, k);
            Column col(A.letters.begin(), A.letters.begin() + a);
            H.pieces.push_back(Piece{col, {}, a, false});
        }
        return H;
    }
    if (!compatible(s, A.m, A.n, false)) throw std::invalid_argument("shape not representable over the alphabet");
    Tableau target = natural_highest_tableau(s.lambda, A.m, A.n);
    std::vector<OspTableau> found;
    for (auto& T : enumerate(s, A, size(s.lambda), false))
        if (insertion_image(T) == target) found.push_back(T);
    if (found.size() != 1)
        throw std::runtime_error("highest element search found " + std::to_string(found.size()) + " candidates");
    return found[0];
}

int CrystalGraph::find(const OspTableau& T) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].pieces == T.pieces) return static_cast<int>(i);
    return NONE;
}

namespace {

struct Neighbours {
    std::vector<std::optional<OspTableau>> f, e;
};

Neighbours neighbours(const OspTableau& T, const std::vector<Index>& idx, int m, Conv conv, const Alphabet& A) {
    Neighbours nb;
    for (auto i : idx) {
        auto fr = osp_op(T, i, Dir::F, m, conv);
        auto er = osp_op(T, i, Dir::E, m, conv);
        for (auto* r : {&fr, &er})
            if (*r && !is_osp_tableau(**r, A))
                throw std::logic_error("crystal operator " + index_string(i) + " left the tableau set at " +
                                       to_string(T));
        nb.f.push_back(std::move(fr));
        nb.e.push_back(std::move(er));
    }
    return nb;
}

// sort nodes canonically and rewrite edge targets
void canonicalize(CrystalGraph& G) {
    std::vector<OspTableau> sorted = G.nodes;
    sort_canonical(sorted, G.A);
    std::map<std::vector<Piece>, int> pos;
    for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i].pieces] = static_cast<int>(i);
    std::vector<int> perm(G.nodes.size());
    for (std::size_t i = 0; i < G.nodes.size(); ++i) perm[i] = pos[G.nodes[i].pieces];
    auto remap = [&](std::vector<std::vector<int>>& E) {
        std::vector<std::vector<int>> out(E.size());
        for (std::size_t i = 0; i < E.size(); ++i) {
            auto row = E[i];
            for (auto& t : row)
                if (t >= 0) t = perm[t];
            out[perm[i]] = row;
        }
        E = std::move(out);
    };
    remap(G.f);
    remap(G.e);
    G.nodes = std::move(sorted);
}

}  // namespace

CrystalGraph build_graph(const OspTableau& seed, const Alphabet& A, Conv conv, int degree_bound, bool parallel) {
    if (degree_bound < 0 && A.odd_count() > 0) throw std::invalid_argument("a degree bound is required when n > 0");
    CrystalGraph G;
    G.A = A;
    G.conv = conv;
    G.idx = indices(A.m, A.n, conv);
    const int m = A.m;
    const std::size_t ni = G.idx.size();
    std::map<std::vector<Piece>, int> id;
    auto add = [&](const OspTableau& T) {
        auto it = id.find(T.pieces);
        if (it != id.end()) return it->second;
        int k = static_cast<int>(G.nodes.size());
        id[T.pieces] = k;
        G.nodes.push_back(T);
        G.f.emplace_back(ni, CrystalGraph::NONE);
        G.e.emplace_back(ni, CrystalGraph::NONE);
        return k;
    };
    std::vector<int> frontier{add(seed)};
    while (!frontier.empty()) {
        std::vector<Neighbours> nb(frontier.size());
        const int nf = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int t = 0; t < nf; ++t) nb[t] = neighbours(G.nodes[frontier[t]], G.idx, m, conv, A);
        std::vector<int> next;
        for (int t = 0; t < nf; ++t) {
            int u = frontier[t];
            for (std::size_t j = 0; j < ni; ++j) {
                for (int dir = 0; dir < 2; ++dir) {
                    auto& r = dir == 0 ? nb[t].f[j] : nb[t].e[j];
                    int target = CrystalGraph::NONE;
                    if (r) {
                        if (degree_bound >= 0 && r->degree() > degree_bound) {
                            target = CrystalGraph::TRUNCATED;
                            G.truncated = true;
                        } else {
                            std::size_t before = G.nodes.size();
                            target = add(*r);
                            if (G.nodes.size() > before) next.push_back(target);
                        }
                    }
                    (dir == 0 ? G.f : G.e)[u][j] = target;
                }
            }
        }
        frontier = std::move(next);
    }
    canonicalize(G);
    return G;
}

CrystalGraph graph_on(const std::vector<OspTableau>& nodes, const Alphabet& A, Conv conv, int degree_bound,
                      std::vector<std::string>* escapes) {
    CrystalGraph G;
    G.A = A;
    G.conv = conv;
    G.idx = indices(A.m, A.n, conv);
    G.nodes = nodes;
    const std::size_t ni = G.idx.size();
    std::map<std::vector<Piece>, int> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i].pieces] = static_cast<int>(i);
    G.f.assign(nodes.size(), std::vector<int>(ni, CrystalGraph::NONE));
    G.e = G.f;
    std::vector<Neighbours> nb(nodes.size());
    const int nn = static_cast<int>(nodes.size());
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < nn; ++t) nb[t] = neighbours(nodes[t], G.idx, A.m, conv, A);
    for (int t = 0; t < nn; ++t)
        for (std::size_t j = 0; j < ni; ++j)
            for (int dir = 0; dir < 2; ++dir) {
                auto& r = dir == 0 ? nb[t].f[j] : nb[t].e[j];
                if (!r) continue;
                auto it = id.find(r->pieces);
                int target;
                if (it != id.end()) target = it->second;
                else if (degree_bound >= 0 && r->degree() > degree_bound) {
                    target = CrystalGraph::TRUNCATED;
                    G.truncated = true;
                } else {
                    target = CrystalGraph::TRUNCATED;
                    if (escapes)
                        escapes->push_back(std::string(dir == 0 ? "f" : "e") + index_string(G.idx[j]) + " " +
                                           to_string(nodes[t]) + " -> " + to_string(*r));
                }
                (dir == 0 ? G.f : G.e)[t][j] = target;
            }
    return G;
}

static std::map<Letter, int> root_shift(Index i, const CrystalGraph& Gr, G g) {
    std::map<Letter, int> s;
    if (is_top_index(i, Gr.A.m)) {
        s[i] = g == G::c ? 2 : 1;
        return s;
    }
    Edge ed = edge_of(i, Gr.conv);
    s[ed.source] -= 1;
    s[ed.target] += 1;
    return s;
}

Report verify_axioms(const CrystalGraph& Gr) {
    Report rep;
    const int m = Gr.A.m;
    for (std::size_t b = 0; b < Gr.nodes.size() && rep.ok; ++b) {
        const OspTableau& T = Gr.nodes[b];
        for (std::size_t j = 0; j < Gr.idx.size(); ++j) {
            Index i = Gr.idx[j];
            std::string tag = index_string(i) + " at " + to_string(T);
            int fb = Gr.f[b][j], eb = Gr.e[b][j];
            if (fb >= 0 && Gr.e[fb][j] != static_cast<int>(b)) rep.fail("e(f b) != b for " + tag);
            if (eb >= 0 && Gr.f[eb][j] != static_cast<int>(b)) rep.fail("f(e b) != b for " + tag);
            if (fb >= 0) {
                auto c0 = T.content(), c1 = Gr.nodes[fb].content();
                for (auto [x, d] : root_shift(i, Gr, T.shape.g)) c0[x] += d;
                std::erase_if(c0, [](auto& kv) { return kv.second == 0; });
                if (c0 != c1) rep.fail("weight shift wrong for " + tag);
            }
            // strings longer than the graph mean a cycle
            const int cap = static_cast<int>(Gr.size());
            int eps = 0;
            for (int u = static_cast<int>(b); Gr.e[u][j] >= 0 && eps <= cap; u = Gr.e[u][j]) ++eps;
            int phi = 0;
            bool cut = false;
            for (int u = static_cast<int>(b); phi <= cap;) {
                int v = Gr.f[u][j];
                if (v == CrystalGraph::TRUNCATED) {
                    cut = true;
                    break;
                }
                if (v < 0) break;
                ++phi;
                u = v;
            }
            if (eps > cap || phi > cap) {
                rep.fail("cyclic " + index_string(i) + "-string through " + to_string(T));
                continue;
            }
            if (eps != osp_eps(T, i, m, Gr.conv)) rep.fail("epsilon mismatch for " + tag);
            if (!cut && phi != osp_phi(T, i, m, Gr.conv)) rep.fail("phi mismatch for " + tag);
            bool odd0 = Gr.conv == Conv::Super && i.is_zero();
            if (!odd0 && !cut && phi - eps != coroot_pairing(T, i, m, Gr.A.n, Gr.conv))
                rep.fail("phi - eps != <coroot, wt> for " + tag);
        }
    }
    return rep;
}

Connectivity check_connected(const CrystalGraph& G) {
    std::vector<int> parent(G.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    Connectivity c;
    for (std::size_t b = 0; b < G.size(); ++b) {
        bool src = true;
        for (std::size_t j = 0; j < G.idx.size(); ++j) {
            if (G.f[b][j] >= 0) parent[root(static_cast<int>(b))] = root(G.f[b][j]);
            if (G.e[b][j] >= 0) {
                parent[root(static_cast<int>(b))] = root(G.e[b][j]);
                src = false;
            }
        }
        if (src) c.sources.push_back(static_cast<int>(b));
    }
    for (std::size_t b = 0; b < G.size(); ++b)
        if (root(static_cast<int>(b)) == static_cast<int>(b)) ++c.components;
    return c;
}

static std::string weight_label(const OspTableau& T) {
    std::string s = std::to_string(T.shape.ell) + "L";
    for (auto [x, k] : T.content()) s += " " + to_string(x) + ":" + std::to_string(k);
    return s;
}

std::string to_dot(const CrystalGraph& G) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};
    std::ostringstream o;
    o << "digraph crystal {\n";
    for (std::size_t b = 0; b < G.size(); ++b)
        o << "  n" << b << " [label=\"" << to_string(G.nodes[b]) << "\\n" << weight_label(G.nodes[b]) << "\"];\n";
    for (std::size_t b = 0; b < G.size(); ++b)
        for (std::size_t j = 0; j < G.idx.size(); ++j)
            if (G.f[b][j] >= 0)
                o << "  n" << b << " -> n" << G.f[b][j] << " [label=\"" << index_string(G.idx[j]) << "\", color=\""
                  << palette[j % std::size(palette)] << "\"];\n";
    o << "}\n";
    return o.str();
}

std::string to_json(const CrystalGraph& G) {
    nlohmann::ordered_json j;
    j["truncated"] = G.truncated;
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < G.size(); ++b) {
        nlohmann::ordered_json n;
        n["id"] = b;
        n["tableau"] = to_string(G.nodes[b]);
        n["weight"] = weight_label(G.nodes[b]);
        j["nodes"].push_back(n);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < G.size(); ++b)
        for (std::size_t k = 0; k < G.idx.size(); ++k)
            if (G.f[b][k] >= 0) j["edges"].push_back({{"from", b}, {"to", G.f[b][k]}, {"index", index_string(G.idx[k])}});
    return j.dump(2) + "\n";
}

}  // namespace osp
