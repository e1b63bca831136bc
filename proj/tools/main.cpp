#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "osp/characters.hpp"
#include "osp/crystal.hpp"
#include "osp/fock.hpp"
#include "osp/kn.hpp"

using namespace osp;
using nlohmann::ordered_json;

namespace {

struct Spec {
    std::string g = "c";
    int m = 2;
    int n = 0;
    std::string lambda;
    int ell = 1;
    std::string alphabet = "super";
    int degree = -1;
    std::string format = "json";
    unsigned seed = 1;
    int workers = 0;
};

// exit 2
struct BadSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw BadSpec("bad partition entry '" + tok + "'");
        p.push_back(v);
    }
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) throw BadSpec("partition must be weakly decreasing");
    return normalize(p);
}

PShape shape_of(const Spec& sp) {
    PShape s{parse_g(sp.g), parse_partition(sp.lambda), sp.ell};
    if (!in_P(s)) throw BadSpec("(" + to_string(s.lambda) + "," + std::to_string(s.ell) + ") is not in P(" + sp.g + ")");
    return s;
}

bool plus_kind(const Spec& sp) {
    if (sp.alphabet == "plus") return true;
    if (sp.alphabet == "super") return false;
    throw BadSpec("alphabet must be plus or super");
}

Alphabet alphabet_of(const Spec& sp) {
    return standard_alphabet(plus_kind(sp) ? AlphabetKind::JPlus : AlphabetKind::JSuper, sp.m, sp.n);
}

void need_degree(const Spec& sp) {
    if (sp.n > 0 && sp.degree < 0) throw BadSpec("--degree is required when n > 0");
}

void set_workers(const Spec& sp) {
    int w = sp.workers;
    if (const char* e = std::getenv("OSP_WORKERS")) w = std::atoi(e);
    if (w > 0) omp_set_num_threads(w);
}

ordered_json piece_json(const Piece& p) {
    ordered_json j;
    j["L"] = to_string(p.L);
    j["R"] = to_string(p.R);
    j["a"] = p.a;
    if (p.spin) j["spin"] = true;
    return j;
}

ordered_json record_json(const OspTableau& T) {
    ordered_json j;
    j["tableau"] = to_string(T);
    j["degree"] = T.degree();
    ordered_json ps = ordered_json::array();
    for (auto& p : T.pieces) ps.push_back(piece_json(p));
    j["pieces"] = ps;
    ordered_json c = ordered_json::object();
    for (auto [x, k] : T.content()) c[to_string(x)] = k;
    j["content"] = c;
    return j;
}

ordered_json shape_json(const Spec& sp) {
    ordered_json j;
    j["g"] = sp.g;
    j["m"] = sp.m;
    j["n"] = sp.n;
    j["lambda"] = sp.lambda;
    j["ell"] = sp.ell;
    j["alphabet"] = sp.alphabet;
    j["degree"] = sp.degree;
    return j;
}

int cmd_enumerate(const Spec& sp) {
    need_degree(sp);
    auto s = shape_of(sp);
    auto A = alphabet_of(sp);
    auto v = enumerate(s, A, sp.degree);
    sort_canonical(v, A);
    if (sp.format == "text") {
        for (auto& T : v) std::cout << to_string(T) << "\n";
        return 0;
    }
    ordered_json out;
    out["spec"] = shape_json(sp);
    out["count"] = v.size();
    ordered_json rs = ordered_json::array();
    for (auto& T : v) rs.push_back(record_json(T));
    out["records"] = rs;
    std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_character(const Spec& sp) {
    need_degree(sp);
    auto p = osp_character(shape_of(sp), alphabet_of(sp), sp.degree);
    if (sp.format == "csv") std::cout << to_csv(p);
    else if (sp.format == "text") std::cout << to_string(p) << "\n";
    else std::cout << to_json(p) << "\n";
    return 0;
}

int cmd_kostka(const Spec& sp, bool list) {
    if (sp.degree < 0) throw BadSpec("kostka needs --degree (largest |mu|)");
    auto s = shape_of(sp);
    validate(s);
    ordered_json rows = ordered_json::array();
    for (int d = 0; d <= sp.degree; ++d)
        for (auto& mu : partitions_of(d, 2 * tuple_length(s))) {
            auto Q = kostka_set(mu, s);
            if (Q.empty()) continue;
            ordered_json r;
            r["mu"] = to_string(mu);
            r["K"] = Q.size();
            if (list) {
                ordered_json qs = ordered_json::array();
                for (auto& t : Q) qs.push_back(to_string(t));
                r["tableaux"] = qs;
            }
            rows.push_back(r);
        }
    if (sp.format == "text") {
        for (auto& r : rows) std::cout << r["mu"].get<std::string>() << " " << r["K"] << "\n";
        return 0;
    }
    ordered_json out;
    out["spec"] = shape_json(sp);
    out["kostka"] = rows;
    std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_schur_expand(const Spec& sp) {
    if (sp.degree < 0) throw BadSpec("schur-expand needs --degree");
    auto r = schur_expand(shape_of(sp), alphabet_of(sp), sp.degree);
    ordered_json out;
    out["spec"] = shape_json(sp);
    out["ok"] = r.ok;
    if (!r.ok) out["witness"] = r.witness;
    ordered_json ks = ordered_json::array();
    for (auto& [mu, k] : r.kostka) ks.push_back({{"mu", to_string(mu)}, {"K", k}});
    out["kostka"] = ks;
    out["terms"] = r.lhs.terms.size();
    std::cout << out.dump(1) << "\n";
    return r.ok ? 0 : 1;
}

int cmd_graph(const Spec& sp) {
    need_degree(sp);
    auto s = shape_of(sp);
    auto A = alphabet_of(sp);
    auto G = build_graph(highest_element(s, A), A, plus_kind(sp) ? Conv::Plus : Conv::Super, sp.degree);
    if (sp.format == "dot") std::cout << to_dot(G);
    else std::cout << to_json(G) << "\n";
    return 0;
}

int cmd_kn(const Spec& sp, bool check) {
    if (sp.n != 0) throw BadSpec("kn needs n = 0");
    auto s = shape_of(sp);
    if (s.g == G::bb) throw BadSpec("kn covers g = b and g = c");
    if (check) {
        auto r = verify_kn_correspondence(s, sp.m);
        ordered_json out;
        out["spec"] = shape_json(sp);
        out["ok"] = r.ok;
        if (!r.ok) out["witness"] = r.witness;
        out["count"] = r.count;
        out["weyl_dim"] = r.weyl_dim;
        out["highest_weight2"] = r.highest_weight2;
        out["heights"] = r.heights;
        std::cout << out.dump(1) << "\n";
        return r.ok ? 0 : 1;
    }
    auto A = standard_alphabet(AlphabetKind::JPlus, sp.m, 0);
    auto v = enumerate(s, A, -1);
    sort_canonical(v, A);
    ordered_json rs = ordered_json::array();
    for (auto& T : v) {
        if (sp.format == "text") std::cout << to_string(T) << " -> " << to_string(to_kn_tableau(T, sp.m)) << "\n";
        else rs.push_back({{"tableau", to_string(T)}, {"kn", to_string(to_kn_tableau(T, sp.m))}});
    }
    if (sp.format != "text") {
        ordered_json out;
        out["spec"] = shape_json(sp);
        out["records"] = rs;
        std::cout << out.dump(1) << "\n";
    }
    return 0;
}

// ---- verify profiles

struct Checks {
    ordered_json list = ordered_json::array();
    bool ok = true;
    void add(const std::string& name, bool pass, const std::string& got = "", const std::string& want = "") {
        ordered_json j{{"name", name}, {"ok", pass}};
        if (!got.empty()) j["got"] = got;
        if (!want.empty()) j["expected"] = want;
        list.push_back(j);
        ok = ok && pass;
    }
    void note(const std::string& name, const std::string& got, const std::string& printed, const std::string& why) {
        list.push_back({{"name", name}, {"ok", true}, {"got", got}, {"printed", printed}, {"note", why}});
    }
};

Column col(std::initializer_list<const char*> l) {
    Column c;
    for (auto s : l) c.push_back(parse_letter(s));
    return c;
}

std::string pair_string(const Column& a, const Column& b) { return to_string(a) + " " + to_string(b); }

void profile_examples(Checks& ck) {
    Piece S{col({"b4", "b3", "b1", "1/2", "1/2"}), col({"b3", "b2", "3/2"}), 2, false};
    Piece T{col({"b3", "b1", "1/2", "3/2", "3/2", "5/2"}), col({"b4", "b3", "b2", "b1", "5/2"}), 3, false};
    Alphabet A = standard_alphabet(AlphabetKind::JSuper, 4, 3);
    ck.add("example1.S.member", is_member(S, G::b, 2, A));
    ck.add("example1.T.member", is_member(T, G::b, 3, A));
    auto sS = split(S), sT = split(T);
    auto ins = insert_column(S.L, Tableau{{S.R}, {}});
    ck.add("example1.S.split_round_trip", insert_column(sS.L, Tableau{{sS.R}, {}}) == ins);
    ck.note("example1.S.split", pair_string(sS.L, sS.R), "[b3,b1,1/2] [b4,b3,b2,1/2,3/2]",
            "printed pair does not insert back to (S^L -> S^R); see README");
    ck.add("example1.T.insert", to_string(insert_column(T.L, Tableau{{T.R}, {}})) ==
                                    "{[b4,b3,b2,b1,1/2,3/2,3/2,5/2],[b3,b1,5/2]}",
           to_string(insert_column(T.L, Tableau{{T.R}, {}})));
    ck.add("example1.T.split", pair_string(sT.L, sT.R) == "[b3,b1,3/2] [b4,b3,b2,b1,1/2,3/2,5/2,5/2]",
           pair_string(sT.L, sT.R));
    ck.add("example1.admissible", is_admissible(S, T));

    Piece c{col({"b5", "b3", "b2"}), col({"b4", "b1"}), 1, false};
    Piece b{col({"b5", "b3", "b1"}), col({"b5", "b4", "b1"}), 1, false};
    auto sc = split(c), sb = split(b);
    ck.add("kn.c.split", pair_string(sc.L, sc.R) == "[b5,b2] [b4,b3,b1]", pair_string(sc.L, sc.R));
    ck.add("kn.c.column", to_string(to_kn_column(c, G::c, 5)) == "[2,5,b5,b2]", to_string(to_kn_column(c, G::c, 5)));
    ck.add("kn.b.split", pair_string(sb.L, sb.R) == "[b5,b1] [b5,b4,b3,b1]", pair_string(sb.L, sb.R));
    ck.add("kn.b.column", to_string(to_kn_column(b, G::b, 5)) == "[2,0,b5,b1]", to_string(to_kn_column(b, G::b, 5)));
}

std::vector<PShape> small_shapes(G g, int max_size, int max_ell) {
    std::vector<PShape> out;
    for (int ell = 1; ell <= max_ell; ++ell)
        for (int d = 0; d <= max_size; ++d)
            for (auto& lam : partitions_of(d)) {
                PShape s{g, lam, ell};
                if (in_P(s)) out.push_back(s);
            }
    return out;
}

std::string shape_name(const PShape& s) {
    return to_string(s.g) + "(" + to_string(s.lambda) + "," + std::to_string(s.ell) + ")";
}

void profile_crystal(Checks& ck) {
    for (G g : {G::b, G::bb, G::c})
        for (auto& s : small_shapes(g, 2, 2)) {
            auto A = standard_alphabet(AlphabetKind::JPlus, 2, 0);
            if (!compatible(s, 2, 0, true)) continue;
            auto Gr = build_graph(highest_element(s, A), A, Conv::Plus, -1);
            auto r = verify_axioms(Gr);
            auto c = check_connected(Gr);
            ck.add("axioms." + shape_name(s), r.ok && c.sources.size() == 1 &&
                                                  Gr.size() == enumerate(s, A, -1).size(), r.witness);
        }
}

void profile_psi(Checks& ck) {
    for (G g : {G::b, G::bb, G::c})
        for (auto& s : small_shapes(g, 2, 2)) {
            auto A = standard_alphabet(AlphabetKind::JSuper, 2, 1);
            bool ok = true;
            for (auto& T : enumerate(s, A, 4)) ok = ok && psi_inverse(psi(T), s, A) == T;
            ck.add("psi." + shape_name(s), ok);
            auto e = schur_expand(s, A, 4);
            ck.add("expand." + shape_name(s), e.ok, e.witness);
        }
}

void profile_kn(Checks& ck) {
    for (G g : {G::b, G::c})
        for (auto& s : small_shapes(g, 2, 3)) {
            if (!compatible(s, 2, 0, true)) continue;
            auto r = verify_kn_correspondence(s, 2);
            ck.add("kn." + shape_name(s), r.ok, r.witness);
        }
}

void profile_fock(Checks& ck) {
    for (FockG g : {FockG::c, FockG::b, FockG::d}) {
        auto S = make_space(g, 2, 1);
        auto a = check_algebra_relations(S, 3), u = check_uq_relations(S, 3);
        ck.add("fock.relations." + to_string(g), a.ok && u.ok, a.ok ? u.witness : a.witness);
    }
    for (FockG g : {FockG::c, FockG::b, FockG::bb}) {
        auto r = crystal_base_check(make_space(g, 2, 1), 3);
        ck.add("fock.crystal." + to_string(g), r.ok, r.witness);
    }
}

int cmd_verify(const std::string& profile) {
    Checks ck;
    bool all = profile == "all";
    bool known = false;
    if (all || profile == "paper-examples") profile_examples(ck), known = true;
    if (all || profile == "crystal") profile_crystal(ck), known = true;
    if (all || profile == "psi") profile_psi(ck), known = true;
    if (all || profile == "kn") profile_kn(ck), known = true;
    if (all || profile == "fock") profile_fock(ck), known = true;
    if (!known) throw BadSpec("unknown profile '" + profile + "'");
    ordered_json out;
    out["profile"] = profile;
    out["ok"] = ck.ok;
    out["checks"] = ck.list;
    std::cout << out.dump(1) << "\n";
    return ck.ok ? 0 : 1;
}

int cmd_fock(const Spec& sp, const std::string& suite, int a) {
    FockG g = parse_fock_g(sp.g);
    int d = sp.degree < 0 ? 3 : sp.degree;
    ordered_json out;
    out["g"] = sp.g;
    out["m"] = sp.m;
    out["n"] = sp.n;
    out["degree"] = d;
    bool ok = true;
    auto put = [&](const std::string& name, const FockReport& r) {
        ordered_json j{{"ok", r.ok}, {"checks", r.checks}};
        if (!r.ok) j["witness"] = r.witness;
        out[name] = j;
        ok = ok && r.ok;
    };
    bool all = suite == "all";
    auto S = make_space(g, sp.m, sp.n);
    bool known = false;
    if (all || suite == "algebra") put("algebra", check_algebra_relations(S, d)), known = true;
    if (all || suite == "uq") put("uq", check_uq_relations(S, d)), known = true;
    if (all || suite == "serre") put("serre", check_serre_relations(S, d)), known = true;
    if (all || suite == "gl") put("gl", check_gl_factorization(sp.m, sp.n, d)), known = true;
    if ((all && g != FockG::d) || suite == "crystal") put("crystal", crystal_base_check(S, d)), known = true;
    if (suite == "hwv") {
        known = true;
        if (g != FockG::b && g != FockG::bb) throw BadSpec("hwv needs g = b or bb");
        try {
            auto r = highest_weight_vector_b(a, sp.m, sp.n, g);
            auto T = make_space(FockG::b, sp.m, sp.n, true);
            out["hwv"] = {{"ok", true}, {"size", r.size}, {"table_agrees", r.table_agrees},
                          {"vector", nlohmann::json::parse(to_json(T, r.v))}};
            if (!r.table_note.empty()) out["hwv"]["note"] = r.table_note;
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
            out["hwv"] = {{"ok", false}, {"witness", e.what()}};
            ok = false;
        }
    }
    if (!known) throw BadSpec("unknown suite '" + suite + "'");
    out["ok"] = ok;
    std::cout << out.dump(1) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthosymplectic tableaux toolkit"};
    app.require_subcommand(1);
    Spec sp;
    auto common = [&](CLI::App* c, bool shape) {
        c->add_option("--g", sp.g, "b, bb or c (fock-check also takes d)");
        c->add_option("--m", sp.m)->check(CLI::NonNegativeNumber);
        c->add_option("--n", sp.n)->check(CLI::NonNegativeNumber);
        if (shape) {
            c->add_option("--lambda", sp.lambda, "comma separated partition");
            c->add_option("--ell", sp.ell)->check(CLI::PositiveNumber);
            c->add_option("--alphabet", sp.alphabet, "super (J_{m|n}) or plus (J_{m+n})");
        }
        c->add_option("--degree", sp.degree, "degree bound");
        c->add_option("--format", sp.format, "json, text, csv or dot");
        c->add_option("--seed", sp.seed);
        c->add_option("--workers", sp.workers, "OpenMP threads (OSP_WORKERS overrides)");
    };
    auto* en = app.add_subcommand("enumerate", "list osp tableaux");
    common(en, true);
    auto* ch = app.add_subcommand("character", "weight generating function");
    common(ch, true);
    bool list_q = false;
    auto* ko = app.add_subcommand("kostka", "Kostka-type multiplicities");
    common(ko, true);
    ko->add_flag("--list", list_q, "print the recording tableaux");
    auto* se = app.add_subcommand("schur-expand", "check the Schur expansion");
    common(se, true);
    auto* gr = app.add_subcommand("graph", "crystal graph from the highest element");
    common(gr, true);
    bool kn_check = false;
    auto* kn = app.add_subcommand("kn", "KN tableaux (n = 0)");
    common(kn, true);
    kn->add_flag("--check", kn_check, "injectivity, shape and dimension check");
    std::string profile = "paper-examples";
    auto* ve = app.add_subcommand("verify", "named verification profiles");
    ve->add_option("--profile", profile, "paper-examples, crystal, psi, kn, fock or all");
    ve->add_option("--workers", sp.workers);
    std::string suite = "all";
    int hw_a = 1;
    auto* fo = app.add_subcommand("fock-check", "Fock space suites");
    common(fo, false);
    fo->add_option("--suite", suite, "algebra, uq, serre, gl, crystal, hwv or all");
    fo->add_option("--a", hw_a, "fundamental weight index for hwv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        set_workers(sp);
        if (*en) return cmd_enumerate(sp);
        if (*ch) return cmd_character(sp);
        if (*ko) return cmd_kostka(sp, list_q);
        if (*se) return cmd_schur_expand(sp);
        if (*gr) return cmd_graph(sp);
        if (*kn) return cmd_kn(sp, kn_check);
        if (*ve) return cmd_verify(profile);
        if (*fo) return cmd_fock(sp, suite, hw_a);
    } catch (const BadSpec& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << ordered_json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
