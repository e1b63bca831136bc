#include <doctest.h>

#include <stdexcept>

#include "osp/fock.hpp"

using namespace osp;

TEST_CASE("laurent arithmetic") {
    Laurent q = Laurent::q(1);
    CHECK(qnum(2) == q + Laurent::q(-1));
    CHECK(to_string(qnum(3)) == "q^2 + 1 + q^-2");
    CHECK(qnum(2, 2) == qnum(2).subs(2));
    CHECK(qbinom(4, 2) * qfact(2) * qfact(2) == qfact(4));
    CHECK(!exact_div(Laurent::constant(1), qnum(2)));
    CHECK((q - q).is_zero());
}

TEST_CASE("vacuum") {
    auto S = make_space(FockG::c, 2, 1);
    auto v = vacuum(S);
    CHECK(apply_generator(S, {GenKind::PsiStar, Letter::bar(2), false, 1, 0}, v).is_zero());
    CHECK(apply_generator(S, {GenKind::Psi, Letter::bar(2), true, 1, 0}, v).is_zero());
    CHECK(apply_generator(S, {GenKind::Omega, Letter::half(1), false, 1, 0}, v) == v.scaled(Laurent::q(-1)));
    CHECK(apply_generator(S, {GenKind::Omega, Letter::bar(2), true, 1, 0}, v) == v);
    auto w = apply_generator(S, {GenKind::PsiStar, Letter::half(1), false, 1, 0}, v);
    CHECK(apply_generator(S, {GenKind::Psi, Letter::half(1), false, 1, 0}, w).is_zero());
}

TEST_CASE("divided powers and even letters") {
    auto S = make_space(FockG::c, 2, 1);
    Generator p{GenKind::Psi, Letter::half(1), false, 1, 0};
    auto w = apply_generator(S, p, apply_generator(S, p, vacuum(S)));
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms.begin()->second == qnum(2));
    Generator e{GenKind::Psi, Letter::bar(1), false, 1, 0};
    CHECK(apply_generator(S, e, apply_generator(S, e, vacuum(S))).is_zero());
}

TEST_CASE("relations at small size") {
    for (FockG g : {FockG::c, FockG::b, FockG::d}) {
        auto S = make_space(g, 2, 1);
        CHECK(check_algebra_relations(S, 3).ok);
        CHECK(check_uq_relations(S, 3).ok);
        CHECK(check_serre_relations(S, 3).ok);
    }
    CHECK(check_gl_factorization(2, 1, 3).ok);
    CHECK(check_uq_relations(make_space(FockG::bb, 1, 0), 4).ok);
}

TEST_CASE("b-bullet space is not a module beyond 1|0") {
    auto r = check_uq_relations(make_space(FockG::bb, 2, 0), 2);
    CHECK(!r.ok);
    CHECK(!r.witness.empty());
}

TEST_CASE("e0 lowers the odd occupation") {
    auto S = make_space(FockG::b, 1, 1);
    for (int r = 1; r <= 4; ++r) {
        auto v = uq_e(S, Letter::zero(), basis_vector({0, r}));
        REQUIRE(v.terms.size() == 1);
        CHECK(v.terms.begin()->first == Occupation{1, r - 1});
        auto c = v.terms.begin()->second;
        CHECK((c == Laurent::constant(1) || c == Laurent::constant(-1)));
    }
}

TEST_CASE("kashiwara f on a divided power") {
    auto S = make_space(FockG::b, 1, 2);
    const int r = 3;
    Occupation o{0, r, 0};
    for (int k = 1; k <= r; ++k) {
        auto red = reduce_mod_q(kashiwara(S, basis_vector(o), Letter::half(1), Dir::F));
        REQUIRE(red);
        REQUIRE(red->size() == 1);
        o = red->begin()->first;
        CHECK(o == Occupation{0, r - k, k});
        CHECK(std::abs(red->begin()->second) == 1);
    }
    CHECK(kashiwara(S, basis_vector({0, r, 0}), Letter::half(1), Dir::E).num.is_zero());
}

TEST_CASE("kashiwara rejects inhomogeneous vectors") {
    auto S = make_space(FockG::c, 1, 1);
    FockVector v = vacuum(S);
    v.add(basis_vector({0, 0, 1, 0}), Laurent::constant(1));
    CHECK_THROWS_AS(kashiwara(S, v, Letter::bar(1), Dir::F), std::invalid_argument);
}

TEST_CASE("crystal base") {
    CHECK(crystal_base_check(make_space(FockG::c, 2, 1), 3).ok);
    CHECK(crystal_base_check(make_space(FockG::b, 2, 1), 3).ok);
    CHECK(crystal_base_check(make_space(FockG::bb, 2, 1), 3).ok);
    auto S = make_space(FockG::c, 2, 1);
    for (auto i : fock_indices(S)) CHECK(kashiwara(S, vacuum(S), i, Dir::E).num.is_zero());
}

TEST_CASE("psi map round trip") {
    for (FockG g : {FockG::c, FockG::b, FockG::bb}) {
        auto S = make_space(g, 2, 1);
        for (auto& o : basis_up_to(S, 3)) CHECK(psi_map_inverse(S, psi_map(S, o)) == o);
    }
}

TEST_CASE("highest weight vectors") {
    auto h0 = highest_weight_vector_b(0, 1, 1, FockG::b);
    CHECK(h0.size == 1);
    auto T = make_space(FockG::b, 1, 1, true);
    auto h = highest_weight_vector_b(1, 1, 1, FockG::b);
    CHECK(h.size == 2);
    CHECK(h.table_agrees);
    FockVector want;
    want.add(Occupation{1, 0, 0, 0}, Laurent::constant(1));
    want.add(Occupation{0, 0, 1, 0}, Laurent::q(1, -1));
    CHECK(h.v == want);
    for (auto i : fock_indices(T)) CHECK(uq_e(T, i, h.v).is_zero());
    CHECK_NOTHROW(highest_weight_vector_b(3, 2, 1, FockG::b));
}
