#include <doctest.h>

#include "osp/osp.hpp"
#include "util.hpp"

using namespace osp;

namespace {
Piece example_S() { return Piece{W({"b4", "b3", "b1", "1/2", "1/2"}), W({"b3", "b2", "3/2"}), 2, false}; }
Piece example_T() {
    return Piece{W({"b3", "b1", "1/2", "3/2", "3/2", "5/2"}), W({"b4", "b3", "b2", "b1", "5/2"}), 3, false};
}
}  // namespace

TEST_CASE("tuple length") {
    CHECK(tuple_length(PShape{G::c, {1}, 1}) == 1);
    PShape spin{G::b, {}, 1};
    CHECK(tuple_length(spin) == 1);
    CHECK(has_spin_slot(spin));
    CHECK(tuple_length(PShape{G::bb, {1}, 4}) == 2);
    CHECK_THROWS(validate(PShape{G::bb, {}, 1}));
}

TEST_CASE("membership") {
    auto A = standard_alphabet(AlphabetKind::JSuper, 4, 3);
    CHECK(is_member(example_S(), G::b, 2, A));
    CHECK(is_member(example_T(), G::b, 3, A));
    CHECK(is_member(Piece{}, G::c, 0, A));
    CHECK(!is_member(example_S(), G::b, 3, A));
}

TEST_CASE("split") {
    auto t = split(example_T());
    CHECK(t.L == W({"b3", "b1", "3/2"}));
    CHECK(t.R == W({"b4", "b3", "b2", "b1", "1/2", "3/2", "5/2", "5/2"}));
    // the pair must insert back to (S^L -> S^R)
    auto S = example_S();
    auto s = split(S);
    CHECK(insert_column(s.L, Tableau{{s.R}, {}}) == insert_column(S.L, Tableau{{S.R}, {}}));
    CHECK(s.L == W({"b4", "b3", "1/2"}));
    CHECK(s.R == W({"b3", "b2", "b1", "1/2", "3/2"}));
    Piece sp{{}, W({"b2"}), 0, true};
    auto x = split(sp);
    CHECK(x.L.empty());
    CHECK(x.R == W({"b2"}));
}

TEST_CASE("split round trip over small pieces") {
    auto A = standard_alphabet(AlphabetKind::JSuper, 2, 1);
    for (G g : {G::b, G::bb, G::c})
        for (int a = 0; a <= 2; ++a)
            for (auto& p : all_pieces(g, a, false, A, 6)) {
                auto s = split(p);
                REQUIRE(insert_column(s.L, Tableau{{s.R}, {}}) == insert_column(p.L, Tableau{{p.R}, {}}));
                REQUIRE(height(s.L) == p.c());
            }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(example_S(), example_T()));
    CHECK(is_admissible(Piece{}, example_T()));
    Piece bad = example_S();
    bad.R.back() = parse_letter("7/2");
    CHECK(!is_admissible(bad, example_T()));
    CHECK_THROWS(is_admissible(example_T(), example_S()));
}

TEST_CASE("enumerate") {
    CHECK(enumerate(PShape{G::c, {1}, 1}, standard_alphabet(AlphabetKind::JPlus, 2, 0), -1).size() == 4);
    auto e = enumerate(PShape{G::c, {}, 1}, standard_alphabet(AlphabetKind::JPlus, 1, 0), -1);
    CHECK(e.size() == 2);
    auto A = standard_alphabet(AlphabetKind::JSuper, 1, 1);
    auto v = enumerate(PShape{G::c, {}, 1}, A, 2);
    sort_canonical(v, A);
    std::vector<std::string> got;
    for (auto& T : v) got.push_back(to_string(T));
    CHECK(got.size() == 3);
    CHECK_THROWS(enumerate(PShape{G::c, {}, 1}, A, -1));
}

TEST_CASE("parallel and serial enumeration agree") {
    auto A = standard_alphabet(AlphabetKind::JSuper, 2, 1);
    for (G g : {G::b, G::bb, G::c}) {
        PShape s{g, {1}, 2};
        auto a = enumerate(s, A, 5), b = enumerate_serial(s, A, 5);
        sort_canonical(a, A);
        sort_canonical(b, A);
        CHECK(a == b);
        for (auto& T : a) CHECK(is_osp_tableau(T, A));
    }
}
