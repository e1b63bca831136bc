#include <doctest.h>

#include "osp/tableau.hpp"
#include "util.hpp"

using namespace osp;

TEST_CASE("semistandard") {
    CHECK(is_semistandard(two_column(W({"b4", "b3", "b1", "1/2", "1/2"}), W({"b3", "b2", "3/2"}), 0)));
    CHECK(is_semistandard(Tableau{}));
    CHECK(!is_semistandard(from_rows({W({"1/2", "1/2"})})));
    CHECK(is_semistandard(from_rows({W({"1", "1"})})));
    CHECK(!is_semistandard(Tableau{{W({"1", "1"})}, {}}));
    CHECK(is_semistandard(Tableau{{W({"1/2", "1/2"})}, {}}));
}

TEST_CASE("reading word") {
    CHECK(reading_word(Tableau{{N({1, 2}), N({1})}, {}}) == N({1, 1, 2}));
    CHECK(reading_word(Tableau{}).empty());
    CHECK(reading_word(Tableau{{W({"b3", "b1", "1/2"})}, {}}) == W({"b3", "b1", "1/2"}));
}

TEST_CASE("column insertion") {
    Tableau T{{W({"b4", "b3", "b2", "b1", "5/2"})}, {}};
    insert_word(T, W({"b3", "b1", "1/2", "3/2", "3/2", "5/2"}));
    CHECK(to_string(T) == "{[b4,b3,b2,b1,1/2,3/2,3/2,5/2],[b3,b1,5/2]}");
    Tableau U{{N({1, 2})}, {}};
    Tableau V = U;
    insert_word(V, {});
    CHECK(V == U);
    column_insert(U, Letter::integer(1));
    CHECK(to_string(U) == "{[1,2],[1]}");
}

TEST_CASE("insertion depends on the Knuth class only") {
    auto A = standard_alphabet(AlphabetKind::JSuper, 2, 2);
    auto cols = [&] {
        std::vector<Column> v;
        for (int h = 0; h <= 3; ++h) {
            // columns over A: even letters strict, odd repeatable
            std::vector<Column> cur{{}};
            for (int i = 0; i < h; ++i) {
                std::vector<Column> nxt;
                for (auto& c : cur)
                    for (auto a : A.letters)
                        if (c.empty() || c.back() < a || (c.back() == a && a.parity() == 1)) {
                            auto d = c;
                            d.push_back(a);
                            nxt.push_back(d);
                        }
                cur = nxt;
            }
            v.insert(v.end(), cur.begin(), cur.end());
        }
        return v;
    }();
    for (auto& S : cols)
        for (std::size_t j = 0; j < cols.size(); j += 3) {
            const auto& T = cols[j];
            Tableau a = insert_column(S, Tableau{{T}, {}});
            Tableau b;
            insert_word(b, T);
            insert_word(b, S);
            REQUIRE(a == b);
            REQUIRE(is_semistandard(a));
        }
}

TEST_CASE("recording pair") {
    auto rp = recording_pair(N({1}), N({1, 2}), Tableau{}, 3);
    CHECK(to_string(rp.P) == "{[1,2],[1]}");
    int threes = 0, fours = 0;
    for (auto& c : rp.Q.cols)
        for (auto x : c) (x == Letter::integer(3) ? threes : fours)++;
    CHECK(threes == 2);
    CHECK(fours == 1);
    auto e = recording_pair({}, N({1, 2}), Tableau{}, 1);
    for (auto& c : e.Q.cols)
        for (auto x : c) CHECK(x == Letter::integer(1));
}

TEST_CASE("inverse insertion") {
    auto SL = W({"b4", "b3", "b1", "1/2", "1/2"}), SR = W({"b3", "b2", "3/2"});
    auto rp = recording_pair(SL, SR, Tableau{}, 1);
    Word w = inverse_insertion(rp.P, rp.cells);
    Word want = SR;
    want.insert(want.end(), SL.begin(), SL.end());
    CHECK(w == want);
    CHECK(inverse_insertion(Tableau{}, {}).empty());
}

TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4, 2).size() == 3);
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(normalize({2, 0, 0}) == Partition{2});
}
