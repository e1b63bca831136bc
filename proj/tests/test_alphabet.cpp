#include <doctest.h>

#include "util.hpp"

using namespace osp;

TEST_CASE("standard alphabets") {
    auto A = standard_alphabet(AlphabetKind::JSuper, 4, 3);
    CHECK(to_string(A) == "[b4,b3,b2,b1,1/2,3/2,5/2]");
    std::vector<int> par;
    for (auto a : A.letters) par.push_back(a.parity());
    CHECK(par == std::vector<int>{0, 0, 0, 0, 1, 1, 1});
    CHECK(to_string(standard_alphabet(AlphabetKind::JPlus, 1, 0)) == "[b1]");
    auto P = standard_alphabet(AlphabetKind::JPlus, 2, 2);
    CHECK(to_string(P) == "[b2,b1,1,2]");
    CHECK(P.odd_count() == 0);
}

TEST_CASE("letter order") {
    CHECK(parse_letter("b1") < parse_letter("1/2"));
    CHECK(parse_letter("1/2") == parse_letter("1/2"));
    CHECK(parse_letter("3/2") > parse_letter("1"));
    CHECK(parse_letter("1/2") < parse_letter("1"));
    CHECK(parse_letter("b1") < parse_letter("0"));
    CHECK(parse_letter("0") < parse_letter("1/2"));
}

TEST_CASE("letter round trip") {
    for (const char* s : {"b7", "b1", "0", "1/2", "11/2", "1", "9"}) CHECK(to_string(parse_letter(s)) == s);
    CHECK_THROWS(parse_letter("x"));
    CHECK(parse_letter("5/2").index() == 3);
    CHECK(parse_letter("5/2").is_half());
    CHECK(parse_letter("b3").index() == 3);
}

TEST_CASE("custom alphabets") {
    CHECK(to_string(custom_alphabet({Letter::integer(2), Letter::integer(1)})) == "[1,2]");
    CHECK_THROWS(custom_alphabet({Letter::integer(1), Letter::integer(1)}));
    auto A = custom_alphabet({Letter::half(1), Letter::integer(1)});
    CHECK(A.contains(Letter::integer(1)));
    CHECK(!A.contains(Letter::integer(2)));
}
