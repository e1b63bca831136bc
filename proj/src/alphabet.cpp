#include "osp/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace osp {

std::string to_string(Letter a) {
    if (a.is_bar()) return "b" + std::to_string(a.index());
    if (a.is_zero()) return "0";
    if (a.is_half()) return std::to_string(a.code) + "/2";
    return std::to_string(a.index());
}

Letter parse_letter(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("bad letter '" + s + "'"); };
    if (s.empty()) throw bad();
    auto num = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit)) throw bad();
        return std::stoi(t);
    };
    if (s[0] == 'b') {
        int k = num(s.substr(1));
        if (k < 1) throw bad();
        return Letter::bar(k);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (s.substr(slash + 1) != "2") throw bad();
        int c = num(s.substr(0, slash));
        if (c % 2 == 0) throw bad();
        return Letter(c);
    }
    int k = num(s);
    return k == 0 ? Letter::zero() : Letter::integer(k);
}

bool Alphabet::contains(Letter a) const {
    return std::binary_search(letters.begin(), letters.end(), a);
}

int Alphabet::even_count() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                          [](Letter a) { return a.parity() == 0; }));
}

int Alphabet::odd_count() const { return static_cast<int>(letters.size()) - even_count(); }

std::vector<Letter> Alphabet::even_letters() const {
    std::vector<Letter> r;
    for (auto a : letters)
        if (a.parity() == 0) r.push_back(a);
    return r;
}

std::vector<Letter> Alphabet::odd_letters() const {
    std::vector<Letter> r;
    for (auto a : letters)
        if (a.parity() == 1) r.push_back(a);
    return r;
}

Alphabet standard_alphabet(AlphabetKind kind, int m, int n) {
    if (m < 1) throw std::invalid_argument("alphabet needs m >= 1");
    if (n < 0) throw std::invalid_argument("alphabet needs n >= 0");
    if (kind == AlphabetKind::Custom) throw std::invalid_argument("custom alphabet has no standard form");
    Alphabet A;
    A.kind = kind;
    A.m = m;
    A.n = n;
    for (int k = m; k >= 1; --k) A.letters.push_back(Letter::bar(k));
    for (int k = 1; k <= n; ++k)
        A.letters.push_back(kind == AlphabetKind::JPlus ? Letter::integer(k) : Letter::half(k));
    return A;
}

Alphabet custom_alphabet(std::vector<Letter> letters) {
    std::sort(letters.begin(), letters.end());
    if (std::adjacent_find(letters.begin(), letters.end()) != letters.end())
        throw std::invalid_argument("repeated letter in alphabet");
    Alphabet A;
    A.letters = std::move(letters);
    for (auto a : A.letters) {
        if (a.is_bar()) A.m = std::max(A.m, a.index());
        else ++A.n;
    }
    return A;
}

std::string to_string(const Alphabet& A) { return to_string(A.letters); }

std::string to_string(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s + "]";
}

}  // namespace osp
