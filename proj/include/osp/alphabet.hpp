#pragma once

#include <compare>
#include <string>
#include <vector>

namespace osp {

// Letters are packed into one integer so that integer order is letter order:
//   barred k -> -2k, zero -> 0, half-integer k-1/2 -> 2k-1, integer k -> 2k.
struct Letter {
    int code = 0;

    constexpr Letter() = default;
    constexpr explicit Letter(int c) : code(c) {}

    static constexpr Letter bar(int k) { return Letter(-2 * k); }
    static constexpr Letter integer(int k) { return Letter(2 * k); }
    static constexpr Letter half(int k) { return Letter(2 * k - 1); }  // k - 1/2
    static constexpr Letter zero() { return Letter(0); }

    constexpr bool is_bar() const { return code < 0; }
    constexpr bool is_zero() const { return code == 0; }
    constexpr bool is_half() const { return code > 0 && (code & 1); }
    constexpr bool is_integer() const { return code > 0 && !(code & 1); }
    constexpr int parity() const { return code > 0 ? (code & 1) : 0; }

    // k for bar(k), integer(k) and half(k)
    constexpr int index() const {
        if (code < 0) return -code / 2;
        if (code & 1) return (code + 1) / 2;
        return code / 2;
    }

    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

std::string to_string(Letter a);
Letter parse_letter(const std::string& s);

enum class AlphabetKind { JPlus, JSuper, Custom };

struct Alphabet {
    AlphabetKind kind = AlphabetKind::Custom;
    int m = 0;
    int n = 0;
    std::vector<Letter> letters;  // strictly increasing

    bool contains(Letter a) const;
    int even_count() const;
    int odd_count() const;
    std::vector<Letter> even_letters() const;
    std::vector<Letter> odd_letters() const;
    std::size_t size() const { return letters.size(); }
};

Alphabet standard_alphabet(AlphabetKind kind, int m, int n);
Alphabet custom_alphabet(std::vector<Letter> letters);

std::string to_string(const Alphabet& A);
std::string to_string(const Word& w);

}  // namespace osp
