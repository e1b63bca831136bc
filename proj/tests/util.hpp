#pragma once

#include <initializer_list>

#include "osp/alphabet.hpp"

inline osp::Word W(std::initializer_list<const char*> l) {
    osp::Word w;
    for (auto s : l) w.push_back(osp::parse_letter(s));
    return w;
}

inline osp::Word N(std::initializer_list<int> l) {
    osp::Word w;
    for (int k : l) w.push_back(osp::Letter::integer(k));
    return w;
}
