#pragma once

#include <doctest.h>

#include <string>

#include "rbt/text.hpp"

namespace rbt::test {

inline Word W(const std::string& s) { return parse_word(s); }
inline Polynomial P(const std::string& s) { return parse_polynomial(s); }
inline StarWord Q(const std::string& s) { return parse_star_word(s); }

}  // namespace rbt::test

namespace doctest {

template <>
struct StringMaker<rbt::Word> {
    static String convert(const rbt::Word& w) { return rbt::to_string(w).c_str(); }
};

template <>
struct StringMaker<rbt::Polynomial> {
    static String convert(const rbt::Polynomial& f) { return rbt::to_string(f).c_str(); }
};

template <>
struct StringMaker<rbt::Coefficient> {
    static String convert(const rbt::Coefficient& c) { return rbt::to_string(c).c_str(); }
};

}  // namespace doctest
