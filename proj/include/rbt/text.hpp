#pragma once

// Text syntax.
//
//   polynomial := term (("+" | "-") term)* | "-" term ...
//   term       := (coeff "*")* word | coeff
//   coeff      := integer | integer "/" integer | param ["^" integer]
//   word       := "1" | atom+
//   atom       := ident | "[" word "]" | "@" [digit]
//
// Adjacent identifiers are separated by whitespace: "x y" is a two-letter
// word, "xy" a single generator. "@" is the hole of a context word; "@1" and
// "@2" are the holes of a two-hole context.

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rbt/polynomial.hpp"

namespace rbt {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Names treated as parameters when they appear as coefficient factors.
inline const std::set<std::string>& default_parameters() {
    static const std::set<std::string> names{"lam", "c"};
    return names;
}

Word parse_word(std::string_view text);
StarWord parse_star_word(std::string_view text);
TwoStarWord parse_two_star_word(std::string_view text);
Polynomial parse_polynomial(std::string_view text,
                            const std::set<std::string>& parameters = default_parameters());

std::string to_string(const Word& w);
std::string to_string(const StarWord& q);
std::string to_string(const Coefficient& c);
/// Terms in descending db order. Coefficients with several parameter
/// monomials are written as one term per monomial, so the output parses back
/// to the same polynomial.
std::string to_string(const Polynomial& f);

}  // namespace rbt
