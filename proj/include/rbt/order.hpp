#pragma once

// Well orders on bracketed words.
//
// Generators are ordered by name. Letters-only words use degree-lexicographic
// order with the unit word least. General words use the order that compares,
// in turn:
//   1. the total number of brackets,
//   2. the number of top-level brackets (r),
//   3. the tuple (inner_1, ..., inner_r, block_0, ..., block_r) of the
//      canonical form u = block_0 [inner_1] block_1 ... [inner_r] block_r,
//      bracket contents recursively and letter blocks by degree-lex.
// This is a monomial order: it is preserved by every one-hole context.

#include <compare>

#include "rbt/word.hpp"

namespace rbt {

class Polynomial;

/// Degree-lexicographic comparison of letters-only words. Throws
/// std::invalid_argument if either word contains a bracket.
std::strong_ordering cmp_deglex(const Word& u, const Word& v);

std::strong_ordering cmp_db(const Word& u, const Word& v);

struct DbLess {
    bool operator()(const Word& u, const Word& v) const { return cmp_db(u, v) < 0; }
};

struct DbGreater {
    bool operator()(const Word& u, const Word& v) const { return cmp_db(u, v) > 0; }
};

enum class Compatibility { Compatible, Unknown };

const char* to_string(Compatibility c);

/// Sufficient test that [B(u,v)] has every monomial strictly below [u][v]
/// for all words u, v: B in normal form, at most one bracket per monomial,
/// and each of x, y at most once per monomial.
Compatibility compatible_with_db(const Polynomial& b);

}  // namespace rbt
