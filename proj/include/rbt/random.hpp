#pragma once

// Seeded generators of random words and polynomials for sampling checks.

#include <random>
#include <string>
#include <vector>

#include "rbt/polynomial.hpp"

namespace rbt {

using Rng = std::mt19937_64;

struct WordShape {
    std::vector<std::string> alphabet{"x", "y", "z"};
    std::size_t max_depth = 2;
    std::size_t max_breadth = 3;
    /// Allow the unit word 1 as a result (and [1] as a bracket).
    bool allow_unit = true;
};

Word random_word(Rng& rng, const WordShape& shape);
/// Like random_word, but never two adjacent brackets.
Word random_rbnf_word(Rng& rng, const WordShape& shape);
/// A random word with one hole inserted at a uniformly chosen position.
StarWord random_star_word(Rng& rng, const WordShape& shape);

struct PolyShape {
    WordShape word;
    std::size_t max_terms = 4;
    /// Multiply some coefficients by lam or c.
    bool parameters = true;
    bool rbnf = false;
};

Polynomial random_polynomial(Rng& rng, const PolyShape& shape);

}  // namespace rbt
