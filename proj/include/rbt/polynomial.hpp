#pragma once

// Bracketed polynomials: finite linear combinations of bracketed words with
// Coefficient scalars. Terms are kept sorted by the db order, greatest first.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbt/coefficient.hpp"
#include "rbt/order.hpp"
#include "rbt/word.hpp"

namespace rbt {

class Polynomial {
public:
    using Terms = std::map<Word, Coefficient, DbGreater>;
    using const_iterator = Terms::const_iterator;

    Polynomial() = default;
    Polynomial(const Word& w);  // NOLINT: a word is a monomial with coefficient 1
    Polynomial(const Coefficient& c, const Word& w);

    static Polynomial constant(const Coefficient& c) { return Polynomial(c, Word()); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Terms& terms() const { return terms_; }

    /// Zero when w is not in the support.
    Coefficient coefficient(const Word& w) const;
    bool contains(const Word& w) const { return terms_.count(w) != 0; }
    std::vector<Word> support() const;

    void add_term(const Word& w, const Coefficient& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Coefficient& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Coefficient& c, Polynomial f) { return f *= c; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

    /// Linear extension of u -> [u].
    Polynomial bracket() const;

    bool is_rbnf() const;
    std::set<std::string> parameters() const;
    Polynomial specialize(const std::map<std::string, mpq_class>& values) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::size_t hash() const;

private:
    Terms terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Coefficient& a, const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Supp(f) and Supp(g) are disjoint.
bool direct_sum(const Polynomial& f, const Polynomial& g);

struct Split {
    Coefficient coeff;
    Polynomial complement;
};

/// f = coeff * w + complement, with w outside Supp(complement).
Split support_and_complement(const Polynomial& f, const Word& w);

using WordOrder = std::function<std::strong_ordering(const Word&, const Word&)>;

struct Leading {
    Word word;
    Coefficient coeff;
    Polynomial remainder;
};

/// Greatest monomial of f under `order` (db by default). Throws
/// std::domain_error for the zero polynomial.
Leading leading(const Polynomial& f, const WordOrder& order = {});

/// Greatest monomial of f satisfying `is_reducible`, if any.
std::optional<Word> leading_reducible(const Polynomial& f,
                                      const std::function<bool(const Word&)>& is_reducible,
                                      const WordOrder& order = {});

/// Greatest monomial not in normal form, under the db order.
std::optional<Word> leading_reducible(const Polynomial& f);

Polynomial substitute(const StarWord& q, const Polynomial& s);
Polynomial substitute2(const TwoStarWord& q, const Polynomial& s1, const Polynomial& s2);

using Assignment = std::map<std::string, Polynomial>;

/// Multiplication and operator of the operated algebra an expression is
/// evaluated in.
struct OperatedOps {
    std::function<Polynomial(const Polynomial&, const Polynomial&)> mul;
    std::function<Polynomial(const Polynomial&)> bracket;
};

/// Evaluate phi by sending each letter to its assigned value, inside the free
/// operated algebra. Throws std::invalid_argument on an unassigned letter.
Polynomial evaluate(const Polynomial& phi, const Assignment& assignment);
Polynomial evaluate(const Polynomial& phi, const Assignment& assignment, const OperatedOps& ops);

/// Word-level substitution of letters by words.
Word substitute_letters(const Word& w, const std::map<std::string, Word>& values);

}  // namespace rbt

template <>
struct std::hash<rbt::Polynomial> {
    std::size_t operator()(const rbt::Polynomial& f) const { return f.hash(); }
};
