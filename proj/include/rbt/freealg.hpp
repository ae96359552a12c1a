#pragma once

// The free algebra for a Rota-Baxter-type identity, on the basis of words in
// normal form.

#include <mutex>
#include <unordered_map>

#include "rbt/rbtype.hpp"

namespace rbt {

class NotConvergent : public std::invalid_argument {
public:
    explicit NotConvergent(const std::string& what) : std::invalid_argument(what) {}
};

class FreeAlgebra {
public:
    /// Throws NotConvergent unless the identity is verified to be of
    /// Rota-Baxter type.
    explicit FreeAlgebra(OpiSpec phi, std::size_t fuel = kDefaultFuel);

    const OpiSpec& spec() const { return phi_; }

    /// Normal form by rewriting.
    Polynomial reduce(const Polynomial& f) const;

    /// Product of two normal-form words, by recursion on their standard
    /// decompositions. Throws std::invalid_argument on other input.
    Polynomial diamond(const Word& u, const Word& v) const;
    Polynomial mul(const Polynomial& f, const Polynomial& g) const;
    static Polynomial apply_p(const Polynomial& f) { return f.bracket(); }
    /// B(f, g) evaluated in this algebra.
    Polynomial double_product(const Polynomial& f, const Polynomial& g) const;

private:
    Polynomial diamond_rec(const Word& u, const Word& v) const;
    Polynomial eval_b(const Polynomial& f, const Polynomial& g) const;

    struct PairHash {
        std::size_t operator()(const std::pair<Word, Word>& p) const {
            return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
        }
    };

    OpiSpec phi_;
    std::size_t fuel_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::pair<Word, Word>, Polynomial, PairHash> diamond_cache_;
    mutable std::unordered_map<Word, Polynomial> reduce_cache_;
};

/// Free-function forms; each builds (and verifies) the algebra.
Polynomial reduce_map(const Polynomial& f, const OpiSpec& phi);
Polynomial diamond(const Word& u, const Word& v, const OpiSpec& phi);
Polynomial free_mul(const Polynomial& f, const Polynomial& g, const OpiSpec& phi);
inline Polynomial apply_p(const Polynomial& f) { return f.bracket(); }
Polynomial double_product(const Polynomial& f, const Polynomial& g, const OpiSpec& phi);

}  // namespace rbt
