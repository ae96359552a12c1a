#pragma once

// Compositions of the rule polynomials phi(u,v) = [u][v] - [B(u,v)] and their
// triviality.

#include <optional>

#include "rbt/rewrite.hpp"

namespace rbt {

enum class CompositionKind { Intersection, Inclusion };
enum class Side { Left, Right };

struct Composition {
    CompositionKind kind = CompositionKind::Intersection;
    Polynomial f;
    Polynomial g;
    // Intersection: ambient = lead(f) * mu = nu * lead(g).
    std::optional<Word> mu;
    std::optional<Word> nu;
    // Inclusion: ambient = lead(f) = q(lead(g)).
    std::optional<StarWord> q;
    Word ambient;
    Polynomial value;
};

/// f = phi(u,v), g = phi(v,s) overlapping in [v]: ambient [u][v][s],
/// value f*[s] - [u]*g.
Composition intersection_composition(const Word& u, const Word& v, const Word& s, const OpiSpec& phi);

/// g = phi(r,s) inside one argument of f. Left: f = phi(q'([r][s]), other)
/// with q = [q'] [other]; Right: f = phi(other, q'([r][s])) with
/// q = [other] [q'].
Composition inclusion_composition(Side side, const StarWord& qprime, const Word& r, const Word& s,
                                  const Word& other, const OpiSpec& phi);

/// General inclusion: f = phi(u,v), g = phi(r,s) with q([r][s]) = [u][v].
/// Throws std::invalid_argument if q does not fit or is the bare hole (then
/// f and g coincide).
Composition inclusion_composition(const Word& u, const Word& v, const StarWord& q, const Word& r,
                                  const Word& s, const OpiSpec& phi);

enum class Triviality { Trivial, NotTrivial, BoundViolated, Indeterminate };

const char* to_string(Triviality t);

/// Certify h trivial modulo (S, w) by reduction to zero. Requires
/// lead(h) < w; otherwise BoundViolated.
Triviality is_trivial_mod(const Polynomial& h, const Word& w, const OpiSpec& phi,
                          std::size_t fuel = kDefaultFuel);

/// Membership in Irr(S), which for these rule sets is normal form.
inline bool irr_membership(const Word& u) { return u.is_rbnf(); }

}  // namespace rbt
