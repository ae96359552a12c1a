#include "rbt/gsbasis.hpp"

namespace rbt {

Composition intersection_composition(const Word& u, const Word& v, const Word& s, const OpiSpec& phi) {
    Composition c;
    c.kind = CompositionKind::Intersection;
    c.f = phi.phi(u, v);
    c.g = phi.phi(v, s);
    c.mu = Word::bracket(s);
    c.nu = Word::bracket(u);
    c.ambient = Word::bracket(u) * Word::bracket(v) * Word::bracket(s);
    c.value = c.f * Polynomial(*c.mu) - Polynomial(*c.nu) * c.g;
    return c;
}

Composition inclusion_composition(Side side, const StarWord& qprime, const Word& r, const Word& s,
                                  const Word& other, const OpiSpec& phi) {
    Word inner = qprime(Word::bracket(r) * Word::bracket(s));
    Word hole = Word::bracket(qprime.word());
    Word rest = Word::bracket(other);
    if (side == Side::Left) return inclusion_composition(inner, other, StarWord(hole * rest), r, s, phi);
    return inclusion_composition(other, inner, StarWord(rest * hole), r, s, phi);
}

Composition inclusion_composition(const Word& u, const Word& v, const StarWord& q, const Word& r,
                                  const Word& s, const OpiSpec& phi) {
    Word lhs = Word::bracket(u) * Word::bracket(v);
    if (q.is_trivial()) throw std::invalid_argument("trivial context: the two rule polynomials coincide");
    if (q(Word::bracket(r) * Word::bracket(s)) != lhs)
        throw std::invalid_argument("context does not place [r][s] inside [u][v]");
    Composition c;
    c.kind = CompositionKind::Inclusion;
    c.f = phi.phi(u, v);
    c.g = phi.phi(r, s);
    c.q = q;
    c.ambient = lhs;
    c.value = c.f - substitute(q, c.g);
    return c;
}

const char* to_string(Triviality t) {
    switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::NotTrivial: return "not-trivial";
    case Triviality::BoundViolated: return "bound-violated";
    case Triviality::Indeterminate: return "indeterminate";
    }
    return "?";
}

Triviality is_trivial_mod(const Polynomial& h, const Word& w, const OpiSpec& phi, std::size_t fuel) {
    if (h.is_zero()) return Triviality::Trivial;
    if (cmp_db(leading(h).word, w) >= 0) return Triviality::BoundViolated;
    try {
        return reduce(h, phi, fuel).is_zero() ? Triviality::Trivial : Triviality::NotTrivial;
    } catch (const FuelExhausted&) {
        return Triviality::Indeterminate;
    }
}

}  // namespace rbt
