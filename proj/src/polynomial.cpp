#include "rbt/polynomial.hpp"

#include <optional>
#include <stdexcept>

namespace rbt {

Polynomial::Polynomial(const Word& w) { terms_.emplace(w, Coefficient(1)); }

Polynomial::Polynomial(const Coefficient& c, const Word& w) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

Coefficient Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient() : it->second;
}

std::vector<Word> Polynomial::support() const {
    std::vector<Word> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.push_back(w);
    return out;
}

void Polynomial::add_term(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Coefficient& a) {
    if (a.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (a.is_one()) return *this;
    // Q[params] is a domain: no product of nonzero coefficients vanishes.
    for (auto& [w, c] : terms_) c *= a;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial out;
    for (const auto& [u, a] : f.terms_)
        for (const auto& [v, b] : g.terms_) out.add_term(u * v, a * b);
    return out;
}

Polynomial Polynomial::bracket() const {
    Polynomial out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Word::bracket(w), c);
    return out;
}

bool Polynomial::is_rbnf() const {
    for (const auto& [w, c] : terms_)
        if (!w.is_rbnf()) return false;
    return true;
}

std::set<std::string> Polynomial::parameters() const {
    std::set<std::string> out;
    for (const auto& [w, c] : terms_) out.merge(c.parameters());
    return out;
}

Polynomial Polynomial::specialize(const std::map<std::string, mpq_class>& values) const {
    Polynomial out;
    for (const auto& [w, c] : terms_) out.add_term(w, c.specialize(values));
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [w, c] : terms_) h = (h * 1000003) ^ (w.hash() + 31 * c.hash());
    return h;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_scale(const Coefficient& a, const Polynomial& f) { return a * f; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

bool direct_sum(const Polynomial& f, const Polynomial& g) {
    const Polynomial& small = f.size() <= g.size() ? f : g;
    const Polynomial& large = f.size() <= g.size() ? g : f;
    for (const auto& [w, c] : small)
        if (large.contains(w)) return false;
    return true;
}

Split support_and_complement(const Polynomial& f, const Word& w) {
    Split s{f.coefficient(w), f};
    s.complement.add_term(w, -s.coeff);
    return s;
}

Leading leading(const Polynomial& f, const WordOrder& order) {
    if (f.is_zero()) throw std::domain_error("no leading term");
    auto best = f.begin();
    if (order) {
        for (auto it = std::next(best); it != f.end(); ++it)
            if (order(it->first, best->first) > 0) best = it;
    }
    Leading out{best->first, best->second, f};
    out.remainder.add_term(best->first, -best->second);
    return out;
}

std::optional<Word> leading_reducible(const Polynomial& f,
                                      const std::function<bool(const Word&)>& is_reducible,
                                      const WordOrder& order) {
    std::optional<Word> best;
    for (const auto& [w, c] : f) {
        if (!is_reducible(w)) continue;
        if (!order) return w;  // terms are already db-descending
        if (!best || order(w, *best) > 0) best = w;
    }
    return best;
}

std::optional<Word> leading_reducible(const Polynomial& f) {
    for (const auto& [w, c] : f)
        if (!w.is_rbnf()) return w;
    return std::nullopt;
}

Polynomial substitute(const StarWord& q, const Polynomial& s) {
    if (q.is_trivial()) return s;
    Polynomial out;
    for (const auto& [w, c] : s) out.add_term(q(w), c);
    return out;
}

Polynomial substitute2(const TwoStarWord& q, const Polynomial& s1, const Polynomial& s2) {
    Polynomial out;
    for (const auto& [a, ca] : s1)
        for (const auto& [b, cb] : s2) out.add_term(q(a, b), ca * cb);
    return out;
}

namespace {

Polynomial evaluate_word(const Word& w, const Assignment& assignment, const OperatedOps* ops) {
    // The first factor seeds the product, so ops->mul need not be unital.
    if (w.is_unit()) return Polynomial(Word());
    std::optional<Polynomial> acc;
    for (const Atom& a : w.atoms()) {
        Polynomial factor;
        switch (a.kind) {
        case AtomKind::Letter: {
            auto it = assignment.find(a.name);
            if (it == assignment.end()) throw std::invalid_argument("unassigned variable '" + a.name + "'");
            factor = it->second;
            break;
        }
        case AtomKind::Bracket: {
            Polynomial inner = evaluate_word(a.inner, assignment, ops);
            factor = ops ? ops->bracket(inner) : inner.bracket();
            break;
        }
        case AtomKind::Star:
            throw std::invalid_argument("cannot evaluate a word containing a hole");
        }
        if (!acc) acc = std::move(factor);
        else acc = ops ? ops->mul(*acc, factor) : *acc * factor;
        if (acc->is_zero()) return *acc;
    }
    return *acc;
}

Polynomial evaluate_impl(const Polynomial& phi, const Assignment& assignment, const OperatedOps* ops) {
    Polynomial out;
    for (const auto& [w, c] : phi) out += c * evaluate_word(w, assignment, ops);
    return out;
}

}  // namespace

Polynomial evaluate(const Polynomial& phi, const Assignment& assignment) {
    return evaluate_impl(phi, assignment, nullptr);
}

Polynomial evaluate(const Polynomial& phi, const Assignment& assignment, const OperatedOps& ops) {
    return evaluate_impl(phi, assignment, &ops);
}

Word substitute_letters(const Word& w, const std::map<std::string, Word>& values) {
    std::vector<Atom> atoms;
    atoms.reserve(w.breadth());
    for (const Atom& a : w.atoms()) {
        if (a.is_letter()) {
            auto it = values.find(a.name);
            if (it == values.end()) {
                atoms.push_back(a);
            } else {
                const auto& sub = it->second.atoms();
                atoms.insert(atoms.end(), sub.begin(), sub.end());
            }
        } else if (a.is_bracket()) {
            atoms.push_back(Atom::bracket(substitute_letters(a.inner, values)));
        } else {
            atoms.push_back(a);
        }
    }
    return Word::from_atoms(std::move(atoms));
}

}  // namespace rbt
