#include "rbt/order.hpp"

#include <string_view>

#include "rbt/polynomial.hpp"

namespace rbt {

namespace {

std::strong_ordering cmp_name(std::string_view a, std::string_view b) {
    int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Holes only occur in context words; they sort after every generator.
std::strong_ordering cmp_letter_atom(const Atom& a, const Atom& b) {
    if (a.is_star() || b.is_star()) {
        if (a.is_star() && b.is_star()) return a.star <=> b.star;
        return a.is_star() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.key != b.key) return a.key <=> b.key;
    if (a.name.size() <= 8 && b.name.size() <= 8) return std::strong_ordering::equal;
    return cmp_name(a.name, b.name);
}

// Degree-lex on atom ranges known to be free of brackets.
std::strong_ordering cmp_block(const Atom* a, std::size_t na, const Atom* b, std::size_t nb) {
    if (na != nb) return na <=> nb;
    for (std::size_t i = 0; i < na; ++i) {
        auto c = cmp_letter_atom(a[i], b[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t next_bracket(const std::vector<Atom>& atoms, std::size_t i) {
    while (i < atoms.size() && !atoms[i].is_bracket()) ++i;
    return i;
}

}  // namespace

std::strong_ordering cmp_deglex(const Word& u, const Word& v) {
    if (u.p_breadth() != 0 || v.p_breadth() != 0)
        throw std::invalid_argument("degree-lex order applies to letters-only words");
    return cmp_block(u.atoms().data(), u.breadth(), v.atoms().data(), v.breadth());
}

std::strong_ordering cmp_db(const Word& u, const Word& v) {
    if (u.node() == v.node()) return std::strong_ordering::equal;
    if (u.deg_p() != v.deg_p()) return u.deg_p() <=> v.deg_p();
    if (u.p_breadth() != v.p_breadth()) return u.p_breadth() <=> v.p_breadth();

    const auto& ua = u.atoms();
    const auto& va = v.atoms();
    if (u.p_breadth() == 0) return cmp_block(ua.data(), ua.size(), va.data(), va.size());

    // Bracket contents first, in order.
    for (std::size_t i = next_bracket(ua, 0), j = next_bracket(va, 0); i < ua.size();
         i = next_bracket(ua, i + 1), j = next_bracket(va, j + 1)) {
        auto c = cmp_db(ua[i].inner, va[j].inner);
        if (c != 0) return c;
    }
    // Then the letter blocks between them.
    std::size_t ub = 0;
    std::size_t vb = 0;
    while (true) {
        std::size_t ue = next_bracket(ua, ub);
        std::size_t ve = next_bracket(va, vb);
        auto c = cmp_block(ua.data() + ub, ue - ub, va.data() + vb, ve - vb);
        if (c != 0) return c;
        if (ue == ua.size()) break;
        ub = ue + 1;
        vb = ve + 1;
    }
    return std::strong_ordering::equal;
}

const char* to_string(Compatibility c) {
    return c == Compatibility::Compatible ? "compatible" : "unknown";
}

Compatibility compatible_with_db(const Polynomial& b) {
    for (const auto& [w, c] : b) {
        if (!w.is_rbnf() || w.deg_p() > 1) return Compatibility::Unknown;
        if (count_letter(w, "x") > 1 || count_letter(w, "y") > 1) return Compatibility::Unknown;
    }
    return Compatibility::Compatible;
}

}  // namespace rbt
