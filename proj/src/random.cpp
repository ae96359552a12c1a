#include "rbt/random.hpp"

namespace rbt {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word build(Rng& rng, const WordShape& shape, std::size_t depth, bool rbnf, bool allow_unit) {
    std::size_t n = uniform(rng, allow_unit ? 0 : 1, shape.max_breadth);
    std::vector<Atom> atoms;
    bool prev_bracket = false;
    for (std::size_t i = 0; i < n; ++i) {
        bool bracket = depth > 0 && uniform(rng, 0, 2) == 0 && !(rbnf && prev_bracket);
        if (bracket) {
            atoms.push_back(Atom::bracket(build(rng, shape, depth - 1, rbnf, shape.allow_unit)));
        } else {
            atoms.push_back(Atom::letter(shape.alphabet[uniform(rng, 0, shape.alphabet.size() - 1)]));
        }
        prev_bracket = bracket;
    }
    return Word::from_atoms(std::move(atoms));
}

void insertion_points(const Word& w, std::vector<std::uint32_t>& path,
                      std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>>& out) {
    const auto& atoms = w.atoms();
    for (std::uint32_t i = 0; i <= atoms.size(); ++i) {
        out.emplace_back(path, i);
        if (i < atoms.size() && atoms[i].is_bracket()) {
            path.push_back(i);
            insertion_points(atoms[i].inner, path, out);
            path.pop_back();
        }
    }
}

}  // namespace

Word random_word(Rng& rng, const WordShape& shape) {
    return build(rng, shape, shape.max_depth, false, shape.allow_unit);
}

Word random_rbnf_word(Rng& rng, const WordShape& shape) {
    return build(rng, shape, shape.max_depth, true, shape.allow_unit);
}

StarWord random_star_word(Rng& rng, const WordShape& shape) {
    Word w = random_word(rng, shape);
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> points;
    std::vector<std::uint32_t> path;
    insertion_points(w, path, points);
    const auto& [p, i] = points[uniform(rng, 0, points.size() - 1)];
    return StarWord(splice(w, p, i, i, Word::star(0)));
}

Polynomial random_polynomial(Rng& rng, const PolyShape& shape) {
    static const Coefficient lam = Coefficient::parameter("lam");
    static const Coefficient c = Coefficient::parameter("c");
    Polynomial f;
    std::size_t n = uniform(rng, 1, shape.max_terms);
    for (std::size_t k = 0; k < n; ++k) {
        Word w = shape.rbnf ? random_rbnf_word(rng, shape.word) : random_word(rng, shape.word);
        long value = static_cast<long>(uniform(rng, 1, 3)) * (uniform(rng, 0, 1) ? 1 : -1);
        Coefficient coeff(value);
        if (shape.parameters) {
            switch (uniform(rng, 0, 3)) {
            case 0: coeff *= lam; break;
            case 1: coeff *= c; break;
            default: break;
            }
        }
        f.add_term(w, coeff);
    }
    return f;
}

}  // namespace rbt
