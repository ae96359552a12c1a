#include "rbt/freealg.hpp"

namespace rbt {

FreeAlgebra::FreeAlgebra(OpiSpec phi, std::size_t fuel) : phi_(std::move(phi)), fuel_(fuel) {
    RbTypeReport r = rota_baxter_report(phi_, fuel_);
    if (r.verdict != Verdict::RotaBaxterType)
        throw NotConvergent("Reduce undefined without convergence: " + std::string(to_string(r.verdict)) +
                            (r.note.empty() ? "" : " (" + r.note + ")"));
}

Polynomial FreeAlgebra::reduce(const Polynomial& f) const {
    Polynomial out;
    for (const auto& [w, c] : f) {
        if (w.is_rbnf()) {
            out.add_term(w, c);
            continue;
        }
        std::optional<Polynomial> nf;
        {
            std::lock_guard lock(mutex_);
            auto it = reduce_cache_.find(w);
            if (it != reduce_cache_.end()) nf = it->second;
        }
        if (!nf) {
            nf = rbt::reduce(Polynomial(w), phi_, fuel_);
            std::lock_guard lock(mutex_);
            reduce_cache_.emplace(w, *nf);
        }
        out += c * *nf;
    }
    return out;
}

namespace {

// Split u into everything before its last block and the last block.
std::pair<Word, Word> split_last(const Word& u) {
    const auto& atoms = u.atoms();
    std::size_t cut = atoms.size() - 1;
    if (!atoms.back().is_bracket())
        while (cut > 0 && !atoms[cut - 1].is_bracket()) --cut;
    return {Word::from_atoms({atoms.begin(), atoms.begin() + cut}),
            Word::from_atoms({atoms.begin() + cut, atoms.end()})};
}

std::pair<Word, Word> split_first(const Word& v) {
    const auto& atoms = v.atoms();
    std::size_t cut = 1;
    if (!atoms.front().is_bracket())
        while (cut < atoms.size() && !atoms[cut].is_bracket()) ++cut;
    return {Word::from_atoms({atoms.begin(), atoms.begin() + cut}),
            Word::from_atoms({atoms.begin() + cut, atoms.end()})};
}

}  // namespace

Polynomial FreeAlgebra::diamond(const Word& u, const Word& v) const {
    if (!u.is_rbnf() || !v.is_rbnf()) throw std::invalid_argument("diamond needs words in normal form");
    return diamond_rec(u, v);
}

Polynomial FreeAlgebra::diamond_rec(const Word& u, const Word& v) const {
    if (u.is_unit()) return Polynomial(v);
    if (v.is_unit()) return Polynomial(u);
    if (u.p_breadth() == 0 || v.p_breadth() == 0) return Polynomial(u * v);

    const auto key = std::make_pair(u, v);
    {
        std::lock_guard lock(mutex_);
        auto it = diamond_cache_.find(key);
        if (it != diamond_cache_.end()) return it->second;
    }

    Polynomial out;
    if (u.breadth() == 1 && v.breadth() == 1) {
        out = apply_p(eval_b(Polynomial(u.atoms()[0].inner), Polynomial(v.atoms()[0].inner)));
    } else {
        auto [head, last] = split_last(u);
        auto [first, tail] = split_first(v);
        out = Polynomial(head) * diamond_rec(last, first) * Polynomial(tail);
    }

    std::lock_guard lock(mutex_);
    diamond_cache_.emplace(key, out);
    return out;
}

Polynomial FreeAlgebra::mul(const Polynomial& f, const Polynomial& g) const {
    if (!f.is_rbnf() || !g.is_rbnf()) throw std::invalid_argument("product needs polynomials in normal form");
    Polynomial out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) out += (ca * cb) * diamond_rec(a, b);
    return out;
}

Polynomial FreeAlgebra::eval_b(const Polynomial& f, const Polynomial& g) const {
    OperatedOps ops{[this](const Polynomial& a, const Polynomial& b) { return mul(a, b); },
                    [](const Polynomial& a) { return apply_p(a); }};
    return evaluate(phi_.b(), Assignment{{"x", f}, {"y", g}}, ops);
}

Polynomial FreeAlgebra::double_product(const Polynomial& f, const Polynomial& g) const {
    if (!f.is_rbnf() || !g.is_rbnf()) throw std::invalid_argument("product needs polynomials in normal form");
    return eval_b(f, g);
}

Polynomial reduce_map(const Polynomial& f, const OpiSpec& phi) { return FreeAlgebra(phi).reduce(f); }

Polynomial diamond(const Word& u, const Word& v, const OpiSpec& phi) { return FreeAlgebra(phi).diamond(u, v); }

Polynomial free_mul(const Polynomial& f, const Polynomial& g, const OpiSpec& phi) {
    return FreeAlgebra(phi).mul(f, g);
}

Polynomial double_product(const Polynomial& f, const Polynomial& g, const OpiSpec& phi) {
    return FreeAlgebra(phi).double_product(f, g);
}

}  // namespace rbt
