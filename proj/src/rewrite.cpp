#include "rbt/rewrite.hpp"

#include <deque>
#include <unordered_set>

namespace rbt {

namespace {

void check_variables(const Word& w) {
    for (const Atom& a : w.atoms()) {
        if (a.is_letter() && a.name != "x" && a.name != "y")
            throw std::invalid_argument("B may only use the variables x and y, found '" + a.name + "'");
        if (a.is_star()) throw std::invalid_argument("B may not contain a hole");
        if (a.is_bracket()) check_variables(a.inner);
    }
}

}  // namespace

OpiSpec::OpiSpec(std::string name, Polynomial b) : name_(std::move(name)), b_(std::move(b)) {
    if (b_.is_zero()) throw std::invalid_argument("B must be nonzero");
    for (const auto& [w, c] : b_) check_variables(w);
    for (const auto& p : b_.parameters()) parameters_.push_back(p);
}

Polynomial OpiSpec::apply_b(const Word& u, const Word& v) const {
    const std::map<std::string, Word> values{{"x", u}, {"y", v}};
    Polynomial out;
    for (const auto& [w, c] : b_) out.add_term(substitute_letters(w, values), c);
    return out;
}

Polynomial OpiSpec::apply_b(const Polynomial& u, const Polynomial& v) const {
    return evaluate(b_, Assignment{{"x", u}, {"y", v}});
}

Polynomial OpiSpec::phi(const Word& u, const Word& v) const {
    Polynomial out(Word::bracket(u) * Word::bracket(v));
    out -= apply_b(u, v).bracket();
    return out;
}

Polynomial OpiSpec::phi(const Polynomial& u, const Polynomial& v) const {
    return u.bracket() * v.bracket() - apply_b(u, v).bracket();
}

OpiSpec OpiSpec::specialize(const std::map<std::string, mpq_class>& values) const {
    return OpiSpec(name_, b_.specialize(values));
}

// ---------------------------------------------------------------------------

namespace {

void collect_redexes(const Word& level, std::vector<std::uint32_t>& path, const Word& root,
                     std::vector<RedexSite>& out) {
    const auto& atoms = level.atoms();
    for (std::uint32_t i = 0; i + 1 < atoms.size(); ++i) {
        if (atoms[i].is_bracket() && atoms[i + 1].is_bracket()) {
            StarWord ctx(splice(root, path, i, i + 2, Word::star(0)));
            out.push_back(RedexSite{std::move(ctx), atoms[i].inner, atoms[i + 1].inner, root, Coefficient(1)});
        }
    }
    for (std::uint32_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_bracket() && !atoms[i].inner.is_rbnf()) {
            path.push_back(i);
            collect_redexes(atoms[i].inner, path, root, out);
            path.pop_back();
        }
    }
}

std::optional<RedexSite> first_at(const Word& level, std::vector<std::uint32_t>& path, const Word& root) {
    const auto& atoms = level.atoms();
    for (std::uint32_t i = 0; i + 1 < atoms.size(); ++i) {
        if (atoms[i].is_bracket() && atoms[i + 1].is_bracket()) {
            StarWord ctx(splice(root, path, i, i + 2, Word::star(0)));
            return RedexSite{std::move(ctx), atoms[i].inner, atoms[i + 1].inner, root, Coefficient(1)};
        }
    }
    for (std::uint32_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_bracket() && !atoms[i].inner.is_rbnf()) {
            path.push_back(i);
            return first_at(atoms[i].inner, path, root);
        }
    }
    return std::nullopt;
}

// In-place version of rewrite_step without validation.
void apply_site(Polynomial& f, const RedexSite& site, const OpiSpec& phi) {
    f.add_term(site.monomial, -site.coeff);
    for (const auto& [w, c] : phi.apply_b(site.left, site.right))
        f.add_term(site.context(Word::bracket(w)), site.coeff * c);
}

}  // namespace

std::vector<RedexSite> find_redexes(const Word& w) {
    std::vector<RedexSite> out;
    if (w.is_rbnf()) return out;
    std::vector<std::uint32_t> path;
    collect_redexes(w, path, w, out);
    return out;
}

std::vector<RedexSite> find_redexes(const Polynomial& f) {
    std::vector<RedexSite> out;
    for (const auto& [w, c] : f) {
        for (auto& site : find_redexes(w)) {
            site.coeff = c;
            out.push_back(std::move(site));
        }
    }
    return out;
}

std::optional<RedexSite> first_redex(const Word& w) {
    if (w.is_rbnf()) return std::nullopt;
    std::vector<std::uint32_t> path;
    return first_at(w, path, w);
}

Polynomial rewrite_step(const Polynomial& f, const RedexSite& site, const OpiSpec& phi) {
    if (site.coeff.is_zero() || f.coefficient(site.monomial) != site.coeff ||
        site.context(Word::bracket(site.left) * Word::bracket(site.right)) != site.monomial)
        throw StaleSite();
    Polynomial g = f;
    apply_site(g, site, phi);
    return g;
}

NormalForm normal_form(const Polynomial& f, const OpiSpec& phi, std::size_t fuel, bool record_trace) {
    NormalForm out{f, {}};
    Polynomial& cur = out.nf;
    std::size_t steps = 0;
    while (auto lw = leading_reducible(cur)) {
        if (steps == fuel) throw FuelExhausted(fuel);
        if (lw->depth() > kMaxRewriteDepth) throw FuelExhausted(steps, kMaxRewriteDepth);
        RedexSite site = *first_redex(*lw);
        site.coeff = cur.coefficient(*lw);
        apply_site(cur, site, phi);
        ++steps;
        if (record_trace) out.trace.push_back(TraceStep{std::move(site), cur});
    }
    return out;
}

Polynomial reduce(const Polynomial& f, const OpiSpec& phi, std::size_t fuel) {
    return normal_form(f, phi, fuel, false).nf;
}

// ---------------------------------------------------------------------------

const char* to_string(JoinOutcome o) {
    switch (o) {
    case JoinOutcome::Joinable: return "joinable";
    case JoinOutcome::NotJoinable: return "not-joinable";
    case JoinOutcome::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

using PolySet = std::unordered_set<Polynomial>;

struct Side {
    PolySet seen;
    std::deque<Polynomial> frontier;
};

// Expand one polynomial from `side`; returns a reduct also seen by `other`.
std::optional<Polynomial> expand(Side& side, const Side& other, const OpiSpec& phi, std::size_t& budget) {
    Polynomial p = std::move(side.frontier.front());
    side.frontier.pop_front();
    for (const auto& site : find_redexes(p)) {
        Polynomial q = p;
        apply_site(q, site, phi);
        if (side.seen.count(q)) continue;
        if (other.seen.count(q)) return q;
        if (budget == 0) throw FuelExhausted(0);
        --budget;
        side.seen.insert(q);
        side.frontier.push_back(std::move(q));
    }
    return std::nullopt;
}

JoinResult search(const Polynomial& f, const Polynomial& g, const OpiSpec& phi, std::size_t fuel) {
    Side a;
    Side b;
    a.seen.insert(f);
    a.frontier.push_back(f);
    b.seen.insert(g);
    b.frontier.push_back(g);
    std::size_t budget = fuel;
    try {
        while (!a.frontier.empty() || !b.frontier.empty()) {
            if (!a.frontier.empty())
                if (auto c = expand(a, b, phi, budget)) return {JoinOutcome::Joinable, c, "common reduct found"};
            if (!b.frontier.empty())
                if (auto c = expand(b, a, phi, budget)) return {JoinOutcome::Joinable, c, "common reduct found"};
        }
    } catch (const FuelExhausted&) {
        return {JoinOutcome::Indeterminate, std::nullopt, "search budget exhausted"};
    }
    return {JoinOutcome::NotJoinable, std::nullopt, "reduct sets are disjoint"};
}

}  // namespace

JoinResult joinable(const Polynomial& f, const Polynomial& g, const OpiSpec& phi, std::size_t fuel,
                    bool assume_convergent) {
    if (f == g) return {JoinOutcome::Joinable, f, "identical"};
    if (compatible_with_db(phi.b()) == Compatibility::Compatible) {
        Polynomial nf;
        Polynomial ng;
        try {
            nf = reduce(f, phi, fuel);
            ng = reduce(g, phi, fuel);
        } catch (const FuelExhausted& e) {
            return {JoinOutcome::Indeterminate, std::nullopt, e.what()};
        }
        if (nf == ng) return {JoinOutcome::Joinable, nf, "equal normal forms"};
        if (assume_convergent) return {JoinOutcome::NotJoinable, std::nullopt, "distinct normal forms"};
    }
    // A common reduct found by search is genuine; a negative answer needs the
    // whole (finite) reduct sets.
    return search(f, g, phi, fuel);
}

}  // namespace rbt
