#include "rbt/freealg.hpp"
#include "rbt/random.hpp"
#include "support.hpp"

using namespace rbt;
using rbt::test::P;
using rbt::test::W;

namespace {

const FreeAlgebra& algebra(const std::string& key) {
    static std::map<std::string, std::unique_ptr<FreeAlgebra>> cache;
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<FreeAlgebra>(catalog_entry(key).spec);
    return *slot;
}

WordShape rbnf_shape() {
    WordShape ws;
    ws.alphabet = {"x", "y", "z"};
    ws.max_depth = 2;
    ws.max_breadth = 3;
    return ws;
}

PolyShape rbnf_poly_shape() {
    PolyShape s;
    s.word = rbnf_shape();
    s.word.max_breadth = 2;
    s.max_terms = 2;
    s.rbnf = true;
    return s;
}

bool has_unit_bracket(const Word& w) {
    for (const Atom& a : w.atoms())
        if (a.is_bracket() && (a.inner.is_unit() || has_unit_bracket(a.inner))) return true;
    return false;
}

}  // namespace

TEST_CASE("construction needs a verified identity") {
    CHECK_THROWS_AS(FreeAlgebra(OpiSpec("t", P("y[x]"))), NotConvergent);
    CHECK_THROWS_AS(FreeAlgebra(OpiSpec("t", P("x[[y]]"))), NotConvergent);
    CHECK_THROWS_AS(reduce_map(P("[a][b]"), OpiSpec("t", P("[x][y]"))), NotConvergent);
    CHECK_NOTHROW(FreeAlgebra(catalog_entry("nijenhuis").spec));
}

TEST_CASE("reduce map") {
    const OpiSpec& rb = catalog_entry("rota-baxter").spec;
    CHECK(reduce_map(P("[x][y]"), rb) == P("[x[y]] + [[x]y] + lam*[x y]"));
    CHECK(reduce_map(P("x[y] - 2*z"), rb) == P("x[y] - 2*z"));
    CHECK(reduce_map(P("[u][v][w]"), catalog_entry("average").spec) == P("[u[v[w]]]"));
    const FreeAlgebra& a = algebra("f");
    CHECK(a.reduce(P("[x][y] + [x][y]")) == Coefficient(2) * P("[x[y]] + [[x]y] + lam*[x y]"));
}

TEST_CASE("diamond on standard decompositions") {
    const FreeAlgebra& n = algebra("nijenhuis");
    // Letters on either side: concatenation.
    CHECK(n.diamond(W("x y"), W("[z]")) == P("x y[z]"));
    CHECK(n.diamond(W("[x]"), W("y")) == P("[x]y"));
    CHECK(n.diamond(W("1"), W("[x]")) == P("[x]"));
    // Two bracketed words: [B(x, y)].
    CHECK(n.diamond(W("[x]"), W("[y]")) == P("[x[y]] + [[x]y] - [[x y]]"));
    // Longer words: only the touching blocks interact.
    CHECK(n.diamond(W("a[x]"), W("[y]b")) == P("a[x[y]]b + a[[x]y]b - a[[x y]]b"));
    CHECK(n.diamond(W("a[x]"), W("b[y]")) == P("a[x]b[y]"));
    CHECK_THROWS_AS(n.diamond(W("[x][y]"), W("z")), std::invalid_argument);
    CHECK(diamond(W("[x]"), W("[y]"), catalog_entry("e").spec) == n.diamond(W("[x]"), W("[y]")));
}

TEST_CASE("double product") {
    const FreeAlgebra& rb = algebra("rota-baxter");
    CHECK(rb.double_product(P("x"), P("y")) == P("x[y] + [x]y + lam*x y"));
    CHECK(rb.double_product(P("[x]"), P("y")) == P("[x[y]] + [[x]y] + lam*[x y] + [[x]]y + lam*[x]y"));
    CHECK(double_product(P("x"), P("y"), catalog_entry("nijenhuis").spec) == P("x[y] + [x]y - [x y]"));
    CHECK(FreeAlgebra::apply_p(P("x + [y]")) == P("[x] + [[y]]"));
}

TEST_CASE("diamond agrees with reducing the concatenation") {
    Rng rng(101);
    auto ws = rbnf_shape();
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        const FreeAlgebra& a = algebra(e.key);
        for (int i = 0; i < 40; ++i) {
            Word u = random_rbnf_word(rng, ws);
            Word v = random_rbnf_word(rng, ws);
            CHECK(a.diamond(u, v) == a.reduce(Polynomial(u * v)));
        }
    }
}

TEST_CASE("diamond is associative and unital") {
    Rng rng(103);
    auto ws = rbnf_shape();
    ws.max_breadth = 2;
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        const FreeAlgebra& a = algebra(e.key);
        for (int i = 0; i < 15; ++i) {
            Polynomial u(random_rbnf_word(rng, ws)), v(random_rbnf_word(rng, ws)), w(random_rbnf_word(rng, ws));
            CHECK(a.mul(a.mul(u, v), w) == a.mul(u, a.mul(v, w)));
            CHECK(a.mul(u, P("1")) == u);
            CHECK(a.mul(P("1"), u) == u);
        }
    }
}

TEST_CASE("the operator is a morphism into the algebra") {
    Rng rng(107);
    auto shape = rbnf_poly_shape();
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        const FreeAlgebra& a = algebra(e.key);
        for (int i = 0; i < 15; ++i) {
            Polynomial f = random_polynomial(rng, shape);
            Polynomial g = random_polynomial(rng, shape);
            // [f] [g] = [B(f, g)] holds in the algebra.
            CHECK(a.mul(FreeAlgebra::apply_p(f), FreeAlgebra::apply_p(g)) ==
                  FreeAlgebra::apply_p(a.double_product(f, g)));
            CHECK(a.mul(FreeAlgebra::apply_p(f), FreeAlgebra::apply_p(g)) ==
                  a.reduce(FreeAlgebra::apply_p(f) * FreeAlgebra::apply_p(g)));
            CHECK(a.reduce(FreeAlgebra::apply_p(f)) == FreeAlgebra::apply_p(a.reduce(f)));
            CHECK(a.mul(FreeAlgebra::apply_p(f), FreeAlgebra::apply_p(g)) ==
                  FreeAlgebra::apply_p(a.reduce(e.spec.apply_b(f, g))));
        }
    }
}

TEST_CASE("double product is associative") {
    Rng rng(109);
    auto shape = rbnf_poly_shape();
    shape.word.max_depth = 1;
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        const FreeAlgebra& a = algebra(e.key);
        for (int i = 0; i < 8; ++i) {
            Polynomial f = random_polynomial(rng, shape);
            Polynomial g = random_polynomial(rng, shape);
            Polynomial h = random_polynomial(rng, shape);
            CHECK(a.double_product(a.double_product(f, g), h) == a.double_product(f, a.double_product(g, h)));
        }
    }
}

TEST_CASE("double product with the same operator satisfies the identity") {
    // Only for B without [1]: entries a to f.
    Rng rng(113);
    auto shape = rbnf_poly_shape();
    shape.word.max_depth = 1;
    shape.max_terms = 1;
    int tested = 0;
    for (const auto& e : catalog()) {
        bool uses_unit = false;
        for (const auto& [w, c] : e.spec.b()) uses_unit |= has_unit_bracket(w);
        if (uses_unit) continue;
        ++tested;
        CAPTURE(e.key);
        const FreeAlgebra& a = algebra(e.key);
        OperatedOps star{[&](const Polynomial& f, const Polynomial& g) { return a.double_product(f, g); },
                         [](const Polynomial& f) { return FreeAlgebra::apply_p(f); }};
        for (int i = 0; i < 8; ++i) {
            Polynomial f = random_polynomial(rng, shape);
            Polynomial g = random_polynomial(rng, shape);
            Polynomial lhs = a.double_product(FreeAlgebra::apply_p(f), FreeAlgebra::apply_p(g));
            Polynomial rhs = FreeAlgebra::apply_p(evaluate(e.spec.b(), Assignment{{"x", f}, {"y", g}}, star));
            CHECK(lhs == rhs);
        }
    }
    CHECK(tested == 6);
}
