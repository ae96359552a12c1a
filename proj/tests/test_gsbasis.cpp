#include "rbt/gsbasis.hpp"
#include "rbt/random.hpp"
#include "rbt/rbtype.hpp"
#include "support.hpp"

using namespace rbt;
using rbt::test::P;
using rbt::test::Q;
using rbt::test::W;

namespace {

OpiSpec spec(const std::string& b) { return OpiSpec("test", P(b)); }

const OpiSpec& average() { return catalog_entry("average").spec; }

WordShape arg_shape() {
    WordShape ws;
    ws.alphabet = {"a", "b", "c"};
    ws.max_depth = 1;
    ws.max_breadth = 2;
    return ws;
}

WordShape context_shape() {
    WordShape ws;
    ws.alphabet = {"a", "b"};
    ws.max_depth = 1;
    ws.max_breadth = 2;
    ws.allow_unit = false;
    return ws;
}

}  // namespace

TEST_CASE("intersection composition") {
    auto c = intersection_composition(W("u"), W("v"), W("s"), average());
    CHECK(c.kind == CompositionKind::Intersection);
    CHECK(c.ambient == W("[u][v][s]"));
    CHECK(*c.mu == W("[s]"));
    CHECK(*c.nu == W("[u]"));
    CHECK(leading(c.f).word * *c.mu == c.ambient);
    CHECK(*c.nu * leading(c.g).word == c.ambient);
    CHECK(c.value == -(P("[u[v]][s]") - P("[u][v[s]]")));
    CHECK(is_trivial_mod(c.value, c.ambient, average()) == Triviality::Trivial);

    // Hand expansion: -[B(u,v)][s] + [u][B(v,s)].
    c = intersection_composition(W("u"), W("v"), W("s"), catalog_entry("rota-baxter").spec);
    CHECK(c.value.size() == 6);
    CHECK(c.value == P("-[u[v]][s] - [[u]v][s] - lam*[u v][s] + [u][v[s]] + [u][[v]s] + lam*[u][v s]"));
}

TEST_CASE("inclusion composition") {
    const OpiSpec& phi = average();
    auto c = inclusion_composition(Side::Left, Q("a @"), W("b"), W("c"), W("d"), phi);
    CHECK(c.kind == CompositionKind::Inclusion);
    CHECK(c.ambient == W("[a[b][c]][d]"));
    CHECK(*c.q == Q("[a @][d]"));
    CHECK((*c.q)(leading(c.g).word) == leading(c.f).word);
    CHECK(c.value == P("[a[b[c]]][d] - [a[b][c][d]]"));

    c = inclusion_composition(Side::Right, Q("@"), W("b"), W("c"), W("d"), phi);
    CHECK(c.ambient == W("[d][[b][c]]"));
    CHECK(c.value == P("[d][[b[c]]] - [d[[b][c]]]"));

    CHECK_THROWS_AS(inclusion_composition(W("x"), W("y"), Q("@"), W("x"), W("y"), phi), std::invalid_argument);
    CHECK_THROWS_AS(inclusion_composition(W("[x][y]"), W("z"), Q("[@][z]"), W("x"), W("z"), phi),
                    std::invalid_argument);
    auto g = inclusion_composition(W("[x][y]"), W("z"), Q("[@][z]"), W("x"), W("y"), phi);
    CHECK(g.value == P("[[x[y]]][z] - [[x][y][z]]"));
}

TEST_CASE("triviality") {
    const OpiSpec& phi = average();
    CHECK(is_trivial_mod(Polynomial(), W("x"), phi) == Triviality::Trivial);
    CHECK(is_trivial_mod(P("[u][v][w]"), W("[u][v][w]"), phi) == Triviality::BoundViolated);
    CHECK(is_trivial_mod(P("[u][v] - [u[v]]"), W("[u][v][w]"), phi) == Triviality::Trivial);
    CHECK(is_trivial_mod(P("[u]"), W("[u][v]"), phi) == Triviality::NotTrivial);
    CHECK(to_string(Triviality::BoundViolated) == std::string("bound-violated"));
}

TEST_CASE("irreducible words") {
    CHECK(irr_membership(W("x[y]z[w[v]]")));
    CHECK(irr_membership(W("1")));
    CHECK_FALSE(irr_membership(W("[x][y]")));
    CHECK_FALSE(irr_membership(W("x[[a][b]]")));
}

TEST_CASE("catalog compositions are trivial") {
    Rng rng(89);
    auto args = arg_shape();
    auto ctx = context_shape();
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        for (int i = 0; i < 20; ++i) {
            Word u = random_word(rng, args), v = random_word(rng, args), s = random_word(rng, args);
            auto c = intersection_composition(u, v, s, e.spec);
            CHECK(is_trivial_mod(c.value, c.ambient, e.spec) == Triviality::Trivial);

            Side side = i % 2 ? Side::Left : Side::Right;
            StarWord qp = random_star_word(rng, ctx);
            auto d = inclusion_composition(side, qp, u, v, s, e.spec);
            CHECK(is_trivial_mod(d.value, d.ambient, e.spec) == Triviality::Trivial);
        }
    }
}

TEST_CASE("a non-convergent identity has a nontrivial composition") {
    const OpiSpec phi = spec("y[x]");
    auto c = intersection_composition(W("u"), W("v"), W("s"), phi);
    CHECK(is_trivial_mod(c.value, c.ambient, phi) == Triviality::NotTrivial);
    CHECK(reduce(c.value, phi) == P("-[s[v[u]]] + [s[u[v]]]"));
}

TEST_CASE("combinations of rule instances below the bound reduce to zero") {
    // sum c_i q_i(phi(a_i, b_i)) with every q_i([a_i][b_i]) below w.
    Rng rng(97);
    auto args = arg_shape();
    WordShape ctx = context_shape();
    ctx.max_depth = 2;
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        for (int i = 0; i < 10; ++i) {
            Polynomial sum;
            Word bound;
            for (int k = 0; k < 3; ++k) {
                StarWord q = random_star_word(rng, ctx);
                Word a = random_word(rng, args), b = random_word(rng, args);
                Polynomial inst = substitute(q, e.spec.phi(a, b));
                sum += Coefficient(k + 1) * inst;
                Word top = Word::bracket(leading(inst).word);
                if (k == 0 || cmp_db(bound, top) < 0) bound = top;
            }
            if (sum.is_zero()) continue;
            CHECK(is_trivial_mod(sum, bound, e.spec) == Triviality::Trivial);
        }
    }
}
