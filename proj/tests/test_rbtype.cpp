#include "rbt/random.hpp"
#include "rbt/rbtype.hpp"
#include "support.hpp"

using namespace rbt;
using rbt::test::P;
using rbt::test::W;

namespace {

OpiSpec spec(const std::string& b) { return OpiSpec("test", P(b)); }

// Both sides of the associativity defect, reduced separately.
std::pair<Polynomial, Polynomial> reduced_sides(const OpiSpec& phi) {
    Polynomial u(W("u")), v(W("v")), w(W("w"));
    return {reduce(phi.apply_b(phi.apply_b(u, v), w), phi), reduce(phi.apply_b(u, phi.apply_b(v, w)), phi)};
}

}  // namespace

TEST_CASE("total linearity") {
    CHECK(is_totally_linear(P("x[y] + [x][y] + x y")));
    CHECK(is_totally_linear(P("[y[x]] - lam*y x")));
    CHECK_FALSE(is_totally_linear(P("x x[y]")));
    CHECK_FALSE(is_totally_linear(P("[x]")));
    CHECK_FALSE(is_totally_linear(P("x[y] + x")));
    for (const auto& e : catalog()) CHECK(is_totally_linear(e.spec));
}

TEST_CASE("associativity defect") {
    CHECK(associativity_defect(catalog_entry("average").spec) == P("u[v][w] - u[v[w]]"));
    CHECK(associativity_defect(spec("y[x]")) == P("w[v[u]] - w[v][u]"));
    CHECK(associativity_defect(Polynomial()).is_zero());
    CHECK(associativity_defect(P("x y")).is_zero());
}

TEST_CASE("reports") {
    auto r = rota_baxter_report(catalog_entry("nijenhuis").spec);
    CHECK(r.verdict == Verdict::RotaBaxterType);
    CHECK(r.totally_linear);
    CHECK(r.b_in_rbnf);
    CHECK(r.compatibility == Compatibility::Compatible);
    REQUIRE(r.assoc_defect_nf.has_value());
    CHECK(r.assoc_defect_nf->is_zero());

    r = rota_baxter_report(spec("y[x]"));
    CHECK(r.verdict == Verdict::NotRotaBaxterType);
    REQUIRE(r.assoc_defect_nf.has_value());
    CHECK(*r.assoc_defect_nf == P("w[v[u]] - w[u[v]]"));

    CHECK(rota_baxter_report(spec("x x[y]")).verdict == Verdict::NotRotaBaxterType);
    CHECK(rota_baxter_report(spec("[x][y]")).verdict == Verdict::NotRotaBaxterType);
    CHECK(rota_baxter_report(spec("x[[y]]")).verdict == Verdict::Indeterminate);
}

TEST_CASE("catalog") {
    const auto& all = catalog();
    REQUIRE(all.size() == 14);
    CHECK(catalog_entry("rota-baxter").key == "f");
    CHECK(catalog_entry("nijenhuis").key == "e");
    CHECK(catalog_entry("c").spec.b() == P("x[y] + y[x]"));
    CHECK(catalog_entry("n").spec.b() == P("c*y[1]x + lam*y x"));
    CHECK_THROWS_AS(catalog_entry("z"), std::out_of_range);
    for (const auto& e : all) {
        CAPTURE(e.key);
        auto r = rota_baxter_report(e.spec);
        CHECK(r.totally_linear);
        CHECK(r.b_in_rbnf);
        CHECK(r.compatibility == Compatibility::Compatible);
        CHECK(r.verdict == Verdict::RotaBaxterType);
    }
}

TEST_CASE("reduced expansion for x[y] + y[x]") {
    auto [left, right] = reduced_sides(catalog_entry("c").spec);
    Polynomial expected = P("u[v[w]] + u[w[v]] + v[u[w]] + v[w[u]] + w[u[v]] + w[v[u]]");
    CHECK(left == expected);
    CHECK(right == expected);
}

TEST_CASE("reduced expansion for entry k") {
    auto [left, right] = reduced_sides(catalog_entry("k").spec);
    Polynomial expected = P(
        "u[v[w]] + u[[v]w] - u[v[1]w] - u[[v w]] + lam*u[v w] + [u]v[w]"
        " - u[1]v[w] - [u v[w]] + [u v[1]w] + [[u v w]] - 2*lam*[u v w] + lam*u v[w]"
        " + [u[v]]w + [[u]v]w - [u[1]v]w - [[u v]]w + lam*[u v]w - [u]v[1]w"
        " + u[1]v[1]w - lam*u v[1]w - [u[v]w] - [[u]v w] + [u[1]v w] + lam*[u]v w"
        " - lam*u[1]v w + lam^2*u v w");
    CHECK(expected.size() == 26);
    CHECK(left == expected);
    CHECK(right == expected);
}

TEST_CASE("reduced expansion for entry l") {
    auto [left, right] = reduced_sides(catalog_entry("l").spec);
    Polynomial expected = P(
        "u[v[w]] + u[[v]w] - u[v[1]w] - u[[1]v w] + lam*u[v w] + [u]v[w]"
        " - u[1]v[w] - [1]u v[w] + lam*u v[w] + [u[v]]w + [[u]v]w - [u[1]v]w"
        " - [[1]u v]w + lam*[u v]w - u[[v]]w + u[[1]v]w - [u]v[1]w + u[1]v[1]w"
        " + [1]u v[1]w - lam*u v[1]w - [1]u[v]w - [[u]]v w + [[1]u]v w + [1]u[1]v w"
        " - lam*u[1]v w - lam*[1]u v w + lam^2*u v w");
    CHECK(expected.size() == 27);
    CHECK(left == expected);
    CHECK(right == expected);
}

TEST_CASE("defect vanishes on word instances") {
    Rng rng(83);
    WordShape ws;
    ws.alphabet = {"a", "b"};
    ws.max_depth = 1;
    ws.max_breadth = 2;
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        for (int i = 0; i < 10; ++i) {
            Polynomial a(random_word(rng, ws)), b(random_word(rng, ws)), c(random_word(rng, ws));
            Polynomial d = e.spec.apply_b(e.spec.apply_b(a, b), c) - e.spec.apply_b(a, e.spec.apply_b(b, c));
            CHECK(reduce(d, e.spec).is_zero());
        }
    }
}

TEST_CASE("specialized parameters keep the verdict") {
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        OpiSpec s = e.spec.specialize({{"lam", 2}, {"c", mpq_class(-1, 3)}});
        CHECK(s.parameters().empty());
        CHECK(rota_baxter_report(s).verdict == Verdict::RotaBaxterType);
    }
}
