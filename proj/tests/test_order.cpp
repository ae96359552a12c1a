#include <algorithm>

#include "rbt/random.hpp"
#include "rbt/rbtype.hpp"
#include "support.hpp"
#include "words_enum.hpp"

using namespace rbt;
using rbt::test::P;
using rbt::test::W;

TEST_CASE("degree-lex") {
    CHECK(cmp_deglex(W("x y"), W("y x")) < 0);
    CHECK(cmp_deglex(Word(), W("x")) < 0);
    CHECK(cmp_deglex(W("x x x"), W("x y")) > 0);
    CHECK(cmp_deglex(W("x y"), W("x y")) == 0);
    CHECK_THROWS_AS(cmp_deglex(W("[x]"), W("x")), std::invalid_argument);
}

TEST_CASE("db order examples") {
    CHECK(cmp_db(W("[u][v]"), W("[[u][v]]")) < 0);
    CHECK(cmp_db(W("[x[y]]"), W("[x][y]")) < 0);
    for (const char* u : {"1", "x", "x[y]", "[[x]]y"}) CHECK(cmp_db(W(u), Word::bracket(W(u))) < 0);
    CHECK(cmp_db(W("[x]"), W("[y]")) < 0);
    // Bracket contents are compared before letter blocks.
    CHECK(cmp_db(W("y y[x]"), W("[y]")) < 0);
    CHECK(cmp_db(W("[x]y"), W("x[x]")) < 0);
}

TEST_CASE("db order restricted to letters is degree-lex") {
    auto words = rbt::test::letter_blocks({"x", "y", "z"}, 3);
    for (const auto& a : words)
        for (const auto& b : words) CHECK(cmp_db(a, b) == cmp_deglex(a, b));
}

TEST_CASE("db order is total and antisymmetric on small words") {
    // deg_p <= 2 over {x,y}; letter runs of length <= 1 keep the pair count
    // small here. The acceptance run covers runs of length <= 2.
    auto words = rbt::test::words_up_to({"x", "y"}, 2, 1);
    REQUIRE(words.size() == 516);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            auto c = cmp_db(words[i], words[j]);
            if ((c == 0) != (i == j) || c != (0 <=> cmp_db(words[j], words[i]))) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("db order is transitive and a monomial order") {
    auto words = rbt::test::words_up_to({"x", "y"}, 2, 2);
    Rng rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    WordShape shape;
    shape.alphabet = {"x", "y"};
    for (int n = 0; n < 20000; ++n) {
        const Word& a = words[pick(rng)];
        const Word& b = words[pick(rng)];
        const Word& c = words[pick(rng)];
        if (cmp_db(a, b) < 0 && cmp_db(b, c) < 0) CHECK(cmp_db(a, c) < 0);

        auto [lo, hi] = cmp_db(a, b) < 0 ? std::pair{a, b} : std::pair{b, a};
        if (lo == hi) continue;
        Word w = random_word(rng, shape);
        StarWord q = random_star_word(rng, shape);
        CHECK(cmp_db(Word::bracket(lo), Word::bracket(hi)) < 0);
        CHECK(cmp_db(w * lo, w * hi) < 0);
        CHECK(cmp_db(lo * w, hi * w) < 0);
        CHECK(cmp_db(q(lo), q(hi)) < 0);
    }
}

TEST_CASE("compatibility criterion") {
    CHECK(compatible_with_db(P("x[y] + [x]y + lam*x y")) == Compatibility::Compatible);
    CHECK(compatible_with_db(P("x[y] + [x]y - [x y]")) == Compatibility::Compatible);
    CHECK(compatible_with_db(P("x[[y]]")) == Compatibility::Unknown);
    CHECK(compatible_with_db(P("[x][y]")) == Compatibility::Unknown);
    // A repeated variable can make [B(u,v)] outgrow [u][v].
    CHECK(compatible_with_db(P("x x[y]")) == Compatibility::Unknown);
    Word u = W("[a]");
    Word v = W("b");
    Polynomial image = evaluate(P("x x[y]"), {{"x", Polynomial(u)}, {"y", Polynomial(v)}}).bracket();
    CHECK(cmp_db(leading(image).word, Word::bracket(u) * Word::bracket(v)) > 0);
}

TEST_CASE("compatible identities shrink the rule's left side") {
    Rng rng(19);
    WordShape shape;
    shape.alphabet = {"u", "v", "w"};
    for (const auto& e : catalog()) {
        CAPTURE(e.key);
        REQUIRE(compatible_with_db(e.spec.b()) == Compatibility::Compatible);
        for (int i = 0; i < 100; ++i) {
            Word u = random_word(rng, shape);
            Word v = random_word(rng, shape);
            Word lhs = Word::bracket(u) * Word::bracket(v);
            CHECK(cmp_db(leading(e.spec.apply_b(u, v).bracket()).word, lhs) < 0);
        }
    }
}
