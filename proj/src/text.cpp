#include "rbt/text.hpp"

#include <cctype>
#include <sstream>

namespace rbt {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Slash, Star, Plus, Minus, LBracket, RBracket, Caret, Hole, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& what, const Token& at) const {
        throw ParseError(what, at.line, at.column);
    }

private:
    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        cur_ = Token{Tok::End, {}, line_, col_};
        if (pos_ >= src_.size()) return;
        char ch = src_[pos_];
        std::size_t start = pos_;
        auto take_while = [&](auto pred) {
            while (pos_ < src_.size() && pred(static_cast<unsigned char>(src_[pos_]))) bump();
            cur_.text = std::string(src_.substr(start, pos_ - start));
        };
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            cur_.kind = Tok::Ident;
            take_while([](unsigned char c) { return std::isalnum(c) || c == '_'; });
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur_.kind = Tok::Number;
            take_while([](unsigned char c) { return std::isdigit(c) != 0; });
            return;
        }
        if (ch == '@') {
            bump();
            cur_.kind = Tok::Hole;
            start = pos_;
            take_while([](unsigned char c) { return std::isdigit(c) != 0; });
            return;
        }
        switch (ch) {
        case '/': cur_.kind = Tok::Slash; break;
        case '*': cur_.kind = Tok::Star; break;
        case '+': cur_.kind = Tok::Plus; break;
        case '-': cur_.kind = Tok::Minus; break;
        case '[': cur_.kind = Tok::LBracket; break;
        case ']': cur_.kind = Tok::RBracket; break;
        case '^': cur_.kind = Tok::Caret; break;
        default: throw ParseError(std::string("unexpected character '") + ch + "'", line_, col_);
        }
        cur_.text = std::string(1, ch);
        bump();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token cur_;
};

bool starts_atom(Tok t) { return t == Tok::Ident || t == Tok::LBracket || t == Tok::Hole; }

class Parser {
public:
    Parser(std::string_view src, const std::set<std::string>& params, bool holes)
        : lex_(src), params_(params), holes_(holes) {}

    Word word() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Number) {
            Token n = lex_.next();
            if (n.text != "1") lex_.fail("expected a word, found number " + n.text, n);
            return Word();
        }
        if (!starts_atom(t.kind)) lex_.fail("expected a word", t);
        std::vector<Atom> atoms;
        while (starts_atom(lex_.peek().kind)) atoms.push_back(atom());
        if (lex_.peek().kind == Tok::Number)
            lex_.fail("the unit 1 cannot be juxtaposed with other atoms", lex_.peek());
        return Word::from_atoms(std::move(atoms));
    }

    Polynomial polynomial() {
        Polynomial out;
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) negate = lex_.next().kind == Tok::Minus;
        term(out, negate);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            negate = lex_.next().kind == Tok::Minus;
            term(out, negate);
        }
        return out;
    }

    void finish() {
        if (lex_.peek().kind != Tok::End) lex_.fail("unexpected '" + lex_.peek().text + "'", lex_.peek());
    }

private:
    Atom atom() {
        Token t = lex_.next();
        switch (t.kind) {
        case Tok::Ident: return Atom::letter(t.text);
        case Tok::Hole: {
            if (!holes_) lex_.fail("hole '@' not allowed here", t);
            int index = t.text.empty() ? 0 : std::stoi(t.text);
            if (index > 2) lex_.fail("hole index must be 1 or 2", t);
            return Atom::hole(index);
        }
        case Tok::LBracket: {
            if (lex_.peek().kind == Tok::RBracket) lex_.fail("empty brackets; write [1]", lex_.peek());
            Word inner = word();
            if (lex_.peek().kind != Tok::RBracket) lex_.fail("unbalanced '[': expected ']'", lex_.peek());
            lex_.next();
            return Atom::bracket(inner);
        }
        default: lex_.fail("expected a word", t);
        }
    }

    mpq_class number() {
        Token n = lex_.next();
        mpq_class q;
        if (lex_.peek().kind == Tok::Slash) {
            lex_.next();
            Token d = lex_.next();
            if (d.kind != Tok::Number) lex_.fail("expected a denominator", d);
            mpz_class den(d.text);
            if (den == 0) lex_.fail("zero denominator", d);
            q = mpq_class(mpz_class(n.text), den);
            q.canonicalize();
        } else {
            q = mpq_class(mpz_class(n.text));
        }
        return q;
    }

    // A factor is either a coefficient or a word; the caller decides which
    // factors must be which.
    struct Factor {
        std::optional<Coefficient> coeff;
        std::optional<Word> word;
        Token at;
    };

    Factor factor() {
        Factor f;
        f.at = lex_.peek();
        if (f.at.kind == Tok::Number) {
            f.coeff = Coefficient(number());
            return f;
        }
        if (f.at.kind == Tok::Ident && params_.count(f.at.text)) {
            // A parameter only when used as a factor: "lam*x", "lam^2*x".
            Lexer save = lex_;
            Token id = lex_.next();
            if (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Caret) {
                unsigned exp = 1;
                if (lex_.peek().kind == Tok::Caret) {
                    lex_.next();
                    Token e = lex_.next();
                    if (e.kind != Tok::Number || e.text.size() > 4) lex_.fail("expected a small exponent", e);
                    exp = static_cast<unsigned>(std::stoul(e.text));
                }
                Coefficient c(1);
                Coefficient p = Coefficient::parameter(id.text);
                for (unsigned k = 0; k < exp; ++k) c *= p;
                f.coeff = c;
                return f;
            }
            lex_ = save;
        }
        f.word = word();
        return f;
    }

    void term(Polynomial& out, bool negate) {
        Coefficient c(negate ? -1 : 1);
        Factor f = factor();
        while (lex_.peek().kind == Tok::Star) {
            Token star = lex_.next();
            if (!f.coeff) {
                if (f.word->breadth() == 1 && f.word->atoms()[0].is_letter())
                    lex_.fail("unknown parameter '" + f.word->atoms()[0].name + "'", f.at);
                lex_.fail("only coefficients may precede '*'", star);
            }
            c *= *f.coeff;
            f = factor();
        }
        if (f.coeff) {
            out.add_term(Word(), c * *f.coeff);
        } else {
            out.add_term(*f.word, c);
        }
    }

    Lexer lex_;
    const std::set<std::string>& params_;
    bool holes_;
};

void print_word(std::ostream& os, const Word& w) {
    if (w.is_unit()) {
        os << '1';
        return;
    }
    bool prev_plain = false;
    for (const Atom& a : w.atoms()) {
        if (a.is_bracket()) {
            os << '[';
            print_word(os, a.inner);
            os << ']';
            prev_plain = false;
            continue;
        }
        if (prev_plain) os << ' ';
        if (a.is_letter()) os << a.name;
        else os << '@' << (a.star == 0 ? std::string() : std::to_string(a.star));
        prev_plain = true;
    }
}

// Writes |q| * monomial as a product of factors, or nothing when it is 1.
// Returns whether anything was written.
bool print_scalar(std::ostream& os, const mpq_class& q, const ParamMonomial& m) {
    mpq_class mag = abs(q);
    bool any = false;
    if (mag != 1) {
        os << mag.get_str();
        any = true;
    }
    for (const auto& [name, e] : m) {
        if (any) os << '*';
        os << name;
        if (e != 1) os << '^' << e;
        any = true;
    }
    return any;
}

}  // namespace

Word parse_word(std::string_view text) {
    Parser p(text, {}, false);
    Word w = p.word();
    p.finish();
    return w;
}

StarWord parse_star_word(std::string_view text) {
    static const std::set<std::string> none;
    Parser p(text, none, true);
    Word w = p.word();
    p.finish();
    return StarWord(w);
}

TwoStarWord parse_two_star_word(std::string_view text) {
    static const std::set<std::string> none;
    Parser p(text, none, true);
    Word w = p.word();
    p.finish();
    return TwoStarWord(w);
}

Polynomial parse_polynomial(std::string_view text, const std::set<std::string>& parameters) {
    Parser p(text, parameters, false);
    Polynomial f = p.polynomial();
    p.finish();
    return f;
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    print_word(os, w);
    return os.str();
}

std::string to_string(const StarWord& q) { return to_string(q.word()); }

std::string to_string(const Coefficient& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : c.terms()) {
        if (first) os << (q < 0 ? "-" : "");
        else os << (q < 0 ? " - " : " + ");
        if (!print_scalar(os, q, m)) os << '1';
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : f) {
        for (const auto& [m, q] : c.terms()) {
            if (first) os << (q < 0 ? "-" : "");
            else os << (q < 0 ? " - " : " + ");
            first = false;
            bool any = print_scalar(os, q, m);
            if (w.is_unit() && m.empty()) {
                if (!any) os << '1';
                continue;
            }
            if (any) os << '*';
            print_word(os, w);
        }
    }
    return os.str();
}

}  // namespace rbt
