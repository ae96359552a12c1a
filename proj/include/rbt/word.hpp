#pragma once

// Bracketed words: elements of the free operated monoid on a set of
// generators. A word is an immutable list of atoms, each a generator letter,
// a bracketed sub-word, or a hole (used by context words).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbt {

struct WordNode;
struct Atom;

enum class AtomKind : std::uint8_t { Letter, Bracket, Star };

class Word {
public:
    Word();

    static Word unit() { return Word(); }
    static Word letter(std::string name);
    static Word bracket(const Word& inner);
    /// Hole atom. Index 0 is the single hole of a StarWord; 1 and 2 are the
    /// two holes of a TwoStarWord.
    static Word star(int index = 0);
    static Word from_atoms(std::vector<Atom> atoms);

    inline const std::vector<Atom>& atoms() const;
    inline std::size_t breadth() const;
    bool is_unit() const { return breadth() == 0; }

    inline std::size_t depth() const;
    inline std::size_t deg_p() const;
    inline std::size_t p_breadth() const;
    inline std::size_t star_count() const;
    inline std::size_t hash() const;
    /// No two adjacent bracket atoms at any nesting level.
    inline bool is_rbnf() const;
    inline bool letters_only() const;

    Word operator*(const Word& other) const;
    Word& operator*=(const Word& other);

    friend bool operator==(const Word& a, const Word& b);
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    const WordNode* node() const { return node_.get(); }

private:
    explicit Word(std::shared_ptr<const WordNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const WordNode> node_;
};

struct Atom {
    AtomKind kind = AtomKind::Letter;
    std::string name;  // Letter
    Word inner;        // Bracket
    int star = 0;      // Star
    /// First eight bytes of a letter's name, big-endian, so that integer
    /// order agrees with name order whenever the keys differ.
    std::uint64_t key = 0;

    static Atom letter(std::string n);
    static Atom bracket(Word w) { return Atom{AtomKind::Bracket, {}, std::move(w), 0, 0}; }
    static Atom hole(int index) { return Atom{AtomKind::Star, {}, Word(), index, 0}; }

    bool is_letter() const { return kind == AtomKind::Letter; }
    bool is_bracket() const { return kind == AtomKind::Bracket; }
    bool is_star() const { return kind == AtomKind::Star; }

    friend bool operator==(const Atom& a, const Atom& b);
};

struct WordNode {
    std::vector<Atom> atoms;
    std::size_t hash = 0;
    std::uint32_t depth = 0;
    std::uint32_t deg_p = 0;
    std::uint32_t p_breadth = 0;
    std::uint32_t stars = 0;
    bool rbnf = true;
};

inline const std::vector<Atom>& Word::atoms() const { return node_->atoms; }
inline std::size_t Word::breadth() const { return node_->atoms.size(); }
inline std::size_t Word::depth() const { return node_->depth; }
inline std::size_t Word::deg_p() const { return node_->deg_p; }
inline std::size_t Word::p_breadth() const { return node_->p_breadth; }
inline std::size_t Word::star_count() const { return node_->stars; }
inline std::size_t Word::hash() const { return node_->hash; }
inline bool Word::is_rbnf() const { return node_->rbnf; }
inline bool Word::letters_only() const { return node_->p_breadth == 0 && node_->stars == 0; }

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

struct Measures {
    std::size_t depth = 0;
    std::size_t breadth = 0;
    std::size_t p_breadth = 0;
    std::size_t deg_p = 0;

    friend bool operator==(const Measures&, const Measures&) = default;
};

Measures measures(const Word& u);

/// Maximal runs of letters and single bracket atoms, in order. The unit word
/// has no blocks. Each block is itself a word: letters-only, or one bracket.
std::vector<Word> standard_decomposition(const Word& u);

inline bool is_rbnf(const Word& u) { return u.is_rbnf(); }

/// Word with exactly one hole (index 0).
class StarWord {
public:
    StarWord() : word_(Word::star(0)) {}
    explicit StarWord(Word w);

    const Word& word() const { return word_; }
    bool is_trivial() const { return word_.breadth() == 1 && word_.atoms()[0].is_star(); }

    /// Replace the hole by a word.
    Word operator()(const Word& u) const;
    /// Replace the hole by another context, giving q|_{q'}.
    StarWord compose(const StarWord& inner) const;

    friend bool operator==(const StarWord& a, const StarWord& b) { return a.word_ == b.word_; }

private:
    Word word_;
};

/// Word with exactly one hole of index 1 and one of index 2.
class TwoStarWord {
public:
    explicit TwoStarWord(Word w);

    const Word& word() const { return word_; }
    Word operator()(const Word& first, const Word& second) const;
    /// Fill only the first (resp. second) hole, leaving a one-hole context.
    StarWord fill_first(const Word& first) const;
    StarWord fill_second(const Word& second) const;

private:
    Word word_;
};

/// Count of holes with the given index, through all nesting levels.
std::size_t count_stars(const Word& w, int index);
/// Replace every hole with the given index by `value`.
Word replace_star(const Word& w, int index, const Word& value);
/// Count of occurrences of letter `name`, through all nesting levels.
std::size_t count_letter(const Word& w, const std::string& name);

/// Location of a run of atoms inside a word: the chain of bracket-atom
/// indices leading to the containing level, then [begin, end) at that level.
struct Span {
    std::vector<std::uint32_t> path;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
};

/// Rebuild `w` with the atoms of `span` replaced by `replacement`.
Word splice(const Word& w, std::span<const std::uint32_t> path, std::uint32_t begin,
            std::uint32_t end, const Word& replacement);

struct Placement {
    Word subword;
    StarWord context;
};

enum class PlacementRelation { Separated, Nested, Intersecting };

const char* to_string(PlacementRelation r);

/// Every context q with q(u) == w, ordered by the position of the occurrence.
/// Throws std::invalid_argument for the unit word.
std::vector<Placement> enumerate_placements(const Word& w, const Word& u);

/// Location of the placement inside the ambient word. Throws if the
/// placement does not reproduce `w`.
Span placement_span(const Word& w, const Placement& p);

PlacementRelation classify_placements(const Word& w, const Placement& p1, const Placement& p2);

}  // namespace rbt

template <>
struct std::hash<rbt::Word> {
    std::size_t operator()(const rbt::Word& w) const { return w.hash(); }
};
