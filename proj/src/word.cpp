#include "rbt/word.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace rbt {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const WordNode> make_node(std::vector<Atom> atoms) {
    auto node = std::make_shared<WordNode>();
    std::size_t h = 0x51ed270b;
    std::uint32_t depth = 0;
    bool prev_bracket = false;
    for (const Atom& a : atoms) {
        switch (a.kind) {
        case AtomKind::Letter:
            h = mix(h, std::hash<std::string>{}(a.name));
            prev_bracket = false;
            break;
        case AtomKind::Bracket: {
            const WordNode* in = a.inner.node();
            h = mix(mix(h, 0xb7a3), in->hash);
            depth = std::max(depth, in->depth + 1);
            node->deg_p += in->deg_p + 1;
            node->p_breadth += 1;
            node->stars += in->stars;
            if (!in->rbnf || prev_bracket) node->rbnf = false;
            prev_bracket = true;
            break;
        }
        case AtomKind::Star:
            h = mix(h, 0x5a5a + static_cast<std::size_t>(a.star));
            node->stars += 1;
            prev_bracket = false;
            break;
        }
    }
    node->hash = mix(h, atoms.size());
    node->depth = depth;
    node->atoms = std::move(atoms);
    return node;
}

const std::shared_ptr<const WordNode>& unit_node() {
    static const std::shared_ptr<const WordNode> node = make_node({});
    return node;
}

}  // namespace

Word::Word() : node_(unit_node()) {}

Atom Atom::letter(std::string n) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < 8; ++i)
        key = (key << 8) | (i < n.size() ? static_cast<unsigned char>(n[i]) : 0u);
    return Atom{AtomKind::Letter, std::move(n), Word(), 0, key};
}

Word Word::letter(std::string name) {
    if (name.empty()) throw std::invalid_argument("generator name must be non-empty");
    std::vector<Atom> atoms;
    atoms.push_back(Atom::letter(std::move(name)));
    return Word(make_node(std::move(atoms)));
}

Word Word::bracket(const Word& inner) {
    std::vector<Atom> atoms;
    atoms.push_back(Atom::bracket(inner));
    return Word(make_node(std::move(atoms)));
}

Word Word::star(int index) {
    std::vector<Atom> atoms;
    atoms.push_back(Atom::hole(index));
    return Word(make_node(std::move(atoms)));
}

Word Word::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) return Word();
    return Word(make_node(std::move(atoms)));
}

Word Word::operator*(const Word& other) const {
    if (is_unit()) return other;
    if (other.is_unit()) return *this;
    std::vector<Atom> atoms;
    atoms.reserve(breadth() + other.breadth());
    atoms.insert(atoms.end(), this->atoms().begin(), this->atoms().end());
    atoms.insert(atoms.end(), other.atoms().begin(), other.atoms().end());
    return Word(make_node(std::move(atoms)));
}

Word& Word::operator*=(const Word& other) {
    *this = *this * other;
    return *this;
}

bool operator==(const Word& a, const Word& b) {
    if (a.node_ == b.node_) return true;
    const WordNode& x = *a.node_;
    const WordNode& y = *b.node_;
    if (x.hash != y.hash || x.atoms.size() != y.atoms.size() || x.deg_p != y.deg_p) return false;
    return x.atoms == y.atoms;
}

bool operator==(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case AtomKind::Letter: return a.key == b.key && a.name == b.name;
    case AtomKind::Bracket: return a.inner == b.inner;
    case AtomKind::Star: return a.star == b.star;
    }
    return false;
}

Measures measures(const Word& u) {
    return Measures{u.depth(), u.breadth(), u.p_breadth(), u.deg_p()};
}

std::vector<Word> standard_decomposition(const Word& u) {
    std::vector<Word> blocks;
    std::vector<Atom> run;
    for (const Atom& a : u.atoms()) {
        if (a.is_bracket()) {
            if (!run.empty()) blocks.push_back(Word::from_atoms(std::exchange(run, {})));
            blocks.push_back(Word::bracket(a.inner));
        } else {
            run.push_back(a);
        }
    }
    if (!run.empty()) blocks.push_back(Word::from_atoms(std::move(run)));
    return blocks;
}

// ---------------------------------------------------------------------------
// Holes

std::size_t count_stars(const Word& w, int index) {
    if (w.star_count() == 0) return 0;
    std::size_t n = 0;
    for (const Atom& a : w.atoms()) {
        if (a.is_star() && a.star == index) ++n;
        else if (a.is_bracket()) n += count_stars(a.inner, index);
    }
    return n;
}

Word replace_star(const Word& w, int index, const Word& value) {
    if (w.star_count() == 0) return w;
    std::vector<Atom> atoms;
    atoms.reserve(w.breadth() + value.breadth());
    for (const Atom& a : w.atoms()) {
        if (a.is_star() && a.star == index) {
            atoms.insert(atoms.end(), value.atoms().begin(), value.atoms().end());
        } else if (a.is_bracket() && a.inner.star_count() > 0) {
            atoms.push_back(Atom::bracket(replace_star(a.inner, index, value)));
        } else {
            atoms.push_back(a);
        }
    }
    return Word::from_atoms(std::move(atoms));
}

std::size_t count_letter(const Word& w, const std::string& name) {
    std::size_t n = 0;
    for (const Atom& a : w.atoms()) {
        if (a.is_letter() && a.name == name) ++n;
        else if (a.is_bracket()) n += count_letter(a.inner, name);
    }
    return n;
}

StarWord::StarWord(Word w) : word_(std::move(w)) {
    if (word_.star_count() != 1 || count_stars(word_, 0) != 1)
        throw std::invalid_argument("context word must contain exactly one hole");
}

Word StarWord::operator()(const Word& u) const { return replace_star(word_, 0, u); }

StarWord StarWord::compose(const StarWord& inner) const {
    return StarWord(replace_star(word_, 0, inner.word()));
}

TwoStarWord::TwoStarWord(Word w) : word_(std::move(w)) {
    if (word_.star_count() != 2 || count_stars(word_, 1) != 1 || count_stars(word_, 2) != 1)
        throw std::invalid_argument("two-hole context must contain each hole exactly once");
}

Word TwoStarWord::operator()(const Word& first, const Word& second) const {
    return replace_star(replace_star(word_, 1, first), 2, second);
}

StarWord TwoStarWord::fill_first(const Word& first) const {
    Word w = replace_star(word_, 1, first);
    return StarWord(replace_star(w, 2, Word::star(0)));
}

StarWord TwoStarWord::fill_second(const Word& second) const {
    Word w = replace_star(word_, 2, second);
    return StarWord(replace_star(w, 1, Word::star(0)));
}

Word splice(const Word& w, std::span<const std::uint32_t> path, std::uint32_t begin,
            std::uint32_t end, const Word& replacement) {
    const auto& atoms = w.atoms();
    std::vector<Atom> out;
    if (path.empty()) {
        if (begin > end || end > atoms.size()) throw std::out_of_range("splice range outside word");
        out.reserve(atoms.size() - (end - begin) + replacement.breadth());
        out.insert(out.end(), atoms.begin(), atoms.begin() + begin);
        out.insert(out.end(), replacement.atoms().begin(), replacement.atoms().end());
        out.insert(out.end(), atoms.begin() + end, atoms.end());
        return Word::from_atoms(std::move(out));
    }
    std::uint32_t at = path.front();
    if (at >= atoms.size() || !atoms[at].is_bracket()) throw std::out_of_range("splice path is not a bracket");
    out = atoms;
    out[at] = Atom::bracket(splice(atoms[at].inner, path.subspan(1), begin, end, replacement));
    return Word::from_atoms(std::move(out));
}

// ---------------------------------------------------------------------------
// Placements

const char* to_string(PlacementRelation r) {
    switch (r) {
    case PlacementRelation::Separated: return "separated";
    case PlacementRelation::Nested: return "nested";
    case PlacementRelation::Intersecting: return "intersecting";
    }
    return "?";
}

namespace {

void collect_placements(const Word& level, const Word& u, std::vector<std::uint32_t>& path,
                        const Word& root, std::vector<Placement>& out) {
    const auto& atoms = level.atoms();
    const auto& pat = u.atoms();
    for (std::uint32_t i = 0; i < atoms.size(); ++i) {
        if (i + pat.size() <= atoms.size() &&
            std::equal(pat.begin(), pat.end(), atoms.begin() + i)) {
            Word ctx = splice(root, path, i, i + static_cast<std::uint32_t>(pat.size()), Word::star(0));
            out.push_back(Placement{u, StarWord(std::move(ctx))});
        }
        if (atoms[i].is_bracket()) {
            path.push_back(i);
            collect_placements(atoms[i].inner, u, path, root, out);
            path.pop_back();
        }
    }
}

bool find_star(const Word& w, std::vector<std::uint32_t>& path, std::uint32_t& index) {
    const auto& atoms = w.atoms();
    for (std::uint32_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_star()) {
            index = i;
            return true;
        }
        if (atoms[i].is_bracket() && atoms[i].inner.star_count() > 0) {
            path.push_back(i);
            if (find_star(atoms[i].inner, path, index)) return true;
            path.pop_back();
        }
    }
    return false;
}

// Whether span `outer` contains span `inner`, given outer.path is a prefix of
// inner.path.
bool contains(const Span& outer, const Span& inner) {
    if (outer.path.size() == inner.path.size()) return outer.begin <= inner.begin && inner.end <= outer.end;
    std::uint32_t at = inner.path[outer.path.size()];
    return outer.begin <= at && at < outer.end;
}

bool is_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

std::vector<Placement> enumerate_placements(const Word& w, const Word& u) {
    if (u.is_unit()) throw std::invalid_argument("unit subword placements are not enumerated");
    std::vector<Placement> out;
    std::vector<std::uint32_t> path;
    collect_placements(w, u, path, w, out);
    return out;
}

Span placement_span(const Word& w, const Placement& p) {
    if (p.subword.is_unit()) throw std::invalid_argument("unit subword has no span");
    if (p.context(p.subword) != w) throw std::invalid_argument("placement does not reproduce the word");
    Span s;
    std::uint32_t index = 0;
    find_star(p.context.word(), s.path, index);
    s.begin = index;
    s.end = index + static_cast<std::uint32_t>(p.subword.breadth());
    return s;
}

PlacementRelation classify_placements(const Word& w, const Placement& p1, const Placement& p2) {
    Span a = placement_span(w, p1);
    Span b = placement_span(w, p2);
    if (a.path == b.path) {
        if (a.end <= b.begin || b.end <= a.begin) return PlacementRelation::Separated;
        if (contains(a, b) || contains(b, a)) return PlacementRelation::Nested;
        return PlacementRelation::Intersecting;
    }
    if (is_prefix(a.path, b.path))
        return contains(a, b) ? PlacementRelation::Nested : PlacementRelation::Separated;
    if (is_prefix(b.path, a.path))
        return contains(b, a) ? PlacementRelation::Nested : PlacementRelation::Separated;
    return PlacementRelation::Separated;
}

}  // namespace rbt
