#include "rbt/rbtype.hpp"

#include "rbt/text.hpp"

namespace rbt {

bool is_totally_linear(const Polynomial& b) {
    for (const auto& [w, c] : b)
        if (count_letter(w, "x") != 1 || count_letter(w, "y") != 1) return false;
    return true;
}

Polynomial associativity_defect(const Polynomial& b) {
    const Polynomial u(Word::letter("u"));
    const Polynomial v(Word::letter("v"));
    const Polynomial w(Word::letter("w"));
    Polynomial uv = evaluate(b, {{"x", u}, {"y", v}});
    Polynomial vw = evaluate(b, {{"x", v}, {"y", w}});
    return evaluate(b, {{"x", uv}, {"y", w}}) - evaluate(b, {{"x", u}, {"y", vw}});
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::RotaBaxterType: return "RotaBaxterType";
    case Verdict::NotRotaBaxterType: return "NotRotaBaxterType";
    case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

RbTypeReport rota_baxter_report(const OpiSpec& phi, std::size_t fuel) {
    RbTypeReport r;
    r.totally_linear = is_totally_linear(phi.b());
    r.b_in_rbnf = phi.b().is_rbnf();
    r.compatibility = compatible_with_db(phi.b());
    r.assoc_defect = associativity_defect(phi.b());
    try {
        r.assoc_defect_nf = reduce(r.assoc_defect, phi, fuel);
    } catch (const FuelExhausted& e) {
        r.note = e.what();
    }

    if (!r.totally_linear) {
        r.verdict = Verdict::NotRotaBaxterType;
        r.note = "B is not totally linear";
    } else if (!r.b_in_rbnf) {
        r.verdict = Verdict::NotRotaBaxterType;
        r.note = "B is not in normal form";
    } else if (r.compatibility != Compatibility::Compatible) {
        // Termination is unproven, so neither outcome of the defect settles it.
        r.verdict = Verdict::Indeterminate;
        if (r.note.empty()) r.note = "termination not established: B is not known to be compatible with the order";
    } else if (!r.assoc_defect_nf) {
        r.verdict = Verdict::Indeterminate;
    } else if (r.assoc_defect_nf->is_zero()) {
        r.verdict = Verdict::RotaBaxterType;
    } else {
        // The first three conditions hold, so reducibility of the defect to
        // zero would force convergence and hence a zero normal form.
        r.verdict = Verdict::NotRotaBaxterType;
        r.note = "associativity defect has a nonzero normal form";
    }
    return r;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    struct Row {
        const char* key;
        const char* alias;
        const char* description;
        const char* b;
    };
    static const Row rows[] = {
        {"a", "average", "average operator", "x[y]"},
        {"b", "inverse-average", "inverse average operator", "[x]y"},
        {"c", "", "", "x[y] + y[x]"},
        {"d", "", "", "[x]y + [y]x"},
        {"e", "nijenhuis", "Nijenhuis operator", "x[y] + [x]y - [x y]"},
        {"f", "rota-baxter", "Rota-Baxter operator of weight lam", "x[y] + [x]y + lam*x y"},
        {"g", "", "", "x[y] - x[1]y + lam*x y"},
        {"h", "", "", "[x]y - x[1]y + lam*x y"},
        {"i", "leroux-td", "generalized Leroux TD operator of weight lam", "x[y] + [x]y - x[1]y + lam*x y"},
        {"j", "", "", "x[y] + [x]y - x y[1] - x[1]y + lam*x y"},
        {"k", "", "", "x[y] + [x]y - x[1]y - [x y] + lam*x y"},
        {"l", "", "", "x[y] + [x]y - x[1]y - [1]x y + lam*x y"},
        {"m", "endomorphism", "generalized endomorphism", "c*x[1]y + lam*x y"},
        {"n", "antimorphism", "generalized antimorphism", "c*y[1]x + lam*y x"},
    };
    std::vector<CatalogEntry> out;
    for (const Row& row : rows) {
        std::string name = row.alias[0] ? row.alias : std::string("catalog-") + row.key;
        out.push_back(CatalogEntry{row.key, row.alias, row.description, OpiSpec(name, parse_polynomial(row.b))});
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
    for (const auto& e : catalog())
        if (e.key == key || (!e.alias.empty() && e.alias == key)) return e;
    throw std::out_of_range("no catalog entry '" + key + "'");
}

}  // namespace rbt
