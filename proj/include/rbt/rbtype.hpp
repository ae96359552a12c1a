#pragma once

// Deciding whether [x][y] = [B(x,y)] is of Rota-Baxter type, and the catalog
// of known identities that are.

#include <string>
#include <vector>

#include "rbt/rewrite.hpp"

namespace rbt {

/// Every monomial has exactly one x and exactly one y, at any depth.
bool is_totally_linear(const Polynomial& b);
inline bool is_totally_linear(const OpiSpec& phi) { return is_totally_linear(phi.b()); }

/// B(B(u,v),w) - B(u,B(v,w)) over fresh generators u < v < w, unreduced.
/// Accepts any B, including zero.
Polynomial associativity_defect(const Polynomial& b);
inline Polynomial associativity_defect(const OpiSpec& phi) { return associativity_defect(phi.b()); }

enum class Verdict { RotaBaxterType, NotRotaBaxterType, Indeterminate };

const char* to_string(Verdict v);

struct RbTypeReport {
    bool totally_linear = false;
    bool b_in_rbnf = false;
    Compatibility compatibility = Compatibility::Unknown;
    Polynomial assoc_defect;
    /// Normal form of the defect; absent when the reduction ran out of fuel.
    std::optional<Polynomial> assoc_defect_nf;
    Verdict verdict = Verdict::Indeterminate;
    std::string note;
};

RbTypeReport rota_baxter_report(const OpiSpec& phi, std::size_t fuel = kDefaultFuel);

struct CatalogEntry {
    std::string key;    // "a" .. "n"
    std::string alias;  // e.g. "nijenhuis"
    std::string description;
    OpiSpec spec;
};

/// The fourteen built-in identities of Rota-Baxter type, with
/// symbolic parameters lam and c.
const std::vector<CatalogEntry>& catalog();

/// Lookup by letter key or alias. Throws std::out_of_range.
const CatalogEntry& catalog_entry(const std::string& key);

}  // namespace rbt
