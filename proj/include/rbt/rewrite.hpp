#pragma once

// Rewriting under an identity [x][y] = [B(x,y)]: every adjacent pair of
// brackets [u][v], at any nesting level, rewrites to [B(u,v)].

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbt/polynomial.hpp"

namespace rbt {

inline constexpr std::size_t kDefaultFuel = 100000;
inline constexpr std::size_t kMaxRewriteDepth = 1000;

class OpiSpec {
public:
    /// Throws std::invalid_argument if B is zero or uses letters other than
    /// x and y.
    OpiSpec(std::string name, Polynomial b);

    const std::string& name() const { return name_; }
    const Polynomial& b() const { return b_; }
    const std::vector<std::string>& parameters() const { return parameters_; }

    Polynomial apply_b(const Word& u, const Word& v) const;
    Polynomial apply_b(const Polynomial& u, const Polynomial& v) const;
    /// [u][v] - [B(u,v)].
    Polynomial phi(const Word& u, const Word& v) const;
    Polynomial phi(const Polynomial& u, const Polynomial& v) const;

    OpiSpec specialize(const std::map<std::string, mpq_class>& values) const;

private:
    std::string name_;
    Polynomial b_;
    std::vector<std::string> parameters_;
};

struct RedexSite {
    StarWord context;
    Word left;
    Word right;
    Word monomial;
    Coefficient coeff;
};

struct TraceStep {
    RedexSite site;
    Polynomial result;
};

using ReductionTrace = std::vector<TraceStep>;

class FuelExhausted : public std::runtime_error {
public:
    explicit FuelExhausted(std::size_t steps)
        : std::runtime_error("possible non-termination: fuel of " + std::to_string(steps) +
                             " steps exhausted") {}
    FuelExhausted(std::size_t steps, std::size_t depth)
        : std::runtime_error("possible non-termination: operator depth exceeded " + std::to_string(depth) +
                             " after " + std::to_string(steps) + " steps") {}
};

class StaleSite : public std::invalid_argument {
public:
    StaleSite() : std::invalid_argument("redex site does not match the polynomial") {}
};

/// Redexes of one word, outermost level first and left to right within a
/// level; the first entry is the leftmost-outermost redex.
std::vector<RedexSite> find_redexes(const Word& w);
/// Redexes of every monomial, monomials in descending db order.
std::vector<RedexSite> find_redexes(const Polynomial& f);
/// Leftmost-outermost redex of w, if any.
std::optional<RedexSite> first_redex(const Word& w);

Polynomial rewrite_step(const Polynomial& f, const RedexSite& site, const OpiSpec& phi);

struct NormalForm {
    Polynomial nf;
    ReductionTrace trace;
};

/// Rewrite the db-greatest reducible monomial at its leftmost-outermost redex
/// until none remains. Throws FuelExhausted after `fuel` steps, or once the
/// monomial being rewritten nests deeper than kMaxRewriteDepth.
NormalForm normal_form(const Polynomial& f, const OpiSpec& phi, std::size_t fuel = kDefaultFuel,
                       bool record_trace = true);
Polynomial reduce(const Polynomial& f, const OpiSpec& phi, std::size_t fuel = kDefaultFuel);

enum class JoinOutcome { Joinable, NotJoinable, Indeterminate };

const char* to_string(JoinOutcome o);

struct JoinResult {
    JoinOutcome outcome = JoinOutcome::Indeterminate;
    std::optional<Polynomial> common;
    std::string note;
};

/// Decide f and g have a common reduct. For identities compatible with the
/// db order, equal normal forms settle it; distinct normal forms settle it
/// negatively when `assume_convergent`, and otherwise the (finite) reduct sets
/// are searched. Without compatibility only a bounded search is done; `fuel`
/// caps the number of polynomials visited.
JoinResult joinable(const Polynomial& f, const Polynomial& g, const OpiSpec& phi,
                    std::size_t fuel = kDefaultFuel, bool assume_convergent = false);

}  // namespace rbt
