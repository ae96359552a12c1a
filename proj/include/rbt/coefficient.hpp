#pragma once

// Scalars: multivariate polynomials with rational coefficients in named
// parameters (lam, c, ...). Exact arithmetic on top of GMP rationals.

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rbt {

/// A product of parameters with positive exponents, sorted by name.
using ParamMonomial = std::vector<std::pair<std::string, unsigned>>;

class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long n);  // NOLINT: integers convert implicitly
    explicit Coefficient(const mpq_class& q);

    static Coefficient parameter(const std::string& name);
    static Coefficient rational(long num, long den);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Rational value when there are no parameters.
    bool is_constant() const;
    mpq_class constant_value() const;

    const std::map<ParamMonomial, mpq_class>& terms() const { return terms_; }
    std::set<std::string> parameters() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }
    /// Total order on canonical forms, for use as a container key.
    friend bool operator<(const Coefficient& a, const Coefficient& b);

    /// Substitute rational values for some parameters.
    Coefficient specialize(const std::map<std::string, mpq_class>& values) const;

    std::size_t hash() const;

private:
    void add_term(const ParamMonomial& m, const mpq_class& c);
    std::map<ParamMonomial, mpq_class> terms_;
};

}  // namespace rbt
