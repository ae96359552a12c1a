#include "rbt/coefficient.hpp"

#include <functional>
#include <stdexcept>

namespace rbt {

namespace {

ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Coefficient::Coefficient(long n) {
    if (n != 0) terms_.emplace(ParamMonomial{}, mpq_class(n));
}

Coefficient::Coefficient(const mpq_class& q) {
    if (q != 0) terms_.emplace(ParamMonomial{}, q);
}

Coefficient Coefficient::parameter(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("parameter name must be non-empty");
    Coefficient c;
    c.terms_.emplace(ParamMonomial{{name, 1u}}, mpq_class(1));
    return c;
}

Coefficient Coefficient::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Coefficient(q);
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

bool Coefficient::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class Coefficient::constant_value() const {
    if (!is_constant()) throw std::logic_error("coefficient depends on parameters");
    return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

std::set<std::string> Coefficient::parameters() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m) out.insert(name);
    return out;
}

void Coefficient::add_term(const ParamMonomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    *this = *this * o;
    return *this;
}

bool operator<(const Coefficient& a, const Coefficient& b) {
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second < j->second;
    }
    return i == a.terms_.end() && j != b.terms_.end();
}

Coefficient Coefficient::specialize(const std::map<std::string, mpq_class>& values) const {
    Coefficient out;
    for (const auto& [m, c] : terms_) {
        ParamMonomial rest;
        mpq_class factor = c;
        for (const auto& [name, e] : m) {
            auto it = values.find(name);
            if (it == values.end()) {
                rest.emplace_back(name, e);
            } else {
                for (unsigned k = 0; k < e; ++k) factor *= it->second;
            }
        }
        out.add_term(rest, factor);
    }
    return out;
}

std::size_t Coefficient::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [m, c] : terms_) {
        for (const auto& [name, e] : m) h = h * 131 + std::hash<std::string>{}(name) + e;
        h = h * 31 + std::hash<std::string>{}(c.get_str());
    }
    return h;
}

}  // namespace rbt
