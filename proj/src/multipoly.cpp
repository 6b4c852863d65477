#include "bilindisc/multipoly.hpp"

#include "bilindisc/errors.hpp"

#include <algorithm>
#include <set>

namespace bilindisc {

std::string to_string(const VarRef& v) {
    switch (v.group) {
        case Group::X: return "x" + std::to_string(v.component);
        case Group::Y: return "y" + std::to_string(v.component);
        case Group::Z: return "z" + std::to_string(v.component);
        case Group::Coeff: break;
    }
    return std::string(1, static_cast<char>('a' + v.group_index)) + "_" +
           std::to_string(v.component);
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Power> powers) : powers_(std::move(powers)) {
    std::erase_if(powers_, [](const Power& p) { return p.exponent == 0; });
    std::sort(powers_.begin(), powers_.end(),
              [](const Power& a, const Power& b) { return a.var < b.var; });
    // merge repeated variables
    std::vector<Power> merged;
    merged.reserve(powers_.size());
    for (const auto& p : powers_) {
        if (!merged.empty() && merged.back().var == p.var) {
            merged.back().exponent += p.exponent;
        } else {
            merged.push_back(p);
        }
    }
    powers_ = std::move(merged);
}

Monomial Monomial::of(VarRef v, unsigned exponent) {
    return Monomial(std::vector<Power>{{v, exponent}});
}

unsigned Monomial::exponent(const VarRef& v) const {
    for (const auto& p : powers_) {
        if (p.var == v) return p.exponent;
    }
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.exponent;
    return d;
}

unsigned Monomial::degree(Group g) const {
    unsigned d = 0;
    for (const auto& p : powers_) {
        if (p.var.group == g) d += p.exponent;
    }
    return d;
}

unsigned Monomial::degree(Group g, int group_index) const {
    unsigned d = 0;
    for (const auto& p : powers_) {
        if (p.var.group == g && p.var.group_index == group_index) d += p.exponent;
    }
    return d;
}

Monomial Monomial::without(Group g) const {
    Monomial out;
    for (const auto& p : powers_) {
        if (p.var.group != g) out.powers_.push_back(p);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
        if (i->var < j->var) {
            out.powers_.push_back(*i++);
        } else if (j->var < i->var) {
            out.powers_.push_back(*j++);
        } else {
            out.powers_.push_back({i->var, i->exponent + j->exponent});
            ++i;
            ++j;
        }
    }
    out.powers_.insert(out.powers_.end(), i, a.powers_.end());
    out.powers_.insert(out.powers_.end(), j, b.powers_.end());
    return out;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (const auto& p : m.powers()) {
        if (!s.empty()) s += '*';
        s += to_string(p.var);
        if (p.exponent > 1) s += "^" + std::to_string(p.exponent);
    }
    return s.empty() ? "1" : s;
}

// --- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(int c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

MultiPoly MultiPoly::variable(VarRef v) { return MultiPoly(Monomial::of(v), Rational(1)); }

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::to_constant() const {
    if (!is_constant()) throw WrongShapeError("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

int MultiPoly::degree(Group g) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree(g)));
    return d;
}

int MultiPoly::degree(Group g, int group_index) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree(g, group_index)));
    return d;
}

int MultiPoly::degree(const VarRef& v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(v)));
    return d;
}

bool MultiPoly::is_homogeneous(Group g, int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return static_cast<int>(t.first.degree(g)) == degree;
    });
}

std::vector<VarRef> MultiPoly::variables() const {
    std::set<VarRef> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& p : m.powers()) vars.insert(p.var);
    }
    return {vars.begin(), vars.end()};
}

MultiPoly MultiPoly::derivative(const VarRef& v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(v);
        if (e == 0) continue;
        std::vector<Power> powers = m.powers();
        for (auto& p : powers) {
            if (p.var == v) p.exponent -= 1;
        }
        out.add_term(Monomial(std::move(powers)), c * e);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarRef, MultiPoly>& values) const {
    MultiPoly out;
    // cache powers of substituted values across terms
    std::map<std::pair<VarRef, unsigned>, MultiPoly> cache;
    auto power_of = [&](const VarRef& v, unsigned e) -> const MultiPoly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, pow(values.at(v), e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        std::vector<Power> kept;
        MultiPoly factor(Rational(1));
        for (const auto& p : m.powers()) {
            if (values.contains(p.var)) {
                factor *= power_of(p.var, p.exponent);
            } else {
                kept.push_back(p);
            }
        }
        out += factor * MultiPoly(Monomial(std::move(kept)), c);
    }
    return out;
}

MultiPoly MultiPoly::evaluate(const std::map<VarRef, Rational>& values) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        std::vector<Power> kept;
        for (const auto& p : m.powers()) {
            const auto it = values.find(p.var);
            if (it == values.end()) {
                kept.push_back(p);
            } else {
                for (unsigned e = 0; e < p.exponent; ++e) coeff *= it->second;
            }
        }
        out.add_term(Monomial(std::move(kept)), coeff);
    }
    return out;
}

std::map<Monomial, MultiPoly> MultiPoly::split(Group g) const {
    std::map<Monomial, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
        std::vector<Power> in_group;
        std::vector<Power> rest;
        for (const auto& p : m.powers()) {
            (p.var.group == g ? in_group : rest).push_back(p);
        }
        out[Monomial(std::move(in_group))].add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

Rational MultiPoly::content() const {
    Integer num = 0;
    Integer den = 1;
    for (const auto& [m, c] : terms_) {
        num = gcd(num, Integer(boost::multiprecision::numerator(c)));
        den = lcm(den, Integer(boost::multiprecision::denominator(c)));
    }
    return Rational(abs(num), den);
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest monomials first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += to_string(mag);
        } else {
            if (mag != 1) s += to_string(mag) + "*";
            s += to_string(m);
        }
    }
    return s;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly result(1);
    MultiPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    return {};
}

MultiPoly partial_derivative(const MultiPoly& p, const VarRef& v) { return p.derivative(v); }

}  // namespace bilindisc
