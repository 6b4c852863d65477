#pragma once

#include "bilindisc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bilindisc {

// Variable groups. X, Y, Z hold the point variables of the multihomogeneous
// systems; Coeff holds symbolic coefficients (group_index picks the equation).
enum class Group : std::uint8_t { X = 0, Y = 1, Z = 2, Coeff = 3 };

struct VarRef {
    Group group = Group::X;
    std::uint8_t group_index = 0;
    std::uint8_t component = 0;

    friend auto operator<=>(const VarRef&, const VarRef&) = default;

    static constexpr VarRef x(int i) { return {Group::X, 0, static_cast<std::uint8_t>(i)}; }
    static constexpr VarRef y(int j) { return {Group::Y, 0, static_cast<std::uint8_t>(j)}; }
    static constexpr VarRef z(int j) { return {Group::Z, 0, static_cast<std::uint8_t>(j)}; }
    static constexpr VarRef coeff(int equation, int component) {
        return {Group::Coeff, static_cast<std::uint8_t>(equation),
                static_cast<std::uint8_t>(component)};
    }
};

// x0, y1, z0 for point variables; a_3, b_0, ... for coefficients, where the
// letter encodes the equation (a for equation 0, b for 1, ...).
std::string to_string(const VarRef& v);

struct Power {
    VarRef var;
    unsigned exponent = 0;

    friend auto operator<=>(const Power&, const Power&) = default;
};

// Sparse exponent vector kept sorted by VarRef with no zero exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Power> powers);
    static Monomial of(VarRef v, unsigned exponent = 1);

    const std::vector<Power>& powers() const { return powers_; }
    bool is_one() const { return powers_.empty(); }

    unsigned exponent(const VarRef& v) const;
    unsigned total_degree() const;
    unsigned degree(Group g) const;
    unsigned degree(Group g, int group_index) const;

    // Monomial with every variable of group g removed.
    Monomial without(Group g) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Power> powers_;
};

std::string to_string(const Monomial& m);

// Sparse multivariate polynomial with exact rational coefficients. The empty
// term map is the zero polynomial; no stored term has a zero coefficient.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(int c);              // NOLINT(google-explicit-constructor)
    MultiPoly(const Monomial& m, const Rational& c);

    static MultiPoly variable(VarRef v);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial; raises WrongShapeError otherwise.
    Rational to_constant() const;
    Rational coefficient(const Monomial& m) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree(Group g) const;
    int degree(Group g, int group_index) const;
    int degree(const VarRef& v) const;
    bool is_homogeneous(Group g, int degree) const;

    std::vector<VarRef> variables() const;

    MultiPoly derivative(const VarRef& v) const;
    // Replace each mapped variable by the given polynomial; others untouched.
    MultiPoly substitute(const std::map<VarRef, MultiPoly>& values) const;
    MultiPoly evaluate(const std::map<VarRef, Rational>& values) const;

    // Collects the terms by their part in group g: result maps the g-monomial
    // to its coefficient polynomial in the remaining variables.
    std::map<Monomial, MultiPoly> split(Group g) const;

    // Integer content: gcd of numerators over lcm of denominators, positive.
    Rational content() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.str(); }

MultiPoly pow(const MultiPoly& p, unsigned exponent);

enum class PolyOp { Add, Sub, Mul };

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);
MultiPoly partial_derivative(const MultiPoly& p, const VarRef& v);

}  // namespace bilindisc
