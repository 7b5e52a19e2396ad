// Sparse multivariate polynomials over the exact rationals.
//
// A MultiPoly is a map from exponent vectors to nonzero rational
// coefficients, relative to a fixed ordered variable list such as
// (q, y, z) or (q, v). Monomials are kept in graded lexicographic order
// (total degree first, then lexicographic on exponents, largest first),
// which is also the canonical serialization order. Equality is exact
// term-by-term equality, variable lists included.
#pragma once

#include "graphpoly/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphpoly {

using Variables = std::vector<std::string>;
using Exponents = std::vector<int>;

inline const Variables& vars_qyz() {
    static const Variables v{"q", "y", "z"};
    return v;
}
inline const Variables& vars_qv() {
    static const Variables v{"q", "v"};
    return v;
}
inline const Variables& vars_qy() {
    static const Variables v{"q", "y"};
    return v;
}
inline const Variables& vars_yz() {
    static const Variables v{"y", "z"};
    return v;
}
inline const Variables& vars_q() {
    static const Variables v{"q"};
    return v;
}
inline const Variables& vars_none() {
    static const Variables v{};
    return v;
}

// Graded lexicographic order, largest monomial first.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long long ga = 0, gb = 0;
        for (int e : a) ga += e;
        for (int e : b) gb += e;
        if (ga != gb) return ga > gb;
        return b < a;  // lexicographic, descending
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    MultiPoly() = default;  // zero polynomial with empty variable list
    explicit MultiPoly(Variables vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(const Variables& vars) { return MultiPoly(vars); }
    static MultiPoly constant(const Variables& vars, const Rational& c);
    // The monomial `name` to the first power; `name` must appear in `vars`.
    static MultiPoly var(const Variables& vars, const std::string& name);
    static MultiPoly monomial(const Variables& vars, Exponents exps, const Rational& c);

    const Variables& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulates c on the given exponent vector, erasing the term if the
    // sum cancels. The exponent vector length must match the variable list.
    void add_term(const Exponents& exps, const Rational& c);

    int var_index(const std::string& name) const;  // -1 if absent

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator-(const MultiPoly& p);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

    bool operator==(const MultiPoly& rhs) const {
        return vars_ == rhs.vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    int degree_in(const std::string& name) const;
    long long total_degree() const;  // -1 for the zero polynomial

  private:
    Variables vars_;
    TermMap terms_;
};

inline MultiPoly scale(const MultiPoly& p, const Rational& c) { return c * p; }
inline MultiPoly negate(const MultiPoly& p) { return -p; }

// p^e for small nonnegative e.
MultiPoly pow(const MultiPoly& p, int e);

// The part of P whose total degree in all variables other than q equals k
// exactly (for (q,y,z) polynomials: the terms with y-degree + z-degree = k).
MultiPoly truncate_top(const MultiPoly& p, int k);

// Substitutes `replacement` for the variable `name`, expanding exactly.
// The replacement must live over the same variable list.
MultiPoly substitute(const MultiPoly& p, const std::string& name, const MultiPoly& replacement);

// y -> y-1, z -> z-1.
MultiPoly shift_yz(const MultiPoly& p);
// v -> -v.
MultiPoly negate_v(const MultiPoly& p);

// Full evaluation; every variable must be assigned.
Rational eval_at(const MultiPoly& p, const std::vector<std::pair<std::string, Rational>>& values);

// Substitutes a constant for one variable, keeping the variable list.
MultiPoly partial_eval(const MultiPoly& p, const std::string& name, const Rational& value);

// Re-expresses p over `target`. Variables dropped from the list must have
// exponent zero in every term; fresh variables get exponent zero.
MultiPoly project(const MultiPoly& p, const Variables& target);

// Unique polynomial of degree <= degree_bound in the new leading variable
// `var` passing through the given points. Points beyond degree_bound + 1 act
// as consistency witnesses: if they disagree with the reconstruction, a
// degree bound was wrong somewhere and we throw rather than return.
MultiPoly interpolate_q(const std::string& var,
                        const std::vector<std::pair<Rational, MultiPoly>>& points,
                        int degree_bound);

// Turns a full chromatic polynomial C(q,y) of a k-edge graph into the Potts
// polynomial Z(q,v): each monomial q^s y^i becomes q^s (v+1)^(k-i).
MultiPoly potts_substitute(const MultiPoly& c, int k);

// Canonical text form, e.g. "1/2*q^2*y - 1/2*q*y + q"; "0" for zero.
std::string to_string(const MultiPoly& p);

// Parses the canonical text form back (accepts any sum of rational-coefficient
// monomials in the given variables).
MultiPoly parse_poly(const std::string& text, const Variables& vars);

}  // namespace graphpoly
