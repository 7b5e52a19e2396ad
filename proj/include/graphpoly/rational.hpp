// Exact rational arithmetic used for every coefficient in the project.
// No floating point anywhere: identities are checked with exact equality.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace graphpoly {

using BigInt = boost::multiprecision::cpp_int;

// Always kept in lowest terms with positive denominator (the backing
// implementation canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p" and "p/q" with q > 0; anything else is rejected.
inline Rational rational_from_string(const std::string& text) {
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    BigInt d(den);
    if (d == 0)
        throw std::invalid_argument("invalid rational literal (zero denominator): '" + text + "'");
    Rational r = Rational(BigInt(num)) / Rational(d);
    return negative ? Rational(-r) : r;
}

inline Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return Rational(acc);
}

// (-1)^e as an exact rational.
inline Rational minus_one_pow(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace graphpoly
