#pragma once

// Exact number types shared by every gordian module, plus the small helpers
// (floor, ceil, parsing, printing) that boost::multiprecision leaves out.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gordian {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// Machine integers wide enough for products of two guarded fractions.
__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

/// Raised when an operation's mathematical precondition does not hold
/// (even torus parameter, non-normalized polynomial, unfit witness request).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor(const Rational& q) { return floor_div(numer(q), denom(q)); }

inline Integer ceil(const Rational& q) { return -floor(-q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline int sign(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
inline int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline std::string to_string(const Integer& v) { return v.str(); }

/// Always `num/den`, including integers (`3/1`, `0/1`).
inline std::string fraction_string(const Rational& q) {
    return numer(q).str() + "/" + denom(q).str();
}

/// `num/den`, or just `num` when the value is an integer.
inline std::string compact_string(const Rational& q) {
    if (is_integer(q)) return numer(q).str();
    return fraction_string(q);
}

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
    if (start == s.size()) throw ParseError("expected an integer, got '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, got '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
}

/// Accepts `n`, `n/d`, with an optional sign on the numerator.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer n = parse_integer(text.substr(0, slash));
    Integer d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

/// Largest p accepted by operations that enumerate every root of D_p.
/// GORDIAN_MAX_P overrides the default of one million.
inline Integer materialization_limit() {
    if (const char* env = std::getenv("GORDIAN_MAX_P"); env != nullptr && *env != '\0') {
        try {
            return parse_integer(env);
        } catch (const ParseError&) {
            throw DomainError("GORDIAN_MAX_P must be a decimal integer");
        }
    }
    return Integer(1000000);
}

}  // namespace gordian
