#pragma once

// Shared reader/writer for the `c*v^e` term syntax used by both Laurent
// polynomials in t and ordinary polynomials in x.

#include <gordian/numeric.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian::detail {

struct Term {
    std::int64_t exponent;
    Rational coefficient;
};

inline std::vector<Term> parse_terms(std::string_view text, char var) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty polynomial");

    std::vector<Term> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("bad polynomial '" + std::string(text) + "': " + why);
    };
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };

    while (i < s.size()) {
        int sgn = 1;
        bool had_sign = false;
        if (s[i] == '+' || s[i] == '-') {
            sgn = s[i] == '-' ? -1 : 1;
            had_sign = true;
            ++i;
        } else if (!out.empty()) {
            fail("missing '+' or '-' between terms");
        }
        if (i >= s.size()) fail("dangling sign");

        Rational coef(1);
        bool had_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = read_digits();
            coef = Rational(Integer(num));
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits();
                if (den.empty()) fail("missing denominator");
                Integer d(den);
                if (d == 0) fail("zero denominator");
                coef = Rational(Integer(num), d);
            }
            had_coef = true;
        }

        std::int64_t exponent = 0;
        bool had_var = false;
        if (i < s.size() && s[i] == '*') {
            if (!had_coef) fail("'*' without coefficient");
            ++i;
            if (i >= s.size() || s[i] != var) fail(std::string("expected '") + var + "' after '*'");
        }
        if (i < s.size() && s[i] == var) {
            had_var = true;
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esgn = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    esgn = s[i] == '-' ? -1 : 1;
                    ++i;
                }
                std::string digits = read_digits();
                if (digits.empty()) fail("missing exponent");
                if (digits.size() > 15) fail("exponent out of range");
                exponent = esgn * std::stoll(digits);
            }
        }
        if (!had_coef && !had_var) fail("expected a term at position " + std::to_string(i));
        (void)had_sign;
        out.push_back({exponent, sgn * coef});
    }
    return out;
}

/// Writes terms in the given order; zero coefficients must already be removed.
inline std::string format_terms(const std::vector<Term>& terms, char var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (c < 0) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        if (e == 0) {
            out += compact_string(mag);
            continue;
        }
        if (mag != 1) {
            out += compact_string(mag);
            if (!is_integer(mag)) out += '*';
        }
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace gordian::detail
