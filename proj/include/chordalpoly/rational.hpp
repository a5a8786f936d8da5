#pragma once

#include <gmpxx.h>

#include <string>

#include "chordalpoly/errors.hpp"

namespace chordalpoly {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p,q) does not canonicalize on its own, so construction goes
// through these helpers to keep the gcd-1 / positive-denominator invariant.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Renders p/q, or just p when the value is integral.
inline std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(text);
            return Rational(num);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational: '" + text + "'");
    }
}

}  // namespace chordalpoly
