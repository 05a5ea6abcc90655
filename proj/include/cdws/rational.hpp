#pragma once

#include <gmpxx.h>

#include <string>

#include "cdws/errors.hpp"

namespace cdws {

// Exact rational scalar. mpq_class keeps values canonicalized (reduced,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "3", "-1/2"; no decimal forms.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail("ParseError", "bad rational literal '" + text + "'");
    }
}

} // namespace cdws
