#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ricci {

// Exact rational arithmetic. All curvature values, masses and transport
// costs in this library are mpq_class; nothing is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serializes as "p/q", or just "p" when q == 1. This is the only
// rendering used in reports; decimals are opt-in at the CLI layer.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline double rat_double(const Rational& r) { return r.get_d(); }

}  // namespace ricci
