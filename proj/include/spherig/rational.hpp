#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spherig/errors.hpp"

namespace spherig {

// Exact scalar used everywhere verdict-relevant. mpq_class keeps the
// canonical reduced form after arithmetic, but NOT after the (num, den)
// constructor, hence the helper below.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "num/den" or "num"; used by the JSON matrix dump and verdict witnesses.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw input_error("rational with zero denominator: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational number: '" + s + "'");
    }
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline Rational norm2(const RatVec& a) { return dot(a, a); }

}  // namespace spherig
