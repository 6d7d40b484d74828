// Exact rational arithmetic used for exponents and lattice point weights.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace reps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" rendering, lowest terms, den >= 1 (e.g. "5/2", "4/1").
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt rational_ceil(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

}  // namespace reps
