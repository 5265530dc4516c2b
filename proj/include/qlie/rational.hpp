#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qlie {

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Arbitrary-precision throughout -- the library contains no
/// floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int numerator(const Rat& r) { return r.get_num(); }
inline Int denominator(const Rat& r) { return r.get_den(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace qlie
