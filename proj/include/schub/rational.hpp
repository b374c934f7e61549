#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace schub {

// Exact arbitrary-precision rational; no floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

// True iff r is an integer (denominator 1 after canonicalization).
inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

}  // namespace schub
