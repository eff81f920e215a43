#ifndef UMBRA_RATIONAL_HPP
#define UMBRA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace umbra {

// Exact arithmetic only.  Int/Rat are GMP arbitrary-precision types; nothing
// in the engine ever touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(long n);
Int binomial(long n, long k);   // 0 when k < 0 or k > n
Int int_pow(const Int& base, unsigned long e);

// Canonicalized ratio.  The raw two-argument mpq_class constructor does not
// reduce, and unreduced values break equality; always build ratios here.
Rat frac(long num, long den);

// "7", "-3/4".  Throws domain_error on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical "num/den", plain "num" when the denominator is 1.
std::string rat_to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace umbra

#endif
