#ifndef POLAR_RATIONAL_HPP
#define POLAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polar {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "a" or "a/b" with optional sign; throws on malformed input.
Rational rational_from_string(const std::string& s);

// Positive divisors of |n|, ascending; n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

// Prime factorization of n >= 2 by trial division, as (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

}  // namespace polar

#endif
