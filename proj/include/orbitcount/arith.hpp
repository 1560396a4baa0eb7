#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orbitcount {

// All counts are exact. Int is an arbitrary-precision signed integer,
// Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator (gmp canonical form).
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form. Throws std::invalid_argument on den == 0.
Rat make_rat(const Int& num, const Int& den);

Int factorial(int n);

// (n)_x = n(n-1)...(n-x+1); 1 when x == 0. n may be any integer.
Int falling_factorial(long n, int x);

// C(n, r); 0 when r < 0 or r > n.
Int binomial(int n, int r);

// All divisors of m >= 1, ascending, including 1 and m.
std::vector<int> divisors(int m);

// Number of integer partitions of n, by the pentagonal-number recurrence.
Int partition_count(int n);

Int pow_int(const Int& base, int exp);

std::string to_decimal(const Int& v);

// "num/den", or just "num" when den == 1.
std::string to_fraction(const Rat& v);

}  // namespace orbitcount
