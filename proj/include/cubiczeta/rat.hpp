#ifndef CUBICZETA_RAT_HPP
#define CUBICZETA_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "cubiczeta/errors.hpp"

namespace cz {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// floor(q) as an integer
Int rat_floor(const Rat& q);

// q - floor(q), in [0, 1)
Rat rat_frac(const Rat& q);

bool rat_is_integer(const Rat& q);

// "p/q", or just "p" when the denominator is 1
std::string rat_str(const Rat& q);

// inverse of rat_str; also accepts plain integers
Rat rat_parse(const std::string& s);

std::string int_str(const Int& z);

Int int_pow(const Int& base, unsigned long e);

}  // namespace cz

#endif
