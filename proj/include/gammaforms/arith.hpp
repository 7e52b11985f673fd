#ifndef GAMMAFORMS_ARITH_HPP
#define GAMMAFORMS_ARITH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gammaforms {

using Int = mpz_class;
using Rational = mpq_class;

/* n/d in lowest terms; d != 0. */
Rational frac(Int const & n, Int const & d);
Rational frac(std::int64_t n, std::int64_t d);

Int gcd(Int const & x, Int const & y);
Int lcm(Int const & x, Int const & y);

/* Least non-negative residue; m must be positive. */
Int mod(Int const & x, Int const & m);
std::int64_t mod(std::int64_t x, std::int64_t m);

Int floor_div(Int const & x, Int const & y);

/* floor(sqrt(n)) for n >= 0. */
Int isqrt(Int const & n);
bool is_square(Int const & n);

bool is_prime(Int const & n);
bool is_prime(std::int64_t n);

struct ext_gcd_result
{
    Int g, s, t; // s*x + t*y = g, g >= 0
};
ext_gcd_result ext_gcd(Int const & x, Int const & y);

/* Inverse of x modulo m > 1; throws validation_error when none exists. */
Int inverse_mod(Int const & x, Int const & m);

std::int64_t to_i64(Int const & x);

/* Decimal integer with optional sign; throws validation_error. */
Int parse_int(std::string_view text);

std::int64_t gcd_i64(std::int64_t x, std::int64_t y);

/* Distinct prime divisors of n > 0, ascending. */
std::vector<std::int64_t> prime_divisors(std::int64_t n);

} // namespace gammaforms

#endif
