#include "gammaforms/arith.hpp"

#include <cstdlib>
#include <limits>

#include "gammaforms/errors.hpp"

namespace gammaforms {

Rational frac(Int const & n, Int const & d)
{
    if (sgn(d) == 0)
        throw validation_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational frac(std::int64_t n, std::int64_t d)
{
    return frac(Int(static_cast<long>(n)), Int(static_cast<long>(d)));
}

Int gcd(Int const & x, Int const & y)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

Int lcm(Int const & x, Int const & y)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return l;
}

Int mod(Int const & x, Int const & m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

Int floor_div(Int const & x, Int const & y)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

Int isqrt(Int const & n)
{
    if (sgn(n) < 0)
        throw validation_error("isqrt of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Int const & n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(Int const & n)
{
    if (n < 2)
        return false;
    // Trial division is exact at the sizes used for levels and primes here;
    // fall back to GMP's test beyond that.
    if (n < Int(1) << 40) {
        std::int64_t v = n.get_si();
        return is_prime(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (std::int64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0)
            return false;
    return true;
}

ext_gcd_result ext_gcd(Int const & x, Int const & y)
{
    ext_gcd_result r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Int inverse_mod(Int const & x, Int const & m)
{
    Int r;
    if (m < 2 || mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw validation_error("no inverse of " + x.get_str() + " modulo "
                               + m.get_str());
    return r;
}

std::int64_t to_i64(Int const & x)
{
    if (!x.fits_slong_p())
        throw validation_error("integer " + x.get_str()
                               + " exceeds the supported machine range");
    return x.get_si();
}

Int parse_int(std::string_view text)
{
    std::string s(text);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw validation_error("expected an integer, got '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw validation_error("expected an integer, got '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Int(s, 10);
}

std::int64_t gcd_i64(std::int64_t x, std::int64_t y)
{
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    std::vector<std::int64_t> ps;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            ps.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

mpz_class search_bound(mpz_class const & default_bound)
{
    char const * env = std::getenv(max_search_env);
    if (env == nullptr || *env == '\0')
        return default_bound;
    try {
        Int v = parse_int(env);
        if (v > 0)
            return v;
    } catch (validation_error const &) {
    }
    return default_bound;
}

} // namespace gammaforms
