// Brute-force reference computations used only by the tests. None of them
// calls into the library beyond the value types and act().
#ifndef GAMMAFORMS_TEST_ORACLES_HPP
#define GAMMAFORMS_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "gammaforms/forms.hpp"

namespace oracle {

using gammaforms::Form;
using gammaforms::GroupElement;
using gammaforms::Int;
using i64 = std::int64_t;

inline i64 gcd64(i64 a, i64 b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 powmod(i64 b, i64 e, i64 m)
{
    i64 r = 1 % m;
    b %= m;
    if (b < 0)
        b += m;
    while (e) {
        if (e & 1)
            r = static_cast<i64>((__int128)r * b % m);
        b = static_cast<i64>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<i64> primes_below(i64 n)
{
    std::vector<i64> v;
    for (i64 k = 2; k < n; ++k)
        if (is_prime(k))
            v.push_back(k);
    return v;
}

/* Kronecker symbol (D/m), m > 0, from Euler's criterion at each odd prime
 * factor and the table of (D/2). */
inline int kronecker(i64 D, i64 m)
{
    int result = 1;
    for (i64 q = 2; m > 1; ++q) {
        while (m % q == 0) {
            m /= q;
            int s;
            if (q == 2) {
                if (D % 2 == 0)
                    s = 0;
                else {
                    i64 r = ((D % 8) + 8) % 8;
                    s = (r == 1 || r == 7) ? 1 : -1;
                }
            } else {
                i64 e = powmod(D, (q - 1) / 2, q);
                s = e == 0 ? 0 : (e == 1 ? 1 : -1);
            }
            result *= s;
        }
    }
    return result;
}

/* Reduced forms |b| <= a <= c, b >= 0 on the boundary, by a plain triple
 * loop over a and b. */
inline std::vector<Form> sl2_reduced(i64 D)
{
    std::vector<Form> out;
    for (i64 a = 1; 3 * a * a <= -D; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 n = b * b - D;
            if (n % (4 * a) != 0)
                continue;
            i64 c = n / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (gcd64(gcd64(a, b), c) != 1)
                continue;
            out.push_back(Form(Int(a), Int(b), Int(c)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t class_number(i64 D)
{
    return sl2_reduced(D).size();
}

/* Proper automorphs with entries in [-3, 3], which covers every reduced
 * form. */
inline std::vector<GroupElement> automorphs(Form const & R)
{
    std::vector<GroupElement> out;
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b)
            for (i64 c = -3; c <= 3; ++c)
                for (i64 d = -3; d <= 3; ++d) {
                    if (a * d - b * c != 1)
                        continue;
                    GroupElement g{Int(a), Int(b), Int(c), Int(d)};
                    if (gammaforms::act(R, g) == R)
                        out.push_back(g);
                }
    return out;
}

/* Points of P^1(Z/N) as normalized pairs. */
inline std::pair<i64, i64> p1_norm(i64 x, i64 y, i64 N)
{
    x = ((x % N) + N) % N;
    y = ((y % N) + N) % N;
    std::pair<i64, i64> best{N, N};
    for (i64 u = 1; u <= N; ++u)
        if (gcd64(u, N) == 1)
            best = std::min(best, std::pair<i64, i64>{u * x % N, u * y % N});
    return best;
}

inline std::vector<std::pair<i64, i64>> p1_points(i64 N)
{
    std::set<std::pair<i64, i64>> s;
    for (i64 x = 0; x < N; ++x)
        for (i64 y = 0; y < N; ++y)
            if (gcd64(gcd64(x, y), N) == 1)
                s.insert(p1_norm(x, y, N));
    return {s.begin(), s.end()};
}

/* Number of Gamma_0(N)-classes of primitive forms of discriminant D:
 * sum over SL_2-classes [R] of the Aut(R)-orbits on P^1(Z/N). */
inline std::size_t gamma0_class_count(i64 D, i64 N)
{
    if (N == 1)
        return class_number(D);
    auto pts = p1_points(N);
    std::size_t total = 0;
    for (Form const & R : sl2_reduced(D)) {
        auto aut = automorphs(R);
        std::set<std::pair<i64, i64>> seen;
        for (auto const & pt : pts) {
            if (seen.count(pt))
                continue;
            ++total;
            for (GroupElement const & g : aut) {
                i64 a = g.a.get_si(), b = g.b.get_si(), c = g.c.get_si(),
                    d = g.d.get_si();
                seen.insert(p1_norm(a * pt.first + b * pt.second,
                                    c * pt.first + d * pt.second, N));
            }
        }
    }
    return total;
}

/* SL_2-reduction by breadth-first search over words in S, T, T^-1. */
inline std::optional<Form> bfs_reduce(Form const & Q, int depth)
{
    std::set<Form> seen{Q};
    std::queue<std::pair<Form, int>> q;
    q.push({Q, 0});
    GroupElement const gens[] = {GroupElement(0, -1, 1, 0),
                                 GroupElement(1, 1, 0, 1),
                                 GroupElement(1, -1, 0, 1)};
    while (!q.empty()) {
        auto [f, d] = q.front();
        q.pop();
        Int D = f.disc();
        bool reduced = abs(f.b) <= f.a && f.a <= f.c
                       && !((abs(f.b) == f.a || f.a == f.c) && f.b < 0);
        if (reduced)
            return f;
        if (d == depth)
            continue;
        for (GroupElement const & g : gens) {
            Form h = gammaforms::act(f, g);
            if (seen.insert(h).second)
                q.push({h, d + 1});
        }
    }
    return std::nullopt;
}

/* Least B in [0, 2aa') with B = b (2a), B = b' (2a'), B^2 = D (4aa'). */
inline std::optional<Int> composition_B(Form const & f, Form const & g)
{
    Int D = f.disc();
    Int m = 2 * f.a * g.a;
    for (Int B = 0; B < m; ++B) {
        Int r1 = B - f.b, r2 = B - g.b, r3 = B * B - D;
        if (mpz_divisible_p(r1.get_mpz_t(), Int(2 * f.a).get_mpz_t())
            && mpz_divisible_p(r2.get_mpz_t(), Int(2 * g.a).get_mpz_t())
            && mpz_divisible_p(r3.get_mpz_t(), Int(4 * f.a * g.a).get_mpz_t()))
            return B;
    }
    return std::nullopt;
}

/* Random SL_2(Z) word: products of S and small translations. */
inline GroupElement random_sl2(std::mt19937_64 & rng, int len = 6)
{
    std::uniform_int_distribution<int> k(-3, 3);
    GroupElement g;
    for (int i = 0; i < len; ++i) {
        g = g * GroupElement(1, k(rng), 0, 1);
        if (rng() & 1)
            g = g * GroupElement(0, -1, 1, 0);
    }
    return g;
}

/* Random element of Gamma_0(N): words in T^k, (1,0;N,1)^k and -1. */
inline GroupElement random_gamma0(std::mt19937_64 & rng, i64 N, int len = 4)
{
    std::uniform_int_distribution<int> k(-2, 2);
    GroupElement g;
    for (int i = 0; i < len; ++i) {
        g = g * GroupElement(1, k(rng), 0, 1);
        g = g * GroupElement(1, 0, Int(N) * k(rng), 1);
    }
    if (rng() & 1)
        g = g * GroupElement(-1, 0, 0, -1);
    return g;
}

/* Random primitive positive-definite form of discriminant D. */
inline Form random_form(std::mt19937_64 & rng, i64 D, int len = 6)
{
    auto reps = sl2_reduced(D);
    Form R = reps[rng() % reps.size()];
    return gammaforms::act(R, random_sl2(rng, len));
}

} // namespace oracle

#endif
