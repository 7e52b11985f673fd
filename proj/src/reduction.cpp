#include "gammaforms/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "gammaforms/errors.hpp"
#include "gammaforms/fundomain.hpp"

namespace gammaforms {

namespace {

GroupElement const S_matrix{Int(0), Int(-1), Int(1), Int(0)};

GroupElement translation(Int const & k)
{
    return {Int(1), k, Int(0), Int(1)};
}

void require_positive_definite(Form const & Q)
{
    if (!Q.is_positive_definite())
        throw validation_error("form " + Q.str()
                               + " is not positive definite");
}

void require_qf(Form const & Q)
{
    require_positive_definite(Q);
    if (!Q.is_primitive())
        throw validation_error("form " + Q.str() + " is not primitive");
}

void require_level(Level N)
{
    if (N < 1)
        throw validation_error("level must be a positive integer");
}

using P1Point = std::pair<std::int64_t, std::int64_t>;

/* Lexicographically least unit multiple of (c : d) modulo N. */
P1Point p1_normalize(std::int64_t c, std::int64_t d, Level N)
{
    if (N == 1)
        return {0, 0};
    c = mod(c, N);
    d = mod(d, N);
    P1Point best{N, N};
    for (std::int64_t u = 1; u < N; ++u)
        if (gcd_i64(u, N) == 1)
            best = std::min(best, P1Point{u * c % N, u * d % N});
    return best;
}

/* A matrix in SL_2(Z) whose bottom row reduces to (c, d) mod N. */
GroupElement lift_p1(std::int64_t c, std::int64_t d, Level N)
{
    if (c == 0)
        return GroupElement::identity();
    std::int64_t dd = d;
    while (gcd_i64(c, dd) != 1)
        dd += N;
    ext_gcd_result e = ext_gcd(Int(dd), Int(c)); // s dd + t c = 1
    return GroupElement::make(e.s, -e.t, Int(c), Int(dd));
}

} // namespace

ReductionResult reduce_sl2(Form const & Q)
{
    require_positive_definite(Q);
    Form f = Q;
    GroupElement m = GroupElement::identity();
    for (;;) {
        // Move b into (-a, a].
        Int k = floor_div(f.a - f.b, 2 * f.a);
        if (k != 0) {
            GroupElement t = translation(k);
            f = act(f, t);
            m = m * t;
        }
        if (f.a > f.c) {
            f = act(f, S_matrix);
            m = m * S_matrix;
            continue;
        }
        break;
    }
    if (f.a == f.c && sgn(f.b) < 0) {
        f = act(f, S_matrix);
        m = m * S_matrix;
    }
    return {f, m};
}

bool is_reduced_sl2(Form const & Q)
{
    Int const ab = abs(Q.b);
    if (!(ab <= Q.a && Q.a <= Q.c))
        return false;
    if ((ab == Q.a || Q.a == Q.c) && sgn(Q.b) < 0)
        return false;
    return true;
}

bool is_reduced_gamma0_small(Form const & Q, Level p)
{
    if (p != 2 && p != 3)
        throw validation_error("is_reduced_gamma0_small needs p in {2, 3}");
    Int const ab = abs(Q.b);
    Int const pc = p * Q.c;
    if (!(ab <= Q.a && ab <= pc))
        return false;
    if ((ab == Q.a || ab == pc) && sgn(Q.b) <= 0)
        return false;
    return true;
}

bool is_reduced_gamma0_p(Form const & Q, Level p)
{
    require_prime_ge5(p);
    EllipticData const e = elliptic_data(p);
    Int const & a = Q.a;
    Int const & b = Q.b;
    Int const & c = Q.c;
    Int const ab = abs(b);

    if (ab > a) // (1)
        return false;
    for (std::int64_t k : symmetric_residues(p)) {
        Int const kk(k);
        // p^2 c + (k^2 - 1) a, the arc k quantity
        Int const arc = p * p * c + (kk * kk - 1) * a;
        if (ab * p * abs(kk) > arc) // (2)
            return false;
        if (p * kk * b != -arc)
            continue;
        if (e.in_E2(k)) { // (5)
            if (p * b < -2 * kk * a)
                return false;
        } else if (k != 1 && k != -1) { // (6)
            if (p * b < -(2 * e.k2(k) + 1) * a)
                return false;
        }
    }
    if (ab == a && b != a) // (3)
        return false;
    if (b == -p * c) // (4)
        return false;
    if (p * p * Q.disc() == -3 * a * a) { // (7)
        for (std::int64_t k : symmetric_residues(p)) {
            if (k == 1 || e.in_E3(k) || k == e.k3(k))
                continue;
            if (p * b == (1 - 2 * k) * a)
                return false;
        }
    }
    return true;
}

bool is_supported_level(Level N)
{
    return N == 1 || N == 2 || N == 3 || (N >= 5 && is_prime(N));
}

bool is_reduced(Form const & Q, Level N)
{
    require_level(N);
    if (N == 1)
        return is_reduced_sl2(Q);
    if (N == 2 || N == 3)
        return is_reduced_gamma0_small(Q, N);
    if (N >= 5 && is_prime(N))
        return is_reduced_gamma0_p(Q, N);
    throw unsupported_level("no fundamental region for level "
                            + std::to_string(N));
}

std::int64_t gamma0_index(Level N)
{
    require_level(N);
    std::int64_t idx = N;
    for (std::int64_t q : prime_divisors(N))
        idx = idx / q * (q + 1);
    return idx;
}

std::size_t CosetSystem::index_of(GroupElement const & g) const
{
    std::int64_t c = to_i64(mod(g.c, Int(N)));
    std::int64_t d = to_i64(mod(g.d, Int(N)));
    P1Point key = p1_normalize(c, d, N);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::int64_t rc = to_i64(mod(reps[i].c, Int(N)));
        std::int64_t rd = to_i64(mod(reps[i].d, Int(N)));
        if (p1_normalize(rc, rd, N) == key)
            return i;
    }
    throw std::logic_error("coset system is incomplete");
}

CosetSystem coset_reps(Level N)
{
    require_level(N);
    CosetSystem cs{N, {}};
    if (N == 1) {
        cs.reps.push_back(GroupElement::identity());
        return cs;
    }
    std::vector<P1Point> points;
    for (std::int64_t c = 0; c < N; ++c)
        for (std::int64_t d = 0; d < N; ++d)
            if (gcd_i64(gcd_i64(c, d), N) == 1)
                points.push_back(p1_normalize(c, d, N));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    // (0 : 1) first, so the identity leads.
    std::stable_partition(points.begin(), points.end(),
                          [](P1Point const & x) { return x.first == 0; });
    for (auto const & [c, d] : points)
        cs.reps.push_back(lift_p1(c, d, N));
    return cs;
}

std::vector<GroupElement> automorphs(Form const & Q)
{
    require_positive_definite(Q);
    Int const D = Q.disc();
    std::vector<std::pair<Int, Int>> tu{{Int(2), Int(0)}, {Int(-2), Int(0)}};
    Int umax = isqrt(Int(4) / -D);
    for (Int u = -umax; u <= umax; ++u) {
        if (u == 0)
            continue;
        Int t2 = 4 + D * u * u;
        if (!is_square(t2))
            continue;
        Int t = isqrt(t2);
        tu.emplace_back(t, u);
        if (t != 0)
            tu.emplace_back(-t, u);
    }
    std::vector<GroupElement> out;
    for (auto const & [t, u] : tu)
        out.push_back(GroupElement::make((t - Q.b * u) / 2, -Q.c * u,
                                         Q.a * u, (t + Q.b * u) / 2));
    return out;
}

std::vector<Form> enumerate_sl2_reduced(Int const & D)
{
    require_valid_discriminant(D);
    std::vector<Form> out;
    Int amax = isqrt(-D / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b - D;
            if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t()))
                continue;
            Form f(a, b, num / (4 * a));
            if (is_reduced_sl2(f) && f.is_primitive())
                out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Form> enumerate_reduced(Int const & D, Level N)
{
    require_valid_discriminant(D);
    require_level(N);
    if (N == 1)
        return enumerate_sl2_reduced(D);
    if (!is_supported_level(N))
        throw unsupported_level("no fundamental region for level "
                                + std::to_string(N));
    // The region lies above height sqrt(3)/(2N) except in the horn at the
    // cusp 0, where |Re| <= 1/(2N) and both arcs through 0 bound it. In the
    // horn S maps the point above height N sqrt(3)/2 with |Re| <= N/2.
    // Hence 3a^2 <= N^2 |D| or 3 N^2 c^2 <= |D|, and |b| <= min(a, N c).
    std::vector<Form> out;
    Int const absD = -D;
    auto consider = [&](Form const & f) {
        if (f.is_primitive() && is_reduced(f, N))
            out.push_back(f);
    };
    for (Int a = 1; 3 * a * a <= N * N * absD; ++a)
        for (Int b = -a; b <= a; ++b) {
            Int n = b * b - D;
            if (mod(n, 4 * a) == 0)
                consider(Form(a, b, n / (4 * a)));
        }
    for (Int c = 1; 3 * N * N * c * c <= absD; ++c)
        for (Int b = -N * c; b <= N * c; ++b) {
            Int n = b * b - D;
            if (mod(n, 4 * c) == 0)
                consider(Form(n / (4 * c), b, c));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<GroupElement>
equivalent_gamma0(Form const & Q1, Form const & Q2, Level N)
{
    require_level(N);
    if (Q1.disc() != Q2.disc())
        throw validation_error("discriminant mismatch: " + Q1.str() + " vs "
                               + Q2.str());
    ReductionResult r1 = reduce_sl2(Q1);
    ReductionResult r2 = reduce_sl2(Q2);
    if (r1.reduced != r2.reduced)
        return std::nullopt;
    // Q1 . d1 = R = Q2 . d2, so the solutions are d1 Aut(R) d2^-1.
    GroupElement const d2inv = r2.transform.inverse();
    for (GroupElement const & alpha : automorphs(r1.reduced)) {
        GroupElement g = r1.transform * alpha * d2inv;
        if (g.in_gamma0(N))
            return g;
    }
    return std::nullopt;
}

std::vector<std::vector<Form>>
split_sl2_class(Form const & R, Level N, CosetSystem const & cosets)
{
    if (cosets.N != N)
        throw validation_error("coset system level does not match");
    std::vector<std::vector<Form>> classes;
    for (GroupElement const & g : cosets.reps) {
        Form t = act(R, g.inverse());
        bool placed = false;
        for (auto & cls : classes) {
            if (equivalent_gamma0(cls.front(), t, N)) {
                cls.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.push_back({t});
    }
    for (auto & cls : classes)
        std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::vector<Form> gamma0_class_reps(Int const & D, Level N)
{
    require_valid_discriminant(D);
    require_level(N);
    if (is_supported_level(N))
        return enumerate_reduced(D, N);
    CosetSystem const cosets = coset_reps(N);
    std::vector<Form> out;
    for (Form const & R : enumerate_sl2_reduced(D))
        for (auto const & cls : split_sl2_class(R, N, cosets))
            out.push_back(cls.front());
    std::sort(out.begin(), out.end());
    return out;
}

Form canonical_rep(Form const & Q, Level N, CosetSystem const & cosets)
{
    require_qf(Q);
    Form const R = reduce_sl2(Q).reduced;
    std::optional<Form> best;
    for (GroupElement const & g : cosets.reps) {
        Form t = act(R, g.inverse());
        if ((!best || t < *best) && equivalent_gamma0(Q, t, N))
            best = t;
    }
    if (!best)
        throw std::logic_error("no coset translate lies in the class of "
                               + Q.str());
    return *best;
}

Form canonical_rep(Form const & Q, Level N)
{
    require_qf(Q);
    require_level(N);
    if (N == 1)
        return reduce_sl2(Q).reduced;
    if (!is_supported_level(N))
        return canonical_rep(Q, N, coset_reps(N));
    for (Form const & r : enumerate_reduced(Q.disc(), N))
        if (equivalent_gamma0(Q, r, N))
            return r;
    throw std::logic_error("no Gamma_0(" + std::to_string(N)
                           + ")-reduced form is equivalent to " + Q.str());
}

ReductionResult reduce_gamma0(Form const & Q, Level N)
{
    Form rep = canonical_rep(Q, N);
    std::optional<GroupElement> g = equivalent_gamma0(Q, rep, N);
    if (!g)
        throw std::logic_error("canonical representative is not equivalent");
    return {rep, *g};
}

} // namespace gammaforms
