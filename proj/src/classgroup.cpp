#include "gammaforms/classgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gammaforms/errors.hpp"
#include "gammaforms/reduction.hpp"

namespace gammaforms {

Form principal_form(Int const & D)
{
    require_valid_discriminant(D);
    if (mod(D, Int(4)) == 0)
        return {Int(1), Int(0), -D / 4};
    return {Int(1), Int(1), (1 - D) / 4};
}

PreparedForm prepare_coprime_with_witness(Form const & Q, Int const & M,
                                          Level N)
{
    if (N < 1)
        throw validation_error("level must be a positive integer");
    if (!Q.is_positive_definite())
        throw validation_error("form " + Q.str()
                               + " is not positive definite");
    Int const absM = abs(M);
    if (gcd(Q.a, absM) == 1)
        return {Q, GroupElement::identity()};

    Int const bound = search_bound(4 * absM * N * abs(Q.disc()));
    for (Int r = 1; r <= bound; ++r) {
        // First columns (x, y) with max(|x|, |y|) = r, N | y, gcd(x, y) = 1,
        // visited by |y|, then sign of x, then |x|, then sign of y.
        for (Int ay = 0; ay <= r; ay += N) {
            for (int sx : {1, -1}) {
                // |x| = r on the outer edge unless |y| = r already.
                Int ax_lo = (ay == r) ? Int(0) : r;
                for (Int ax = ax_lo; ax <= r; ++ax) {
                    if (ax == 0 && sx < 0)
                        continue;
                    for (int sy : {1, -1}) {
                        if (ay == 0 && sy < 0)
                            continue;
                        Int x = sx * ax;
                        Int y = sy * ay;
                        if (gcd(x, y) != 1)
                            continue;
                        if (gcd(Q(x, y), absM) != 1)
                            continue;
                        ext_gcd_result e = ext_gcd(x, y); // s x + t y = 1
                        GroupElement g = GroupElement::make(x, -e.t, y, e.s);
                        return {act(Q, g), g};
                    }
                }
            }
        }
    }
    throw safety_bound_exceeded("prepare_coprime: no Gamma_0("
                                + std::to_string(N) + ")-translate of "
                                + Q.str() + " has leading coefficient "
                                  "coprime to " + absM.get_str()
                                + " within the search bound");
}

Form prepare_coprime(Form const & Q, Int const & M, Level N)
{
    return prepare_coprime_with_witness(Q, M, N).form;
}

Int composition_middle(Form const & Q1, Form const & Q2)
{
    Int const D = Q1.disc();
    if (Q2.disc() != D)
        throw validation_error("discriminant mismatch: " + Q1.str() + " vs "
                               + Q2.str());
    Int const & a = Q1.a;
    Int const & b = Q1.b;
    Int const & a2 = Q2.a;
    Int const & b2 = Q2.b;
    Int const h = (b + b2) / 2;
    ext_gcd_result e1 = ext_gcd(a, a2);
    ext_gcd_result e2 = ext_gcd(e1.g, h);
    if (e2.g != 1)
        throw validation_error("composition needs gcd(a, a', (b+b')/2) = 1 "
                               "for " + Q1.str() + " and " + Q2.str());
    // a u + a' v + h w = 1
    Int const u = e2.s * e1.s;
    Int const v = e2.s * e1.t;
    Int const w = e2.t;
    Int const m = 2 * a * a2;
    Int B = mod(a * u * b2 + a2 * v * b + w * ((b * b2 + D) / 2), m);
    if (mod(B - b, 2 * a) != 0 || mod(B - b2, 2 * a2) != 0
        || mod(B * B - D, 4 * a * a2) != 0)
        throw std::logic_error("composition middle coefficient failed its "
                               "congruences");
    return B;
}

Form dirichlet_compose(Form const & Q1, Form const & Q2, Level N)
{
    if (gcd(Q1.a * Q2.a, Int(N)) != 1)
        throw validation_error("composition needs gcd(aa', N) = 1 for "
                               + Q1.str() + " and " + Q2.str());
    Int const B = composition_middle(Q1, Q2);
    Int const aa = Q1.a * Q2.a;
    return {aa, B, (B * B - Q1.disc()) / (4 * aa)};
}

std::size_t FormClassGroup::inverse(std::size_t i) const
{
    for (std::size_t j = 0; j < order(); ++j)
        if (cayley[i][j] == identity)
            return j;
    throw std::logic_error("element without inverse");
}

std::size_t FormClassGroup::element_order(std::size_t i) const
{
    std::size_t k = 1;
    for (std::size_t x = i; x != identity; x = cayley[x][i])
        ++k;
    return k;
}

namespace {

/* Finds the class of a form among canonical representatives, grouped by
 * their SL_2(Z)-reduced form. */
class ClassLocator
{
    Level N;
    std::vector<Form> const & reps;
    std::map<Form, std::vector<std::size_t>> by_sl2;

    public:
    ClassLocator(std::vector<Form> const & r, Level n) : N(n), reps(r)
    {
        for (std::size_t i = 0; i < reps.size(); ++i)
            by_sl2[reduce_sl2(reps[i]).reduced].push_back(i);
    }

    std::size_t operator()(Form const & Q) const
    {
        auto it = by_sl2.find(reduce_sl2(Q).reduced);
        if (it != by_sl2.end())
            for (std::size_t i : it->second)
                if (equivalent_gamma0(Q, reps[i], N))
                    return i;
        throw validation_error("form " + Q.str() + " lies in no class of "
                               "C(D, Gamma_0(" + std::to_string(N) + "))");
    }
};

} // namespace

std::size_t FormClassGroup::index_of(Form const & Q) const
{
    if (gcd(Q.a, Int(N)) != 1 || Q.disc() != D)
        throw validation_error("form " + Q.str() + " is not in C("
                               + D.get_str() + ", Gamma_0("
                               + std::to_string(N) + "))");
    return ClassLocator(elements, N)(Q);
}

FormClassGroup class_group(Int const & D, Level N)
{
    require_valid_discriminant(D);
    if (N < 1)
        throw validation_error("level must be a positive integer");
    FormClassGroup G{D, N, {}, {}, {}, 0};
    for (Form const & f : gamma0_class_reps(D, N))
        if (gcd(f.a, Int(N)) == 1)
            G.elements.push_back(f);

    ClassLocator const locate(G.elements, N);
    std::size_t const n = G.elements.size();
    G.cayley.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Form const & q1 = G.elements[i];
        for (std::size_t j = 0; j < n; ++j) {
            Form q2 = prepare_coprime(G.elements[j], q1.a * N, N);
            G.cayley[i][j] = locate(dirichlet_compose(q1, q2, N));
        }
    }
    G.identity = locate(principal_form(D));
    G.invariant_factors = abelian_invariants(G.cayley, G.identity);
    return G;
}

std::vector<std::int64_t>
abelian_invariants(std::vector<std::vector<std::size_t>> const & cayley,
                   std::size_t identity)
{
    std::size_t const n = cayley.size();
    if (n <= 1)
        return {};
    std::vector<std::int64_t> orders(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t k = 1;
        for (std::size_t x = i; x != identity; x = cayley[x][i])
            ++k;
        orders[i] = k;
    }

    // For each prime q, the number of cyclic q-factors of order >= q^k is
    // log_q |G[q^k]| / |G[q^(k-1)]|.
    std::vector<std::vector<int>> exps; // per prime: exponents, descending
    std::vector<std::int64_t> primes = prime_divisors(
            static_cast<std::int64_t>(n));
    for (std::int64_t q : primes) {
        std::vector<int> count_at_least; // index k-1
        std::int64_t prev = 1;
        std::int64_t qk = 1;
        for (;;) {
            qk *= q;
            std::int64_t c = 0;
            for (std::int64_t o : orders)
                if (qk % o == 0)
                    ++c;
            if (c == prev)
                break;
            std::int64_t ratio = c / prev;
            int r = 0;
            while (ratio > 1) {
                ratio /= q;
                ++r;
            }
            count_at_least.push_back(r);
            prev = c;
        }
        std::vector<int> e;
        if (!count_at_least.empty()) {
            int factors = count_at_least.front();
            for (int i = 0; i < factors; ++i) {
                int ex = 0;
                for (int r : count_at_least)
                    if (r > i)
                        ++ex;
                e.push_back(ex);
            }
        }
        exps.push_back(e);
    }

    std::size_t rank = 0;
    for (auto const & e : exps)
        rank = std::max(rank, e.size());
    std::vector<std::int64_t> out(rank, 1);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t i = 0; i < exps[pi].size(); ++i)
            for (int k = 0; k < exps[pi][i]; ++k)
                out[rank - 1 - i] *= primes[pi];
    return out;
}

IsoReport verify_iso_with_scaled(Int const & D, Level N)
{
    FormClassGroup const left = class_group(D, N);
    FormClassGroup const right = class_group(D * N * N, 1);
    return {left.invariant_factors == right.invariant_factors,
            left.order(), right.order(), left.invariant_factors,
            right.invariant_factors};
}

} // namespace gammaforms
