#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "gammaforms/classgroup.hpp"
#include "gammaforms/errors.hpp"
#include "gammaforms/genus.hpp"
#include "gammaforms/reduction.hpp"

using namespace gammaforms;
using V = std::vector<std::int64_t>;

namespace {

bool has_rep(std::vector<Representation> const & v, long x, long y)
{
    return std::any_of(v.begin(), v.end(), [&](Representation const & r) {
        return r.x == x && r.y == y;
    });
}

std::vector<std::pair<long, long>> grid()
{
    std::vector<std::pair<long, long>> g;
    for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L, -23L, -24L})
        for (long N : {1L, 2L, 3L, 5L, 7L})
            if (-D * N * N <= 2000)
                g.emplace_back(D, N);
    return g;
}

} // namespace

TEST_CASE("find_representations examples")
{
    auto r = find_representations(Form(7, 0, 1), Int(23), 2);
    for (long x : {1L, -1L})
        for (long y : {4L, -4L})
            CHECK(has_rep(r, x, y));
    CHECK(r.front().x == 1);
    CHECK(r.front().y == 4);
    CHECK(r.front().proper);
    CHECK(r.front().admissible);

    auto s = find_representations(Form(1, 0, 7), Int(253), 2);
    CHECK(has_rep(s, 1, 6));
    CHECK(has_rep(s, -1, -6));

    CHECK(find_representations(Form(1, 0, 1), Int(3), 1).empty());
    CHECK(find_representations(Form(1, 0, 1), Int(0), 1).size() == 1);
    CHECK_THROWS_AS(find_representations(Form(1, 0, 1), Int(-1), 1),
                    validation_error);
}

TEST_CASE("find_representations is complete")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        long D = -3 - static_cast<long>(rng() % 60);
        if (!is_valid_discriminant(Int(D)))
            continue;
        Form Q = oracle::random_form(rng, D, 1);
        long N = 1 + static_cast<long>(rng() % 4);
        for (long m = 0; m < 60; ++m) {
            // 4a Q(x, y) = (2ax + by)^2 + |D| y^2 bounds |y|, and
            // symmetrically |x|; one extra step guards the rounding
            long const a = Q.a.get_si(), b = Q.b.get_si(), c = Q.c.get_si();
            long const ymax = std::lround(std::sqrt(4.0 * a * m / -D)) + 1;
            long const xmax = std::lround(std::sqrt(4.0 * c * m / -D)) + 1;
            std::set<std::pair<long, long>> brute;
            for (long x = -xmax; x <= xmax; ++x)
                for (long y = -ymax; y <= ymax; ++y)
                    if (a * x * x + b * x * y + c * y * y == m)
                        brute.insert({x, y});
            auto reps = find_representations(Q, Int(m), N);
            std::set<std::pair<long, long>> got;
            for (auto const & r : reps) {
                got.insert({r.x.get_si(), r.y.get_si()});
                CHECK(r.proper == (gcd(r.x, r.y) == 1));
                CHECK(r.admissible
                      == (gcd(r.x, Int(N)) == 1 && mod(r.y, Int(N)) == 0));
            }
            CHECK(got == brute);
        }
    }
}

TEST_CASE("form_from_representation")
{
    Form Q(3, 2, 5);
    Representation id{1, 0, 3, true, true};
    CHECK(form_from_representation(Q, id, 4) == Q);

    Representation r{1, 4, 23, true, true};
    Form F = form_from_representation(Form(7, 0, 1), r, 2);
    CHECK(F.a == 23);
    CHECK(F.b * F.b - 92 * F.c == -28);
    CHECK(equivalent_gamma0(Form(7, 0, 1), F, 2).has_value());

    CHECK_THROWS_AS(form_from_representation(Form(7, 0, 1),
                                             {2, 0, 28, false, false}, 1),
                    validation_error);
    CHECK_THROWS_AS(form_from_representation(Form(7, 0, 1),
                                             {1, 1, 8, true, false}, 2),
                    validation_error);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        long N = 1 + static_cast<long>(rng() % 6);
        Form P = oracle::random_form(rng, -71, 2);
        for (long m = 1; m < 200; ++m) {
            auto reps = n_representations(P, Int(m), N);
            for (auto const & rep : reps) {
                if (!rep.proper)
                    continue;
                Form G = form_from_representation(P, rep, N);
                CHECK(G.a == m);
                CHECK(equivalent_gamma0(P, G, N).has_value());
            }
            if (!reps.empty())
                break;
        }
    }
}

TEST_CASE("exists_representing_form")
{
    auto f = exists_representing_form(Int(-28), Int(23), 2);
    REQUIRE(f.has_value());
    CHECK(f->a == 23);
    CHECK(f->disc() == -28);
    CHECK_FALSE(exists_representing_form(Int(-28), Int(3), 2).has_value());
    CHECK(exists_representing_form(Int(-4), Int(5), 1) == Form(5, 4, 1));
    CHECK_THROWS_AS(exists_representing_form(Int(-4), Int(6), 1),
                    validation_error);
    CHECK_THROWS_AS(exists_representing_form(Int(-28), Int(7), 1),
                    validation_error);
    // agrees with the Kronecker symbol for primes
    for (long D : {-3L, -20L, -23L, -84L})
        for (long p : oracle::primes_below(300)) {
            if (p == 2 || D % p == 0)
                continue;
            auto g = exists_representing_form(Int(D), Int(p), 1);
            CHECK(g.has_value() == (oracle::kronecker(D, p) == 1));
            if (g)
                CHECK(g->is_primitive());
        }
}

TEST_CASE("genus table for D = -28, N = 2")
{
    GenusTable T = genus_table(Int(-28), 2);
    CHECK(T.ker_chi == V{1, 9, 11, 15, 23, 25});
    CHECK(T.H == V{1, 9, 25});
    REQUIRE(T.cosets.size() == 2);
    CHECK(T.cosets[0] == V{1, 9, 25});
    CHECK(T.cosets[1] == V{11, 15, 23});
    REQUIRE(T.assignment.size() == 2);
    CHECK(T.assignment[0].form == Form(1, 0, 7));
    CHECK(T.assignment[0].coset == 0);
    CHECK(T.assignment[1].form == Form(7, 0, 1));
    CHECK(T.assignment[1].coset == 1);

    GenusTable U = genus_table(Int(-4), 1);
    CHECK(U.ker_chi == V{1});
    CHECK(U.H == V{1});
    CHECK(U.cosets.size() == 1);
}

TEST_CASE("genus table structure on the grid")
{
    for (auto [D, N] : grid()) {
        GenusTable T = genus_table(Int(D), N);
        std::int64_t M = -D;
        // ker(chi) from the oracle symbol
        V ker;
        for (long r = 1; r <= M; ++r)
            if (oracle::gcd64(r, M) == 1 && oracle::kronecker(D, r) == 1)
                ker.push_back(r % M);
        std::sort(ker.begin(), ker.end());
        CHECK(T.ker_chi == ker);
        // H is a subgroup
        for (auto x : T.H)
            for (auto y : T.H)
                CHECK(std::binary_search(T.H.begin(), T.H.end(), x * y % M));
        // cosets partition ker(chi)
        V all;
        for (auto const & c : T.cosets) {
            CHECK(c.size() == T.H.size());
            all.insert(all.end(), c.begin(), c.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == T.ker_chi);
        // values of each form are stable under multiplication by H
        for (auto const & g : T.assignment) {
            std::set<std::int64_t> vals;
            for (auto v : representation_values(g.form, N, M))
                if (oracle::gcd64(v, M) == 1)
                    vals.insert(v);
            for (auto v : vals)
                for (auto h : T.H)
                    CHECK(vals.count(v * h % M));
        }
        CHECK(principal_genus_congruences(Int(D), N) == T.H);
    }
}

TEST_CASE("principal genus congruences")
{
    CHECK(principal_genus_congruences(Int(-28), 2) == V{1, 9, 25});
    CHECK(principal_genus_congruences(Int(-28), 1) == V{1, 9, 11, 15, 23, 25});
    CHECK(principal_genus_congruences(Int(-7), 1) == V{1, 2, 4});
    for (long D = -3; D >= -120; --D) {
        if (!is_valid_discriminant(Int(D)))
            continue;
        for (long N : {1L, 2L, 3L, 4L, 5L, 6L})
            CHECK(principal_genus_congruences(Int(D), N)
                  == genus_table(Int(D), N).H);
    }
}

TEST_CASE("classify_prime")
{
    PrimeClassification c = classify_prime(23, Int(-28), 2);
    CHECK(c.represented);
    CHECK(c.kronecker == 1);
    CHECK(*c.coset == 1);
    CHECK(*c.witness == Form(7, 0, 1));
    CHECK(c.witness_rep->x == 1);
    CHECK(c.witness_rep->y == 4);

    PrimeClassification d = classify_prime(37, Int(-28), 2);
    CHECK(*d.coset == 0);
    CHECK(*d.witness == Form(1, 0, 7));
    CHECK(d.witness_rep->x == 3);
    CHECK(d.witness_rep->y == 2);

    PrimeClassification e = classify_prime(3, Int(-28), 2);
    CHECK_FALSE(e.represented);
    CHECK(e.kronecker == -1);

    CHECK_THROWS_AS(classify_prime(7, Int(-28), 2), validation_error);
    CHECK_THROWS_AS(classify_prime(2, Int(-7), 1), validation_error);
    CHECK_THROWS_AS(classify_prime(9, Int(-7), 1), validation_error);
}

TEST_CASE("prime representation theorem on the grid, p < 500")
{
    for (auto [D, N] : grid()) {
        GenusTable T = genus_table(Int(D), N);
        auto reps = enumerate_reduced(Int(D), N);
        for (long p : oracle::primes_below(500)) {
            if (p == 2 || D % p == 0)
                continue;
            bool rep = false;
            for (Form const & f : reps) {
                auto r = n_representations(f, Int(p), N);
                if (r.empty())
                    continue;
                rep = true;
                if (N % p == 0)
                    continue; // witnesses carry p | a and no genus
                auto coset = T.coset_of(p);
                REQUIRE(coset.has_value());
                CHECK(form_coset(T, f) == *coset);
            }
            CHECK_MESSAGE(rep == (oracle::kronecker(D, p) == 1),
                          "D=" << D << " N=" << N << " p=" << p);
            PrimeClassification c = classify_prime(p, T);
            CHECK(c.represented == rep);
            if (rep && N % p != 0)
                CHECK(c.witness.has_value());
        }
    }
}

TEST_CASE("coprime_value")
{
    auto [m1, r1] = coprime_value(Form(1, 0, 1), Int(1), 1);
    CHECK(m1 == 1);
    CHECK(r1.x == 1);
    CHECK(r1.y == 0);
    auto [m2, r2] = coprime_value(Form(1, 0, 7), Int(14), 2);
    CHECK(m2 == 1);
    auto [m3, r3] = coprime_value(Form(7, 0, 1), Int(14), 2);
    CHECK(m3 == 11);
    CHECK(r3.x == 1);
    CHECK(r3.y == 2);
    CHECK_THROWS_AS(coprime_value(Form(2, 2, 1), Int(1), 2), validation_error);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        long N = 1 + static_cast<long>(rng() % 7);
        Form Q = oracle::random_form(rng, -87, 2);
        if (gcd(Q.a, Int(N)) != 1)
            continue;
        Int n = 1 + static_cast<long>(rng() % 30);
        auto [m, r] = coprime_value(Q, n, N);
        CHECK(gcd(m, n * N) == 1);
        CHECK(Q(r.x, r.y) == m);
        CHECK(r.proper);
        CHECK(r.admissible);
    }
}

TEST_CASE("product identity for forms of discriminant -4m")
{
    CHECK(23 * 23 == (7 - 16) * (7 - 16) + 7 * 64);
    CHECK(brahmagupta_check(7, 0, 1, 2, 50, 1));
    CHECK(brahmagupta_check(1, 0, 1, 1, 0, 1));
    std::mt19937_64 rng(44);
    int done = 0;
    while (done < 20) {
        long a = 1 + static_cast<long>(rng() % 30);
        long b = static_cast<long>(rng() % 40) - 20;
        long c = 1 + static_cast<long>(rng() % 30);
        if (a * c - b * b <= 0)
            continue;
        long N = 1 + static_cast<long>(rng() % 6);
        CHECK(brahmagupta_check(a, b, c, N, 40, rng()));
        ++done;
    }
    CHECK_THROWS_AS(brahmagupta_check(1, 2, 1, 1, 1, 1), validation_error);
}

TEST_CASE("ideal of norm m from a representation")
{
    OIdeal I = ideal_of_norm_from_representation(Form(1, 0, 1), {1, 0, 1}, 1);
    CHECK(I == whole_order(QuadOrder(Int(-4))));
    OIdeal J = ideal_of_norm_from_representation(Form(7, 0, 1), {1, 4, 23}, 2);
    CHECK(ideal_norm(J) == 23);
    CHECK_THROWS_AS(ideal_of_norm_from_representation(Form(7, 0, 1),
                                                      {1, 3, 16}, 2),
                    validation_error);

    std::mt19937_64 rng(45);
    int done = 0;
    while (done < 100) {
        long N = 1 + static_cast<long>(rng() % 5);
        Form Q = oracle::random_form(rng, -56, 2);
        long x = static_cast<long>(rng() % 21) - 10;
        long y = N * (static_cast<long>(rng() % 7) - 3);
        if (oracle::gcd64(x, N) != 1 || (x == 0 && y == 0))
            continue;
        Representation r{x, y, Q(Int(x), Int(y))};
        OIdeal K = ideal_of_norm_from_representation(Q, r, N);
        CHECK(ideal_norm(K) == r.m);
        CHECK(is_delta_stable(K));
        ++done;
    }
}
