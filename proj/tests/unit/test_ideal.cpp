#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "gammaforms/classgroup.hpp"
#include "gammaforms/errors.hpp"
#include "gammaforms/ideal.hpp"

using namespace gammaforms;

namespace {

// Index of the lattice spanned by vectors: gcd of all 2x2 minors.
Int minor_gcd(std::vector<OElement> const & v)
{
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            g = gcd(g, v[i].u * v[j].v - v[i].v * v[j].u);
    return g;
}

std::vector<OElement> products(OIdeal const & I, OIdeal const & J)
{
    std::vector<OElement> out;
    for (auto const & x : {I.first(), I.second()})
        for (auto const & y : {J.first(), J.second()}) {
            OElement p = multiply(I.order, x, y);
            Rational s = I.scale * J.scale; // integral for integral ideals
            s.canonicalize();
            REQUIRE(s.get_den() == 1);
            out.push_back({p.u * s.get_num(), p.v * s.get_num()});
        }
    return out;
}

bool contains_scaled(OIdeal const & I, OElement const & x)
{
    Rational s = I.scale;
    REQUIRE(s.get_den() == 1);
    Int k = s.get_num();
    if (mod(x.u, k) != 0 || mod(x.v, k) != 0)
        return false;
    return I.contains_unscaled({x.u / k, x.v / k});
}

} // namespace

TEST_CASE("multiplication in the order")
{
    QuadOrder O(Int(-4)); // delta = -2 + i, delta^2 = -4 delta - 5
    OElement d{0, 1};
    CHECK(multiply(O, d, d) == OElement{-5, -4});
    CHECK(conjugate(O, d) == OElement{-4, -1}); // -2 - i
    CHECK(multiply(O, d, conjugate(O, d)) == OElement{5, 0});
    CHECK_THROWS_AS(QuadOrder(Int(-5)), validation_error);
}

TEST_CASE("ideals of forms")
{
    QuadOrder O(Int(-4));
    CHECK(ideal_from_form(Form(1, 0, 1)) == whole_order(O));
    CHECK(ideal_norm(ideal_from_form(Form(1, 0, 1))) == 1);
    OIdeal two = ideal_from_form(Form(2, 0, 1));
    CHECK(ideal_norm(two) == 2);
    CHECK(two.h11 == 2);
    CHECK(two.h22 == 1);
    CHECK(ideal_norm(ideal_from_form(Form(2, 2, 1))) == 2);
    CHECK_THROWS_AS(ideal_from_form(Form(1, 3, 1)), validation_error);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        long D = -3 - static_cast<long>(rng() % 200);
        if (!is_valid_discriminant(Int(D)))
            continue;
        Form Q = oracle::random_form(rng, D, 3);
        OIdeal I = ideal_from_form(Q);
        CHECK(ideal_norm(I) == Q.a);
        CHECK(is_delta_stable(I));
        CHECK(minor_gcd({{Q.a, 0}, {(-Q.b - D) / 2, 1}}) == Q.a);
    }
}

TEST_CASE("from_generators")
{
    QuadOrder O(Int(-20));
    OIdeal I = from_generators(O, {{6, 0}, {4, 2}, {10, 8}});
    CHECK(I.h12 < I.h11);
    CHECK(gcd(gcd(I.h11, I.h12), I.h22) == 1);
    CHECK(I.scale == 2);
    CHECK(ideal_norm(I) == minor_gcd({{6, 0}, {4, 2}, {10, 8}}));
    CHECK_THROWS_AS(from_generators(O, {{2, 1}, {4, 2}}), validation_error);
    CHECK_THROWS_AS(from_generators(O, {{1, 0}, {0, 1}}, Rational(-1)),
                    validation_error);
}

TEST_CASE("ideal products against a minor-gcd oracle")
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        long D = -3 - static_cast<long>(rng() % 150);
        if (!is_valid_discriminant(Int(D)))
            continue;
        OIdeal I = ideal_from_form(oracle::random_form(rng, D, 2));
        OIdeal J = ideal_from_form(oracle::random_form(rng, D, 2));
        OIdeal P = ideal_mul(I, J);
        auto gens = products(I, J);
        CHECK(ideal_norm(P) == minor_gcd(gens));
        for (auto const & g : gens)
            CHECK(contains_scaled(P, g));
        CHECK(is_delta_stable(P));
        CHECK(ideal_mul(I, whole_order(I.order)) == I);
        CHECK(ideal_mul(I, J) == ideal_mul(J, I));
        if (gcd(I.h11, J.h11) == 1)
            CHECK(ideal_norm(P) == ideal_norm(I) * ideal_norm(J));
    }
}

TEST_CASE("conjugation law")
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        long D = -3 - static_cast<long>(rng() % 150);
        if (!is_valid_discriminant(Int(D)))
            continue;
        Form Q = oracle::random_form(rng, D, 3);
        OIdeal I = ideal_from_form(Q);
        OIdeal Ibar = ideal_from_form(Form(Q.a, -Q.b, Q.c));
        CHECK(ideal_conjugate(I) == Ibar);
        OIdeal P = ideal_mul(I, Ibar);
        OIdeal expect = whole_order(I.order);
        expect.scale = Q.a;
        CHECK(P == expect);
        CHECK(ideal_norm(P) == ideal_norm(I) * ideal_norm(I));
    }
}

TEST_CASE("lattice identity for Dirichlet composition")
{
    // With gcd(a, a') = 1, (Z a + Z Delta)(Z a' + Z Delta) = Z aa' + Z Delta.
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 300) {
        long D = -3 - static_cast<long>(rng() % 300);
        if (!is_valid_discriminant(Int(D)))
            continue;
        Form f = oracle::random_form(rng, D, 2);
        Form g = oracle::random_form(rng, D, 2);
        if (gcd(f.a, g.a) != 1)
            continue;
        Form h = dirichlet_compose(f, g, 1);
        CHECK(ideal_mul(ideal_from_form(f), ideal_from_form(g))
              == ideal_from_form(h));
        ++done;
    }
}

TEST_CASE("composition agrees with ideal multiplication on class groups")
{
    for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -19L, -20L, -23L, -24L})
        for (long N : {1L, 2L, 3L, 5L, 7L}) {
            if (-D * N * N > 2000)
                continue;
            FormClassGroup G = class_group(Int(D), N);
            if (G.order() > 30)
                continue;
            for (Form const & q1 : G.elements)
                for (Form const & q2 : G.elements) {
                    Form p2 = prepare_coprime(q2, q1.a * N, N);
                    CHECK(ideal_mul(ideal_from_form(q1), ideal_from_form(p2))
                          == ideal_from_form(dirichlet_compose(q1, p2, N)));
                }
        }
}
