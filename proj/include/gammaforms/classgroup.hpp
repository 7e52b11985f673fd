#ifndef GAMMAFORMS_CLASSGROUP_HPP
#define GAMMAFORMS_CLASSGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gammaforms/forms.hpp"

namespace gammaforms {

/* x^2 - (D/4) y^2 or x^2 + xy + ((1 - D)/4) y^2. */
Form principal_form(Int const & D);

/* act(Q, gamma) for some gamma in Gamma_0(N) with gcd(leading coefficient,
 * M) = 1, searching first columns (x, y), N | y, gcd(x, y) = 1, by
 * increasing max(|x|, |y|). The identity wins whenever it works. */
struct PreparedForm
{
    Form form;
    GroupElement transform;
};
PreparedForm prepare_coprime_with_witness(Form const & Q, Int const & M,
                                          Level N);
Form prepare_coprime(Form const & Q, Int const & M, Level N);

/* The B of the composition: B = b (mod 2a), B = b' (mod 2a'),
 * B^2 = D (mod 4aa'), least in [0, 2aa'). Needs gcd(a, a', (b+b')/2) = 1. */
Int composition_middle(Form const & Q1, Form const & Q2);

/* Dirichlet composition aa' x^2 + B xy + (B^2 - D)/(4aa') y^2. Needs the
 * gcd condition above and gcd(aa', N) = 1. */
Form dirichlet_compose(Form const & Q1, Form const & Q2, Level N);

/*
 * C(D, Gamma_0(N)): classes of primitive forms of discriminant D with
 * gcd(a, N) = 1. elements[i] is the canonical representative of class i,
 * cayley[i][j] the index of the product class.
 */
struct FormClassGroup
{
    Int D;
    Level N;
    std::vector<Form> elements;
    std::vector<std::vector<std::size_t>> cayley;
    std::vector<std::int64_t> invariant_factors; // d1 | d2 | ...
    std::size_t identity = 0;

    std::size_t order() const { return elements.size(); }
    std::size_t inverse(std::size_t i) const;
    std::size_t element_order(std::size_t i) const;
    /* Index of the class containing Q; throws if Q is not admissible. */
    std::size_t index_of(Form const & Q) const;
};

FormClassGroup class_group(Int const & D, Level N);

/* Invariant factors of a finite abelian group given by its table. Ascending,
 * each dividing the next; empty for the trivial group. */
std::vector<std::int64_t>
abelian_invariants(std::vector<std::vector<std::size_t>> const & cayley,
                   std::size_t identity);

struct IsoReport
{
    bool isomorphic;
    std::size_t order_level;  // |C(D, Gamma_0(N))|
    std::size_t order_scaled; // |C(D N^2)|
    std::vector<std::int64_t> factors_level;
    std::vector<std::int64_t> factors_scaled;
};

/* Compares C(D, Gamma_0(N)) with C(D N^2) as abstract abelian groups. */
IsoReport verify_iso_with_scaled(Int const & D, Level N);

} // namespace gammaforms

#endif
