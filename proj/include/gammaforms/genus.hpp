#ifndef GAMMAFORMS_GENUS_HPP
#define GAMMAFORMS_GENUS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gammaforms/forms.hpp"
#include "gammaforms/ideal.hpp"

namespace gammaforms {

struct Representation
{
    Int x, y, m;
    bool proper = false;     // gcd(x, y) = 1
    bool admissible = false; // gcd(x, N) = 1 and N | y

    friend bool operator==(Representation const &,
                           Representation const &) = default;
};

/* All (x, y) with Q(x, y) = m, sorted by (x < 0, y < 0, |x|, |y|). */
std::vector<Representation> find_representations(Form const & Q,
                                                 Int const & m, Level N);

/* Like find_representations, keeping only N-admissible solutions. */
std::vector<Representation> n_representations(Form const & Q, Int const & m,
                                              Level N);

/* act(Q, (x, -v; y, u)) with xu + yv = 1, translated so that b lies in
 * (-m, m]. Requires a proper N-admissible representation. */
Form form_from_representation(Form const & Q, Representation const & r,
                              Level N);

/* m x^2 + b xy + c y^2 of discriminant D with the least b >= 0, if D is a
 * square modulo 4m. m odd, positive and prime to D. */
std::optional<Form> exists_representing_form(Int const & D, Int const & m,
                                             Level N);

struct GenusAssignment
{
    Form form;
    std::size_t coset;
};

/*
 * Genus data modulo |D|. cosets[0] is H; the others are its translates in
 * ker(chi), ordered by least element. Every residue list is sorted.
 */
struct GenusTable
{
    Int D;
    Level N;
    std::vector<std::int64_t> ker_chi;
    std::vector<std::int64_t> H;
    std::vector<std::vector<std::int64_t>> cosets;
    std::vector<GenusAssignment> assignment;

    std::int64_t modulus() const;
    /* Index of the coset holding the residue r, if any. */
    std::optional<std::size_t> coset_of(std::int64_t r) const;
};

GenusTable genus_table(Int const & D, Level N);

/* Coset of the unit values a form N-represents modulo |D|. Throws
 * std::logic_error if they straddle cosets. */
std::size_t form_coset(GenusTable const & T, Form const & Q);

struct PrimeClassification
{
    std::int64_t p;
    int kronecker;
    bool represented; // kronecker == 1
    std::optional<std::size_t> coset;
    std::optional<Form> witness;
    std::optional<Representation> witness_rep;
};

/* Odd prime p not dividing D. The witness is the first class
 * representative, in sorted order, that N-represents p. */
PrimeClassification classify_prime(std::int64_t p, Int const & D, Level N);
PrimeClassification classify_prime(std::int64_t p, GenusTable const & T);

/* Unit residues mod |D| of x^2 (and x^2 + m when D = -4m and N is odd),
 * x prime to N. */
std::vector<std::int64_t> principal_genus_congruences(Int const & D, Level N);

/* Least m prime to nN with a proper N-admissible representation. */
std::pair<Int, Representation> coprime_value(Form const & Q, Int const & n,
                                             Level N);

/*
 * Checks (a x^2 + 2b xy + c y^2)(a z^2 + 2b zw + c w^2)
 *      = (a xz + b xw + b yz + c yw)^2 + m (xw - yz)^2,  m = ac - b^2,
 * by polynomial expansion and on random points, plus the N-admissibility
 * of the product representation when gcd(a, N) = 1.
 */
bool brahmagupta_check(Int const & a, Int const & b, Int const & c, Level N,
                       int samples, std::uint64_t seed);

/* d (Z a' + Z (-b' + sqrt D)/2) with d = gcd(x, y), a' = m / d^2, of norm m. */
OIdeal ideal_of_norm_from_representation(Form const & Q,
                                         Representation const & r, Level N);

} // namespace gammaforms

#endif
