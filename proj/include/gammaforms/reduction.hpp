#ifndef GAMMAFORMS_REDUCTION_HPP
#define GAMMAFORMS_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gammaforms/forms.hpp"

namespace gammaforms {

/* act(input, transform) == reduced. */
struct ReductionResult
{
    Form reduced;
    GroupElement transform;
};

/* Gauss reduction to |b| <= a <= c with b >= 0 when |b| = a or a = c. */
ReductionResult reduce_sl2(Form const & Q);
bool is_reduced_sl2(Form const & Q);

/* |b| <= a, |b| <= pc, and (|b| = a or |b| = pc) => b > 0; p in {2, 3}. */
bool is_reduced_gamma0_small(Form const & Q, Level p);

/* The seven Gamma_0(p)-reduction conditions for a prime p >= 5. */
bool is_reduced_gamma0_p(Form const & Q, Level p);

/* Levels with a fundamental region: 1, 2, 3 and primes >= 5. */
bool is_supported_level(Level N);

/* Dispatches on the level; throws unsupported_level otherwise. */
bool is_reduced(Form const & Q, Level N);

/* [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p). */
std::int64_t gamma0_index(Level N);

/*
 * Right cosets Gamma_0(N) g of SL_2(Z), one per point (c : d) of the
 * projective line over Z/N. g lies in Gamma_0(N) reps[i] exactly when its
 * bottom row is proportional to that of reps[i] modulo N.
 */
struct CosetSystem
{
    Level N;
    std::vector<GroupElement> reps;

    std::size_t index_of(GroupElement const & g) const;
};

CosetSystem coset_reps(Level N);

/* Proper automorphs of Q: solutions of t^2 - D u^2 = 4 mapped to
 * ((t - bu)/2, -cu; au, (t + bu)/2). The identity comes first. */
std::vector<GroupElement> automorphs(Form const & Q);

/* SL_2(Z)-reduced primitive forms of discriminant D, sorted. */
std::vector<Form> enumerate_sl2_reduced(Int const & D);

/* Gamma_0(N)-reduced primitive forms of discriminant D, sorted; one per
 * Gamma_0(N)-class. Throws unsupported_level for composite N > 3. */
std::vector<Form> enumerate_reduced(Int const & D, Level N);

/* gamma in Gamma_0(N) with act(Q1, gamma) == Q2, if any. */
std::optional<GroupElement>
equivalent_gamma0(Form const & Q1, Form const & Q2, Level N);

/*
 * The Gamma_0(N)-classes inside the SL_2(Z)-class of a reduced form R:
 * for each class, the translates act(R, g^-1) (g in the coset system) that
 * fall into it. Classes and members are sorted.
 */
std::vector<std::vector<Form>>
split_sl2_class(Form const & R, Level N, CosetSystem const & cosets);

/* One representative per Gamma_0(N)-class of discriminant D: the reduced
 * forms at supported levels, lexicographically least coset translates
 * otherwise. */
std::vector<Form> gamma0_class_reps(Int const & D, Level N);

/* Class representative of Q, identical for every form in its class. */
Form canonical_rep(Form const & Q, Level N);
Form canonical_rep(Form const & Q, Level N, CosetSystem const & cosets);

/* canonical_rep together with a witness in Gamma_0(N). */
ReductionResult reduce_gamma0(Form const & Q, Level N);

} // namespace gammaforms

#endif
