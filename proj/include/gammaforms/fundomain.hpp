#ifndef GAMMAFORMS_FUNDOMAIN_HPP
#define GAMMAFORMS_FUNDOMAIN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gammaforms/forms.hpp"

/*
 * Fundamental region for Gamma_0(p), p >= 5 prime.
 *
 * The open region R is bounded by the lines Re = +-1/2 and the arcs
 * |tau - k/p| = 1/p, k in S_p = {+-1, ..., +-(p-1)/2}. The closed region
 * keeps one point of each orbit on the boundary:
 *   - the line Re = -1/2 (not +1/2) and never arc k = 1;
 *   - on an arc k with k^2 = -1 (mod p), the half with Re <= k/p;
 *   - on the other arcs, only arc k_(2) = min(k, -k^-1) of each glued pair;
 *   - among corner points (2k-1)/2p + i sqrt(3)/2p, the one with k = k_(3)
 *     unless k^2 - k + 1 = 0 (mod p).
 */
namespace gammaforms {

/* Checks p is a prime >= 5; throws validation_error. */
void require_prime_ge5(std::int64_t p);

/* S_p in the order -(p-1)/2, ..., -1, 1, ..., (p-1)/2. */
std::vector<std::int64_t> symmetric_residues(std::int64_t p);

/* <x>: the representative of x mod p in S_p. Throws if p | x. */
std::int64_t sym_residue(std::int64_t p, Int const & x);

/* x^-1 in S_p. Throws if p | x. */
std::int64_t sym_inverse(std::int64_t p, std::int64_t x);

/* gamma_k = (k, (k k^-1 - 1)/p; p, k^-1), an element of Gamma_0(p). */
GroupElement gamma_k(std::int64_t p, std::int64_t k);

struct EllipticData
{
    std::int64_t p;
    std::vector<std::int64_t> E2; // k^2 = -1 (mod p)
    std::vector<std::int64_t> E3; // k^2 - k + 1 = 0 (mod p)

    bool in_E2(std::int64_t k) const;
    bool in_E3(std::int64_t k) const;
    /* min(k, -k^-1) */
    std::int64_t k2(std::int64_t k) const;
    /* min over the orbit of k under k -> <1 - k^-1>; k != 1 */
    std::int64_t k3(std::int64_t k) const;
};

EllipticData elliptic_data(std::int64_t p);

/* (k, f(k), f(f(k))) with f(k) = <1 - k^-1>; rejects k = 1. */
std::array<std::int64_t, 3> orbit3(std::int64_t p, std::int64_t k);

/* Membership of a CM point in the closed region. */
bool contains(std::int64_t p, CmPoint const & t);

/* Corner point (2k - 1)/2p + i sqrt(3)/2p, encoded with D = -3. */
CmPoint corner_point(std::int64_t p, Int const & k);

struct Arc
{
    std::int64_t k;    // centre k/p
    Rational center;
    Rational radius;   // 1/p
    GroupElement gamma; // gamma_k, whose isometric circle this is
};

struct BoundaryInventory
{
    std::int64_t p;
    std::vector<Arc> arcs;
    std::vector<Rational> lines; // vertical lines Re = value
};

BoundaryInventory r_gamma0p_boundary(std::int64_t p);

/* Static SVG drawing of the region; integer pixel coordinates. */
std::string boundary_svg(BoundaryInventory const & inv);

} // namespace gammaforms

#endif
