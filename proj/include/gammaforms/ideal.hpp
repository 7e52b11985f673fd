#ifndef GAMMAFORMS_IDEAL_HPP
#define GAMMAFORMS_IDEAL_HPP

#include <string>
#include <vector>

#include "gammaforms/forms.hpp"

namespace gammaforms {

/* The order of discriminant D with Z-basis (1, delta), delta = (D + sqrt D)/2,
 * so delta^2 = D delta - (D^2 - D)/4. */
struct QuadOrder
{
    Int D;

    explicit QuadOrder(Int D_);
    friend bool operator==(QuadOrder const &, QuadOrder const &) = default;
};

/* u + v delta */
struct OElement
{
    Int u, v;
    friend bool operator==(OElement const &, OElement const &) = default;
};

OElement multiply(QuadOrder const & O, OElement const & x, OElement const & y);
OElement conjugate(QuadOrder const & O, OElement const & x);

/*
 * scale * (Z (h11, 0) + Z (h12, h22)) in delta-coordinates, with
 * h11, h22 > 0 and 0 <= h12 < h11. Instances built through the functions
 * below are normalized so that gcd(h11, h12, h22) = 1; the content then
 * lives in the scale, which makes lattice equality plain field equality.
 */
struct OIdeal
{
    QuadOrder order;
    Int h11, h12, h22;
    Rational scale;

    /* The two basis elements, unscaled. */
    OElement first() const { return {h11, 0}; }
    OElement second() const { return {h12, h22}; }
    bool contains_unscaled(OElement const & x) const;

    std::string str() const;
    friend bool operator==(OIdeal const &, OIdeal const &) = default;
};

/* Z-span of the given integral elements, times scale. Throws
 * validation_error unless they span a rank-2 lattice. */
OIdeal from_generators(QuadOrder const & O, std::vector<OElement> const & gens,
                       Rational const & scale = Rational(1));

OIdeal whole_order(QuadOrder const & O);

/* Z a + Z (-b + sqrt D)/2, the ideal of norm a attached to Q. */
OIdeal ideal_from_form(Form const & Q);

/* Lattice spanned by the four products of basis elements. */
OIdeal ideal_mul(OIdeal const & I, OIdeal const & J);

OIdeal ideal_conjugate(OIdeal const & I);

/* h11 h22 scale^2 */
Rational ideal_norm(OIdeal const & I);

/* Stable under multiplication by delta. */
bool is_delta_stable(OIdeal const & I);

} // namespace gammaforms

#endif
