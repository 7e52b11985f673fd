#include "gammaforms/ideal.hpp"

#include <sstream>

#include "gammaforms/errors.hpp"

namespace gammaforms {

QuadOrder::QuadOrder(Int D_) : D(std::move(D_))
{
    require_valid_discriminant(D);
}

OElement multiply(QuadOrder const & O, OElement const & x, OElement const & y)
{
    Int const & D = O.D;
    Int const norm_delta = (D * D - D) / 4;
    Int const vv = x.v * y.v;
    return {x.u * y.u - vv * norm_delta, x.u * y.v + x.v * y.u + D * vv};
}

OElement conjugate(QuadOrder const & O, OElement const & x)
{
    // conj(delta) = D - delta
    return {x.u + x.v * O.D, -x.v};
}

bool OIdeal::contains_unscaled(OElement const & x) const
{
    if (mod(x.v, h22) != 0)
        return false;
    Int t = x.v / h22;
    return mod(x.u - t * h12, h11) == 0;
}

std::string OIdeal::str() const
{
    std::ostringstream o;
    o << "[" << h11 << ", 0; " << h12 << ", " << h22 << "]";
    if (scale != 1)
        o << " * " << scale;
    return o.str();
}

OIdeal from_generators(QuadOrder const & O, std::vector<OElement> const & gens,
                       Rational const & scale)
{
    if (scale <= 0)
        throw validation_error("ideal scale must be positive");
    // Column operations on delta-coordinates: fold every v into one
    // generator, then the remaining u's give the rank-one part.
    std::vector<OElement> g = gens;
    OElement top{0, 0};
    for (OElement & e : g) {
        if (e.v == 0)
            continue;
        if (top.v == 0) {
            top = e;
            e = {0, 0};
            continue;
        }
        ext_gcd_result r = ext_gcd(top.v, e.v);
        Int const p = top.v / r.g;
        Int const q = e.v / r.g;
        OElement next{r.s * top.u + r.t * e.u, r.g};
        // (q top - p e) has v = 0
        e = {q * top.u - p * e.u, 0};
        top = next;
    }
    Int h11 = 0;
    for (OElement const & e : g)
        h11 = gcd(h11, e.u);
    if (h11 == 0 || top.v == 0)
        throw validation_error("generators do not span a rank-2 lattice");
    if (top.v < 0)
        top = {-top.u, -top.v};
    OIdeal I{O, h11, mod(top.u, h11), top.v, scale};
    Int const content = gcd(gcd(I.h11, I.h12), I.h22);
    if (content != 1) {
        I.h11 /= content;
        I.h12 /= content;
        I.h22 /= content;
        I.scale *= content;
        I.scale.canonicalize();
    }
    return I;
}

OIdeal whole_order(QuadOrder const & O)
{
    return {O, 1, 0, 1, Rational(1)};
}

OIdeal ideal_from_form(Form const & Q)
{
    if (!Q.is_positive_definite())
        throw validation_error("form " + Q.str() + " is not positive definite");
    QuadOrder O(Q.disc());
    // (-b + sqrt D)/2 = (-b - D)/2 + delta
    return from_generators(O, {{Q.a, 0}, {(-Q.b - O.D) / 2, 1}});
}

OIdeal ideal_mul(OIdeal const & I, OIdeal const & J)
{
    if (!(I.order == J.order))
        throw validation_error("ideals of different orders");
    std::vector<OElement> prods;
    for (OElement const & x : {I.first(), I.second()})
        for (OElement const & y : {J.first(), J.second()})
            prods.push_back(multiply(I.order, x, y));
    Rational s = I.scale * J.scale;
    s.canonicalize();
    return from_generators(I.order, prods, s);
}

OIdeal ideal_conjugate(OIdeal const & I)
{
    return from_generators(I.order,
                           {conjugate(I.order, I.first()),
                            conjugate(I.order, I.second())},
                           I.scale);
}

Rational ideal_norm(OIdeal const & I)
{
    Rational n = Rational(I.h11 * I.h22) * I.scale * I.scale;
    n.canonicalize();
    return n;
}

bool is_delta_stable(OIdeal const & I)
{
    OElement const delta{0, 1};
    return I.contains_unscaled(multiply(I.order, I.first(), delta))
           && I.contains_unscaled(multiply(I.order, I.second(), delta));
}

} // namespace gammaforms
