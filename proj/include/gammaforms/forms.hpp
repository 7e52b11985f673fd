#ifndef GAMMAFORMS_FORMS_HPP
#define GAMMAFORMS_FORMS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gammaforms/arith.hpp"

namespace gammaforms {

/* Level of a congruence subgroup Gamma_0(N). */
using Level = std::int64_t;

/*
 * Binary quadratic form a*x^2 + b*x*y + c*y^2 over the integers.
 * A plain value type: equality and ordering are coefficient-wise, and
 * ordering is lexicographic on (a, b, c).
 */
struct Form
{
    Int a, b, c;

    Form() = default;
    Form(Int a_, Int b_, Int c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_))
    {
    }

    Int disc() const { return b * b - 4 * a * c; }
    Int operator()(Int const & x, Int const & y) const
    {
        return a * x * x + b * x * y + c * y * y;
    }

    bool is_primitive() const;
    bool is_positive_definite() const { return a > 0 && sgn(disc()) < 0; }

    /* "a,b,c" */
    std::string str() const;
    /* Parses "a,b,c"; throws validation_error. */
    static Form parse(std::string_view text);

    friend bool operator==(Form const & x, Form const & y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend std::strong_ordering operator<=>(Form const & x, Form const & y);
};

std::ostream & operator<<(std::ostream & o, Form const & f);

/* Checked constructor for QF(D): positive definite and primitive. */
Form make_qf(Int a, Int b, Int c);

/* A discriminant of an order: negative and 0 or 1 mod 4. */
bool is_valid_discriminant(Int const & D);
void require_valid_discriminant(Int const & D);

/* Integer matrix (a b; c d) with determinant 1. */
struct GroupElement
{
    Int a, b, c, d;

    GroupElement() : a(1), b(0), c(0), d(1) {}
    GroupElement(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
          d(std::move(d_))
    {
    }

    static GroupElement identity() { return {}; }
    /* Checked constructor; throws validation_error unless ad - bc = 1. */
    static GroupElement make(Int a, Int b, Int c, Int d);

    Int det() const { return a * d - b * c; }
    GroupElement inverse() const { return {d, -b, -c, a}; }
    bool in_gamma0(Level N) const;

    std::string str() const;

    friend GroupElement operator*(GroupElement const & x,
                                  GroupElement const & y);
    friend bool operator==(GroupElement const & x, GroupElement const & y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

std::ostream & operator<<(std::ostream & o, GroupElement const & g);

/* Gamma_0(N) as a membership predicate. */
struct GammaLevel
{
    Level N;

    explicit GammaLevel(Level n);
    bool contains(GroupElement const & g) const { return g.in_gamma0(N); }
};

/*
 * The point (numB + sqrt(D)) / den of the upper half plane, D < 0, den > 0.
 * Geometry is exact: Re = numB/den and Im^2 = -D/den^2 are rationals.
 * The encoding is not unique; equality compares the point itself.
 */
struct CmPoint
{
    Int numB, den, D;

    CmPoint(Int numB_, Int den_, Int D_);

    Rational re() const;
    Rational im2() const;
    /* |tau - r|^2 */
    Rational dist2(Rational const & r) const;
    Rational abs2() const { return dist2(Rational(0)); }

    /* "(-b + sqrt(D))/(2a)" style rendering of this encoding. */
    std::string str() const;

    friend bool operator==(CmPoint const & x, CmPoint const & y);
};

/* Q . g, i.e. Q(a x + b y, c x + d y). A right action. */
Form act(Form const & Q, GroupElement const & g);

/* The root of Q(x, 1) = 0 in the upper half plane. Throws unless Q is
 * positive definite. */
CmPoint cm_point(Form const & Q);

/* The form with leading coefficient den/2 whose CM point is t, when that
 * form is integral (true for every point produced by cm_point). */
std::optional<Form> form_from_cm(CmPoint const & t);

/* g(t) = (a t + b)/(c t + d), computed from the rational geometry of t. */
CmPoint moebius(GroupElement const & g, CmPoint const & t);

/* g(r) for a cusp r; nullopt stands for infinity. */
std::optional<Rational> moebius(GroupElement const & g, Rational const & r);

/* Kronecker symbol (D/m). */
int kronecker(Int const & D, Int const & m);

/*
 * { Q(x, y) mod modulus : gcd(x, N) = 1, y = 0 mod N }, sorted.
 */
std::vector<std::int64_t>
representation_values(Form const & Q, Level N, std::int64_t modulus);

} // namespace gammaforms

#endif
