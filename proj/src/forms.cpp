#include "gammaforms/forms.hpp"

#include <algorithm>
#include <sstream>

#include "gammaforms/errors.hpp"

namespace gammaforms {

namespace {

std::strong_ordering cmp_int(Int const & x, Int const & y)
{
    int r = cmp(x, y);
    if (r < 0)
        return std::strong_ordering::less;
    if (r > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

bool Form::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

std::string Form::str() const
{
    return a.get_str() + "," + b.get_str() + "," + c.get_str();
}

Form Form::parse(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw validation_error("form must be 'a,b,c', got '"
                               + std::string(text) + "'");
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ')
            v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ')
            v.remove_suffix(1);
        return v;
    };
    return {parse_int(trim(parts[0])), parse_int(trim(parts[1])),
            parse_int(trim(parts[2]))};
}

std::strong_ordering operator<=>(Form const & x, Form const & y)
{
    if (auto r = cmp_int(x.a, y.a); r != 0)
        return r;
    if (auto r = cmp_int(x.b, y.b); r != 0)
        return r;
    return cmp_int(x.c, y.c);
}

std::ostream & operator<<(std::ostream & o, Form const & f)
{
    return o << "(" << f.a << "," << f.b << "," << f.c << ")";
}

Form make_qf(Int a, Int b, Int c)
{
    Form f(std::move(a), std::move(b), std::move(c));
    if (!f.is_positive_definite())
        throw validation_error("form " + f.str()
                               + " is not positive definite");
    if (!f.is_primitive())
        throw validation_error("form " + f.str() + " is not primitive");
    return f;
}

bool is_valid_discriminant(Int const & D)
{
    if (sgn(D) >= 0)
        return false;
    Int r = mod(D, Int(4));
    return r == 0 || r == 1;
}

void require_valid_discriminant(Int const & D)
{
    if (!is_valid_discriminant(D))
        throw validation_error("discriminant " + D.get_str()
                               + " must be negative and 0 or 1 mod 4");
}

GroupElement GroupElement::make(Int a, Int b, Int c, Int d)
{
    GroupElement g(std::move(a), std::move(b), std::move(c), std::move(d));
    if (g.det() != 1)
        throw validation_error("matrix " + g.str()
                               + " does not have determinant 1");
    return g;
}

bool GroupElement::in_gamma0(Level N) const
{
    return mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(N))
           != 0;
}

std::string GroupElement::str() const
{
    return "(" + a.get_str() + "," + b.get_str() + ";" + c.get_str() + ","
           + d.get_str() + ")";
}

GroupElement operator*(GroupElement const & x, GroupElement const & y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream & operator<<(std::ostream & o, GroupElement const & g)
{
    return o << g.str();
}

GammaLevel::GammaLevel(Level n) : N(n)
{
    if (N < 1)
        throw validation_error("level must be a positive integer");
}

CmPoint::CmPoint(Int numB_, Int den_, Int D_)
    : numB(std::move(numB_)), den(std::move(den_)), D(std::move(D_))
{
    if (sgn(den) <= 0)
        throw validation_error("CM point denominator must be positive");
    if (sgn(D) >= 0)
        throw validation_error("CM point needs a negative discriminant");
}

Rational CmPoint::re() const
{
    Rational r(numB, den);
    r.canonicalize();
    return r;
}

Rational CmPoint::im2() const
{
    Rational r(-D, den * den);
    r.canonicalize();
    return r;
}

Rational CmPoint::dist2(Rational const & r) const
{
    Rational dx = re() - r;
    return dx * dx + im2();
}

std::string CmPoint::str() const
{
    return "(" + numB.get_str() + " + sqrt(" + D.get_str() + "))/"
           + den.get_str();
}

bool operator==(CmPoint const & x, CmPoint const & y)
{
    return x.re() == y.re() && x.im2() == y.im2();
}

Form act(Form const & Q, GroupElement const & g)
{
    // Q(a x + b y, c x + d y) expanded.
    Int A = Q(g.a, g.c);
    Int C = Q(g.b, g.d);
    Int B = 2 * Q.a * g.a * g.b + Q.b * (g.a * g.d + g.b * g.c)
            + 2 * Q.c * g.c * g.d;
    return {A, B, C};
}

CmPoint cm_point(Form const & Q)
{
    if (!Q.is_positive_definite())
        throw validation_error("cm_point needs a positive definite form, got "
                               + Q.str());
    return {-Q.b, 2 * Q.a, Q.disc()};
}

std::optional<Form> form_from_cm(CmPoint const & t)
{
    if (!mpz_even_p(t.den.get_mpz_t()))
        return std::nullopt;
    Int num = t.numB * t.numB - t.D;
    Int twice_den = 2 * t.den;
    if (!mpz_divisible_p(num.get_mpz_t(), twice_den.get_mpz_t()))
        return std::nullopt;
    Int a = t.den / 2;
    Int c = num / twice_den;
    Form f(a, -t.numB, c);
    Int g = gcd(gcd(f.a, f.b), f.c);
    if (g != 1) {
        f.a /= g;
        f.b /= g;
        f.c /= g;
    }
    return f;
}

CmPoint moebius(GroupElement const & g, CmPoint const & t)
{
    Rational x = t.re();
    Rational y2 = t.im2();
    Rational cx_d = Rational(g.c) * x + Rational(g.d);
    // |c t + d|^2, positive because Im(t) > 0.
    Rational n = cx_d * cx_d + Rational(g.c * g.c) * y2;
    Rational abs2 = x * x + y2;
    Rational new_re = (Rational(g.a * g.c) * abs2
                       + Rational(g.a * g.d + g.b * g.c) * x
                       + Rational(g.b * g.d))
                      / n;
    // Im' = Im / n, so with D kept fixed the denominator scales by n.
    Rational new_den = Rational(t.den) * n;
    Rational new_num = new_re * new_den;
    new_den.canonicalize();
    new_num.canonicalize();
    Int s = lcm(new_den.get_den(), new_num.get_den());
    Rational sq(s);
    Rational den_scaled = new_den * sq;
    Rational num_scaled = new_num * sq;
    return {num_scaled.get_num(), den_scaled.get_num(), t.D * s * s};
}

std::optional<Rational> moebius(GroupElement const & g, Rational const & r)
{
    Rational den = Rational(g.c) * r + Rational(g.d);
    if (sgn(den) == 0)
        return std::nullopt;
    Rational out = (Rational(g.a) * r + Rational(g.b)) / den;
    out.canonicalize();
    return out;
}

int kronecker(Int const & D, Int const & m)
{
    return mpz_kronecker(D.get_mpz_t(), m.get_mpz_t());
}

std::vector<std::int64_t>
representation_values(Form const & Q, Level N, std::int64_t modulus)
{
    if (modulus < 1)
        throw validation_error("modulus must be positive");
    if (N < 1)
        throw validation_error("level must be positive");
    std::int64_t L = modulus / gcd_i64(modulus, N) * N;
    std::int64_t a = to_i64(mod(Q.a, Int(modulus)));
    std::int64_t b = to_i64(mod(Q.b, Int(modulus)));
    std::int64_t c = to_i64(mod(Q.c, Int(modulus)));
    std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
    for (std::int64_t x = 0; x < L; ++x) {
        if (gcd_i64(x, N) != 1)
            continue;
        std::int64_t xm = x % modulus;
        std::int64_t ax2 = a * xm % modulus * xm % modulus;
        for (std::int64_t y = 0; y < L; y += N) {
            std::int64_t ym = y % modulus;
            std::int64_t v = (ax2 + b * xm % modulus * ym
                              + c * ym % modulus * ym)
                             % modulus;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    std::vector<std::int64_t> out;
    for (std::int64_t v = 0; v < modulus; ++v)
        if (seen[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

} // namespace gammaforms
