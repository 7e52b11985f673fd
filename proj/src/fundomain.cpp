#include "gammaforms/fundomain.hpp"

#include <algorithm>
#include <sstream>

#include "gammaforms/errors.hpp"

namespace gammaforms {

void require_prime_ge5(std::int64_t p)
{
    if (p < 5 || !is_prime(p))
        throw validation_error("p = " + std::to_string(p)
                               + " must be a prime >= 5");
}

std::vector<std::int64_t> symmetric_residues(std::int64_t p)
{
    std::int64_t h = (p - 1) / 2;
    std::vector<std::int64_t> s;
    s.reserve(static_cast<std::size_t>(p - 1));
    for (std::int64_t k = -h; k <= h; ++k)
        if (k != 0)
            s.push_back(k);
    return s;
}

std::int64_t sym_residue(std::int64_t p, Int const & x)
{
    std::int64_t r = to_i64(mod(x, Int(p)));
    if (r == 0)
        throw validation_error(x.get_str() + " is divisible by "
                               + std::to_string(p));
    return r > p / 2 ? r - p : r;
}

std::int64_t sym_inverse(std::int64_t p, std::int64_t x)
{
    if (mod(x, p) == 0)
        throw validation_error(std::to_string(x) + " is divisible by "
                               + std::to_string(p));
    return sym_residue(p, inverse_mod(Int(x), Int(p)));
}

GroupElement gamma_k(std::int64_t p, std::int64_t k)
{
    std::int64_t kinv = sym_inverse(p, k);
    // k k^-1 = 1 (mod p), so the upper-right entry is integral.
    return GroupElement::make(Int(k), Int((k * kinv - 1) / p), Int(p),
                              Int(kinv));
}

bool EllipticData::in_E2(std::int64_t k) const
{
    return std::find(E2.begin(), E2.end(), k) != E2.end();
}

bool EllipticData::in_E3(std::int64_t k) const
{
    return std::find(E3.begin(), E3.end(), k) != E3.end();
}

std::int64_t EllipticData::k2(std::int64_t k) const
{
    return std::min(k, -sym_inverse(p, k));
}

std::int64_t EllipticData::k3(std::int64_t k) const
{
    auto o = orbit3(p, k);
    return *std::min_element(o.begin(), o.end());
}

EllipticData elliptic_data(std::int64_t p)
{
    require_prime_ge5(p);
    EllipticData e{p, {}, {}};
    for (std::int64_t k : symmetric_residues(p)) {
        if (mod(k * k + 1, p) == 0)
            e.E2.push_back(k);
        if (mod(k * k - k + 1, p) == 0)
            e.E3.push_back(k);
    }
    return e;
}

std::array<std::int64_t, 3> orbit3(std::int64_t p, std::int64_t k)
{
    require_prime_ge5(p);
    if (k == 1)
        throw validation_error("orbit3 is undefined at k = 1");
    auto f = [p](std::int64_t j) {
        return sym_residue(p, Int(1 - sym_inverse(p, j)));
    };
    std::int64_t k1 = f(k);
    return {k, k1, f(k1)};
}

CmPoint corner_point(std::int64_t p, Int const & k)
{
    return {2 * k - 1, Int(2 * p), Int(-3)};
}

bool contains(std::int64_t p, CmPoint const & t)
{
    EllipticData const e = elliptic_data(p);
    Rational const re = t.re();
    Rational const half = frac(1, 2);
    Rational const r2 = frac(1, p * p); // squared arc radius

    // (1), (3)
    if (abs(re) > half)
        return false;
    if (re == half)
        return false;

    for (std::int64_t k : symmetric_residues(p)) {
        Rational const centre = frac(k, p);
        Rational const d2 = t.dist2(centre);
        if (d2 < r2) // (2)
            return false;
        if (d2 != r2)
            continue;
        if (k == 1) // (4)
            return false;
        if (e.in_E2(k)) { // (5)
            if (re > centre)
                return false;
        } else if (k != -1) { // (6)
            Rational const bound = frac(2 * e.k2(k) + 1, 2 * p);
            if (re > bound)
                return false;
        }
    }

    // (7)
    Rational const corner_im2 = frac(3, 4 * p * p);
    if (t.im2() == corner_im2) {
        for (std::int64_t k : symmetric_residues(p)) {
            if (k == 1 || e.in_E3(k) || k == e.k3(k))
                continue;
            if (re == frac(2 * k - 1, 2 * p))
                return false;
        }
    }
    return true;
}

BoundaryInventory r_gamma0p_boundary(std::int64_t p)
{
    require_prime_ge5(p);
    BoundaryInventory inv{p, {}, {frac(-1, 2), frac(1, 2)}};
    for (std::int64_t k : symmetric_residues(p))
        inv.arcs.push_back({k, frac(k, p), frac(1, p), gamma_k(p, k)});
    return inv;
}

std::string boundary_svg(BoundaryInventory const & inv)
{
    // One unit of the plane is 200p pixels, so every arc has radius 200
    // and the strip edges sit at x = +-100p.
    std::int64_t const p = inv.p;
    std::int64_t const r = 200;
    std::int64_t const edge = 100 * p;
    std::int64_t const top = 240 * p; // Im = 1.2
    std::int64_t const margin = 40;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << -edge - margin << " " << -top - margin << " "
      << 2 * (edge + margin) << " " << top + 2 * margin << "\">\n";
    o << "  <title>Fundamental region for Gamma_0(" << p << ")</title>\n";
    o << "  <defs><clipPath id=\"strip\"><rect x=\"" << -edge << "\" y=\""
      << -top << "\" width=\"" << 2 * edge << "\" height=\"" << top
      << "\"/></clipPath></defs>\n";
    o << "  <g clip-path=\"url(#strip)\">\n";
    o << "    <rect x=\"" << -edge << "\" y=\"" << -top << "\" width=\""
      << 2 * edge << "\" height=\"" << top << "\" fill=\"#dde8f5\"/>\n";
    for (Arc const & a : inv.arcs)
        o << "    <circle cx=\"" << a.k * r << "\" cy=\"0\" r=\"" << r
          << "\" fill=\"white\" stroke=\"#1f4e79\" stroke-width=\"3\"/>\n";
    o << "  </g>\n";
    for (Rational const & x : inv.lines) {
        Rational px = x * frac(2 * r * p, 1);
        o << "  <line x1=\"" << px << "\" y1=\"0\" x2=\"" << px << "\" y2=\""
          << -top << "\" stroke=\"#1f4e79\" stroke-width=\"3\"/>\n";
    }
    o << "  <line x1=\"" << -edge - margin << "\" y1=\"0\" x2=\""
      << edge + margin << "\" y2=\"0\" stroke=\"black\" stroke-width=\"1\"/>\n";
    o << "</svg>\n";
    return o.str();
}

} // namespace gammaforms
