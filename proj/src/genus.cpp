#include "gammaforms/genus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "gammaforms/classgroup.hpp"
#include "gammaforms/errors.hpp"
#include "gammaforms/reduction.hpp"

namespace gammaforms {

namespace {

void require_level(Level N)
{
    if (N < 1)
        throw validation_error("level must be a positive integer");
}

Representation make_rep(Int x, Int y, Int m, Level N)
{
    bool const proper = gcd(x, y) == 1;
    bool const admissible = gcd(x, Int(N)) == 1 && mod(y, Int(N)) == 0;
    return {std::move(x), std::move(y), std::move(m), proper, admissible};
}

bool rep_order(Representation const & r, Representation const & s)
{
    auto key = [](Representation const & t) {
        return std::make_tuple(t.x < 0, t.y < 0, Int(abs(t.x)), Int(abs(t.y)));
    };
    return key(r) < key(s);
}

std::vector<std::int64_t> units_only(std::vector<std::int64_t> v,
                                     std::int64_t M)
{
    std::erase_if(v, [M](std::int64_t r) { return gcd_i64(r, M) != 1; });
    return v;
}

} // namespace

std::vector<Representation> find_representations(Form const & Q,
                                                 Int const & m, Level N)
{
    require_level(N);
    if (!Q.is_positive_definite())
        throw validation_error("form " + Q.str() + " is not positive definite");
    if (m < 0)
        throw validation_error("represented value must be non-negative");
    Int const D = Q.disc();
    // 4a Q(x, y) = (2ax + by)^2 + |D| y^2
    Int const ymax = isqrt(4 * Q.a * m / -D);
    std::vector<Representation> out;
    for (Int y = -ymax; y <= ymax; ++y) {
        Int const disc = D * y * y + 4 * Q.a * m;
        if (disc < 0 || !is_square(disc))
            continue;
        Int const s = isqrt(disc);
        for (Int const & num : {Int(-Q.b * y + s), Int(-Q.b * y - s)}) {
            if (mod(num, 2 * Q.a) != 0)
                continue;
            out.push_back(make_rep(num / (2 * Q.a), y, m, N));
            if (s == 0)
                break;
        }
    }
    std::sort(out.begin(), out.end(), rep_order);
    return out;
}

std::vector<Representation> n_representations(Form const & Q, Int const & m,
                                              Level N)
{
    std::vector<Representation> v = find_representations(Q, m, N);
    std::erase_if(v, [](Representation const & r) { return !r.admissible; });
    return v;
}

Form form_from_representation(Form const & Q, Representation const & r,
                              Level N)
{
    require_level(N);
    if (gcd(r.x, r.y) != 1)
        throw validation_error("representation (" + r.x.get_str() + ", "
                               + r.y.get_str() + ") is not proper");
    if (gcd(r.x, Int(N)) != 1 || mod(r.y, Int(N)) != 0)
        throw validation_error("representation (" + r.x.get_str() + ", "
                               + r.y.get_str() + ") is not "
                               + std::to_string(N) + "-admissible");
    ext_gcd_result e = ext_gcd(r.x, r.y);
    GroupElement g = GroupElement::make(r.x, -e.t, r.y, e.s);
    Form F = act(Q, g);
    Int const k = floor_div(F.a - F.b, 2 * F.a);
    return act(F, GroupElement(1, k, 0, 1));
}

std::optional<Form> exists_representing_form(Int const & D, Int const & m,
                                             Level N)
{
    require_valid_discriminant(D);
    require_level(N);
    if (m <= 0 || mod(m, Int(2)) == 0)
        throw validation_error("m = " + m.get_str()
                               + " must be odd and positive");
    if (gcd(m, D) != 1)
        throw validation_error("m = " + m.get_str() + " shares a factor with D");
    Int const four_m = 4 * m;
    for (Int b = mod(D, Int(2)); b < 2 * m; b += 2)
        if (mod(b * b - D, four_m) == 0)
            return Form(m, b, (b * b - D) / four_m);
    return std::nullopt;
}

std::int64_t GenusTable::modulus() const
{
    return to_i64(abs(D));
}

std::optional<std::size_t> GenusTable::coset_of(std::int64_t r) const
{
    r = mod(r, modulus());
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), r))
            return i;
    return std::nullopt;
}

std::size_t form_coset(GenusTable const & T, Form const & Q)
{
    std::int64_t const M = T.modulus();
    std::vector<std::int64_t> vals
            = units_only(representation_values(Q, T.N, M), M);
    if (vals.empty())
        throw std::logic_error("form " + Q.str()
                               + " represents no unit modulo "
                               + std::to_string(M));
    std::optional<std::size_t> c = T.coset_of(vals.front());
    for (std::int64_t v : vals)
        if (!c || T.coset_of(v) != c)
            throw std::logic_error("values of " + Q.str()
                                   + " do not lie in a single coset of H");
    return *c;
}

GenusTable genus_table(Int const & D, Level N)
{
    require_valid_discriminant(D);
    require_level(N);
    GenusTable T{D, N, {}, {}, {}, {}};
    std::int64_t const M = T.modulus();
    for (std::int64_t r = 1; r <= M; ++r)
        if (gcd_i64(r, M) == 1 && kronecker(D, Int(r % M)) == 1)
            T.ker_chi.push_back(r % M);
    std::sort(T.ker_chi.begin(), T.ker_chi.end());

    T.H = units_only(representation_values(principal_form(D), N, M), M);
    for (std::int64_t h : T.H)
        if (!std::binary_search(T.ker_chi.begin(), T.ker_chi.end(), h))
            throw std::logic_error("H is not contained in ker(chi)");

    std::set<std::int64_t> covered;
    for (std::int64_t r : T.ker_chi) {
        if (covered.count(r))
            continue;
        std::vector<std::int64_t> coset;
        for (std::int64_t h : T.H)
            coset.push_back(mod(r * h, M));
        std::sort(coset.begin(), coset.end());
        coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
        covered.insert(coset.begin(), coset.end());
        T.cosets.push_back(std::move(coset));
    }

    for (Form const & f : gamma0_class_reps(D, N))
        if (gcd(f.a, Int(N)) == 1)
            T.assignment.push_back({f, form_coset(T, f)});
    return T;
}

PrimeClassification classify_prime(std::int64_t p, GenusTable const & T)
{
    if (p <= 2 || !is_prime(p))
        throw validation_error(std::to_string(p) + " is not an odd prime");
    if (mod(T.D, Int(p)) == 0)
        throw validation_error(std::to_string(p) + " divides the discriminant");
    PrimeClassification out{p, kronecker(T.D, Int(p)), false, {}, {}, {}};
    if (out.kronecker != 1)
        return out;
    out.represented = true;
    out.coset = T.coset_of(p);
    if (!out.coset)
        throw std::logic_error("prime with kronecker symbol 1 outside ker(chi)");

    auto try_form = [&](Form const & f) {
        std::vector<Representation> r = n_representations(f, Int(p), T.N);
        if (r.empty())
            return false;
        out.witness = f;
        out.witness_rep = r.front();
        return true;
    };
    for (GenusAssignment const & g : T.assignment)
        if (try_form(g.form))
            return out;
    // A prime dividing N can only be N-represented by forms whose leading
    // coefficient it divides; those carry no genus.
    for (Form const & f : gamma0_class_reps(T.D, T.N))
        if (gcd(f.a, Int(T.N)) != 1 && try_form(f))
            return out;
    return out;
}

PrimeClassification classify_prime(std::int64_t p, Int const & D, Level N)
{
    return classify_prime(p, genus_table(D, N));
}

std::vector<std::int64_t> principal_genus_congruences(Int const & D, Level N)
{
    require_valid_discriminant(D);
    require_level(N);
    std::int64_t const M = to_i64(abs(D));
    bool const even_shape = mod(D, Int(4)) == 0;
    std::int64_t const m = even_shape ? M / 4 : 0;
    std::set<std::int64_t> res;
    for (std::int64_t x = 0; x < M * N; ++x) {
        if (gcd_i64(x, N) != 1)
            continue;
        std::int64_t const sq = to_i64(mod(Int(x) * x, Int(M)));
        res.insert(sq);
        if (even_shape && N % 2 == 1)
            res.insert((sq + m) % M);
    }
    return units_only({res.begin(), res.end()}, M);
}

std::pair<Int, Representation> coprime_value(Form const & Q, Int const & n,
                                             Level N)
{
    require_level(N);
    if (gcd(Q.a, Int(N)) != 1)
        throw validation_error("leading coefficient of " + Q.str()
                               + " must be prime to the level");
    Int const nN = n * N;
    Int const absn = abs(n) > 0 ? Int(abs(n)) : Int(1);
    Int const bound = search_bound(4 * absn * N * abs(Q.disc()) * (Q.a + Q.c));
    for (Int m = 1; m <= bound; ++m) {
        if (gcd(m, nN) != 1)
            continue;
        std::vector<Representation> reps;
        for (Representation const & r : n_representations(Q, m, N))
            if (r.proper)
                reps.push_back(r);
        if (reps.empty())
            continue;
        // smallest |y| first, then |x|, then nonnegative signs
        auto key = [](Representation const & r) {
            return std::make_tuple(Int(abs(r.y)), Int(abs(r.x)), r.x < 0,
                                   r.y < 0);
        };
        return {m, *std::min_element(reps.begin(), reps.end(),
                                     [&](auto const & u, auto const & v) {
                                         return key(u) < key(v);
                                     })};
    }
    throw safety_bound_exceeded("coprime_value: no properly "
                                + std::to_string(N) + "-represented value of "
                                + Q.str() + " prime to " + nN.get_str()
                                + " within the search bound");
}

namespace {

// Polynomials in x, y, z, w with integer coefficients.
using Monomial = std::array<int, 4>;
using Poly = std::map<Monomial, Int>;

Poly var(int i, Int const & coeff = 1)
{
    Monomial e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return {{e, coeff}};
}

Poly operator+(Poly p, Poly const & q)
{
    for (auto const & [e, c] : q)
        p[e] += c;
    std::erase_if(p, [](auto const & t) { return t.second == 0; });
    return p;
}

Poly operator*(Poly const & p, Poly const & q)
{
    Poly r;
    for (auto const & [e1, c1] : p)
        for (auto const & [e2, c2] : q) {
            Monomial e;
            for (std::size_t i = 0; i < 4; ++i)
                e[i] = e1[i] + e2[i];
            r[e] += c1 * c2;
        }
    std::erase_if(r, [](auto const & t) { return t.second == 0; });
    return r;
}

Poly scaled(Poly p, Int const & k)
{
    for (auto & t : p)
        t.second *= k;
    std::erase_if(p, [](auto const & t) { return t.second == 0; });
    return p;
}

} // namespace

bool brahmagupta_check(Int const & a, Int const & b, Int const & c, Level N,
                       int samples, std::uint64_t seed)
{
    require_level(N);
    Int const m = a * c - b * b;
    if (a <= 0 || m <= 0)
        throw validation_error("need a > 0 and ac - b^2 > 0");

    enum { X, Y, Z, W };
    Poly const x = var(X), y = var(Y), z = var(Z), w = var(W);
    Poly const F = scaled(x * x, a) + scaled(x * y, 2 * b) + scaled(y * y, c);
    Poly const G = scaled(z * z, a) + scaled(z * w, 2 * b) + scaled(w * w, c);
    Poly const L = scaled(x * z, a) + scaled(x * w, b) + scaled(y * z, b)
                   + scaled(y * w, c);
    Poly const cross = x * w + scaled(y * z, -1);
    if (F * G != L * L + scaled(cross * cross, m))
        return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-60, 60);
    auto q = [&](Int const & s, Int const & t) -> Int {
        return a * s * s + 2 * b * s * t + c * t * t;
    };
    for (int i = 0; i < samples; ++i) {
        Int xs = dist(rng), ys = dist(rng), zs = dist(rng), ws = dist(rng);
        Int const l = a * xs * zs + b * xs * ws + b * ys * zs + c * ys * ws;
        Int const k = xs * ws - ys * zs;
        if (q(xs, ys) * q(zs, ws) != l * l + m * k * k)
            return false;
    }

    if (gcd(a, Int(N)) != 1)
        return true;
    // x, z prime to N and N | y, w force gcd(L, N) = 1 and N | xw - yz.
    for (int i = 0, done = 0; done < samples && i < 100 * samples + 100; ++i) {
        Int xs = dist(rng), zs = dist(rng);
        if (gcd(xs, Int(N)) != 1 || gcd(zs, Int(N)) != 1)
            continue;
        Int ys = dist(rng) * N, ws = dist(rng) * N;
        Int const l = a * xs * zs + b * xs * ws + b * ys * zs + c * ys * ws;
        if (gcd(l, Int(N)) != 1 || mod(xs * ws - ys * zs, Int(N)) != 0)
            return false;
        ++done;
    }
    return true;
}

OIdeal ideal_of_norm_from_representation(Form const & Q,
                                         Representation const & r, Level N)
{
    require_level(N);
    if (gcd(r.x, Int(N)) != 1 || mod(r.y, Int(N)) != 0)
        throw validation_error("representation (" + r.x.get_str() + ", "
                               + r.y.get_str() + ") is not "
                               + std::to_string(N) + "-admissible");
    Int const m = Q(r.x, r.y);
    if (m <= 0)
        throw validation_error("represented value must be positive");
    Int const d = gcd(r.x, r.y);
    Representation const prim = make_rep(r.x / d, r.y / d, m / (d * d), N);
    Form const F = form_from_representation(Q, prim, N);
    QuadOrder const O(Q.disc());
    return from_generators(O, {{d * F.a, 0}, {d * ((-F.b - O.D) / 2), d}});
}

} // namespace gammaforms
