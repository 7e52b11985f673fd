#include "gammaforms/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammaforms/classgroup.hpp"
#include "gammaforms/errors.hpp"
#include "gammaforms/fundomain.hpp"
#include "gammaforms/genus.hpp"
#include "gammaforms/ideal.hpp"
#include "gammaforms/reduction.hpp"

namespace gammaforms::cli {

using nlohmann::json;

namespace {

enum class Format { text, json, tsv };

json jint(Int const & x)
{
    if (x.fits_slong_p())
        return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

json jform(Form const & f)
{
    return json::array({jint(f.a), jint(f.b), jint(f.c)});
}

json jmatrix(GroupElement const & g)
{
    return json::array({json::array({jint(g.a), jint(g.b)}),
                        json::array({jint(g.c), jint(g.d)})});
}

json jrational(Rational const & r)
{
    return r.get_str();
}

template <class T>
std::string list_str(std::vector<T> const & v)
{
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        o << (i ? ", " : "") << v[i];
    o << "]";
    return o.str();
}

Level parse_level(std::string const & s)
{
    Int n = parse_int(s);
    if (n < 1 || !n.fits_slong_p())
        throw validation_error("level must be a positive integer, got " + s);
    return n.get_si();
}

Int parse_disc(std::string const & s)
{
    Int D = parse_int(s);
    require_valid_discriminant(D);
    return D;
}

Form parse_qf(std::string const & s)
{
    Form f = Form::parse(s);
    return make_qf(f.a, f.b, f.c);
}

void emit_json(std::ostream & out, json const & j)
{
    out << j.dump() << "\n";
}

/* Options shared by every subcommand. */
struct Common
{
    std::string format;
    bool json_flag = false;

    Format fmt(Format fallback) const
    {
        if (json_flag)
            return Format::json;
        if (format.empty())
            return fallback;
        if (format == "json")
            return Format::json;
        if (format == "tsv")
            return Format::tsv;
        return Format::text;
    }
};

void add_format(CLI::App * cmd, Common & c)
{
    cmd->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
    cmd->add_flag("--json", c.json_flag, "shorthand for --format json");
}

// --- worked examples with known answers ------------------------------------

struct ReferenceTable
{
    std::string name;
    std::function<json()> compute;
    json expected;
};

json forms_json(std::vector<Form> const & v)
{
    json j = json::array();
    for (Form const & f : v)
        j.push_back(jform(f));
    return j;
}

std::vector<ReferenceTable> reference_tables()
{
    auto rf2 = [](int D) {
        return [D] { return forms_json(enumerate_reduced(Int(D), 2)); };
    };
    auto genus28 = [] { return genus_table(Int(-28), 2); };
    return {
            {"gamma0_2_rf_-3", rf2(-3), json::parse("[[1,1,1]]")},
            {"gamma0_2_rf_-4", rf2(-4), json::parse("[[1,0,1],[2,2,1]]")},
            {"gamma0_2_rf_-7", rf2(-7),
             json::parse("[[1,1,2],[2,-1,1],[2,1,1]]")},
            {"gamma0_2_rf_-8", rf2(-8),
             json::parse("[[1,0,2],[2,0,1],[3,2,1]]")},
            {"ker_chi_-28", [=] { return json(genus28().ker_chi); },
             json::parse("[1,9,11,15,23,25]")},
            {"principal_subgroup_-28_2", [=] { return json(genus28().H); },
             json::parse("[1,9,25]")},
            {"cosets_-28_2", [=] { return json(genus28().cosets); },
             json::parse("[[1,9,25],[11,15,23]]")},
            {"genera_-28_2",
             [=] {
                 json j = json::array();
                 GenusTable t = genus28();
                 for (auto const & g : t.assignment)
                     j.push_back({jform(g.form), t.cosets[g.coset]});
                 return j;
             },
             json::parse("[[[1,0,7],[1,9,25]],[[7,0,1],[11,15,23]]]")},
    };
}

// --- subcommands ------------------------------------------------------------

int cmd_reduce(std::ostream & out, Format f, std::string const & form,
               std::string const & disc, std::string const & level)
{
    Form Q = parse_qf(form);
    if (!disc.empty() && parse_disc(disc) != Q.disc())
        throw validation_error("form " + Q.str() + " has discriminant "
                               + Q.disc().get_str() + ", not " + disc);
    Level N = parse_level(level);
    ReductionResult r = reduce_gamma0(Q, N);
    if (f == Format::json) {
        emit_json(out, {{"form", jform(Q)},
                        {"level", N},
                        {"reduced", jform(r.reduced)},
                        {"transform", jmatrix(r.transform)}});
    } else if (f == Format::tsv) {
        out << r.reduced.a << "\t" << r.reduced.b << "\t" << r.reduced.c
            << "\n";
    } else {
        out << "reduced: " << r.reduced.str() << "\n"
            << "transform: " << r.transform.str() << "\n";
    }
    return ok;
}

int cmd_enumerate(std::ostream & out, Format f, std::string const & disc,
                  std::string const & level)
{
    Int D = parse_disc(disc);
    Level N = parse_level(level);
    std::vector<Form> forms = enumerate_reduced(D, N);
    if (f == Format::json) {
        emit_json(out, {{"disc", jint(D)},
                        {"level", N},
                        {"count", forms.size()},
                        {"forms", forms_json(forms)}});
    } else {
        char const * sep = f == Format::tsv ? "\t" : ",";
        for (Form const & q : forms)
            out << q.a << sep << q.b << sep << q.c << "\n";
    }
    return ok;
}

int cmd_equiv(std::ostream & out, Format f, std::string const & f1,
              std::string const & f2, std::string const & level)
{
    Form Q1 = parse_qf(f1);
    Form Q2 = parse_qf(f2);
    Level N = parse_level(level);
    auto g = equivalent_gamma0(Q1, Q2, N);
    if (f == Format::json) {
        json j{{"equivalent", g.has_value()}, {"level", N}};
        j["gamma"] = g ? jmatrix(*g) : json(nullptr);
        emit_json(out, j);
    } else if (f == Format::tsv) {
        out << (g ? "true" : "false") << "\t" << (g ? g->str() : "-") << "\n";
    } else {
        out << "equivalent: " << (g ? "true" : "false") << "\n";
        if (g)
            out << "gamma: " << g->str() << "\n";
    }
    return ok;
}

int cmd_classgroup(std::ostream & out, Format f, std::string const & disc,
                   std::string const & level, bool table)
{
    Int D = parse_disc(disc);
    Level N = parse_level(level);
    FormClassGroup G = class_group(D, N);
    if (f == Format::json) {
        json j{{"disc", jint(D)},
               {"level", N},
               {"order", G.order()},
               {"invariant_factors", G.invariant_factors},
               {"identity", G.identity},
               {"elements", forms_json(G.elements)}};
        if (table)
            j["table"] = G.cayley;
        emit_json(out, j);
        return ok;
    }
    if (f == Format::tsv) {
        for (std::size_t i = 0; i < G.order(); ++i) {
            Form const & q = G.elements[i];
            out << i << "\t" << q.a << "\t" << q.b << "\t" << q.c;
            if (table)
                for (std::size_t k : G.cayley[i])
                    out << "\t" << k;
            out << "\n";
        }
        return ok;
    }
    out << "order: " << G.order() << "\n"
        << "invariant_factors: " << list_str(G.invariant_factors) << "\n"
        << "identity: " << G.elements[G.identity].str() << "\n";
    for (std::size_t i = 0; i < G.order(); ++i)
        out << "  [" << i << "] " << G.elements[i].str() << "\n";
    if (table) {
        out << "table:\n";
        for (auto const & row : G.cayley)
            out << "  " << list_str(row) << "\n";
    }
    return ok;
}

/* Pairs (i, j) whose Dirichlet product lattice differs from the ideal
 * product. */
std::size_t oracle_mismatches(FormClassGroup const & G, std::size_t & pairs)
{
    std::size_t bad = 0;
    pairs = 0;
    for (Form const & q1 : G.elements)
        for (Form const & q2 : G.elements) {
            Form p2 = prepare_coprime(q2, q1.a * G.N, G.N);
            Form q = dirichlet_compose(q1, p2, G.N);
            ++pairs;
            if (ideal_from_form(q)
                != ideal_mul(ideal_from_form(q1), ideal_from_form(p2)))
                ++bad;
        }
    return bad;
}

int cmd_verify_iso(std::ostream & out, Format f, std::string const & disc,
                   std::string const & level, bool oracle)
{
    Int D = parse_disc(disc);
    Level N = parse_level(level);
    IsoReport r = verify_iso_with_scaled(D, N);
    std::size_t pairs = 0, bad = 0;
    if (oracle)
        bad = oracle_mismatches(class_group(D, N), pairs);
    if (f == Format::json) {
        json j{{"isomorphic", r.isomorphic},
               {"order_level", r.order_level},
               {"order_scaled", r.order_scaled},
               {"invariant_factors", r.factors_level},
               {"invariant_factors_scaled", r.factors_scaled}};
        if (oracle)
            j["oracle"] = {{"pairs", pairs}, {"mismatches", bad}};
        emit_json(out, j);
    } else {
        out << "isomorphic: " << (r.isomorphic ? "true" : "false")
            << "; invariant_factors: " << list_str(r.factors_level);
        if (!r.isomorphic)
            out << " vs " << list_str(r.factors_scaled);
        out << "\n";
        if (oracle)
            out << "oracle: " << pairs - bad << "/" << pairs
                << " products agree\n";
    }
    return (r.isomorphic && !(oracle && bad)) ? ok : failure;
}

int cmd_genus(std::ostream & out, Format f, std::string const & disc,
              std::string const & level)
{
    Int D = parse_disc(disc);
    Level N = parse_level(level);
    GenusTable T = genus_table(D, N);
    if (f == Format::json) {
        json forms = json::array();
        for (auto const & g : T.assignment)
            forms.push_back({{"form", jform(g.form)}, {"coset", g.coset}});
        emit_json(out, {{"disc", jint(D)},
                        {"level", N},
                        {"ker_chi", T.ker_chi},
                        {"H", T.H},
                        {"cosets", T.cosets},
                        {"genera", forms}});
        return ok;
    }
    if (f == Format::tsv) {
        for (auto const & g : T.assignment)
            out << g.form.a << "\t" << g.form.b << "\t" << g.form.c << "\t"
                << g.coset << "\n";
        return ok;
    }
    out << "ker_chi: " << list_str(T.ker_chi) << "\n"
        << "H: " << list_str(T.H) << "\n";
    for (std::size_t i = 0; i < T.cosets.size(); ++i)
        out << "coset " << i << ": " << list_str(T.cosets[i]) << "\n";
    for (auto const & g : T.assignment)
        out << g.form.str() << " -> coset " << g.coset << "\n";
    return ok;
}

int cmd_classify(std::ostream & out, Format f, std::string const & prime,
                 std::string const & disc, std::string const & level)
{
    Int P = parse_int(prime);
    if (P <= 2 || !P.fits_slong_p())
        throw validation_error("prime must be an odd prime, got " + prime);
    Int D = parse_disc(disc);
    Level N = parse_level(level);
    GenusTable T = genus_table(D, N);
    PrimeClassification c = classify_prime(P.get_si(), T);
    if (f == Format::text) {
        if (!c.represented) {
            out << "not represented; kronecker: " << c.kronecker << "\n";
            return ok;
        }
        out << "coset: " << list_str(T.cosets[*c.coset]) << "\n";
        if (c.witness)
            out << "witness: " << c.witness->str() << " at ("
                << c.witness_rep->x << ", " << c.witness_rep->y << ")\n";
        else
            out << "witness: none\n";
        return ok;
    }
    if (f == Format::tsv) {
        out << c.p << "\t" << c.kronecker << "\t"
            << (c.represented ? list_str(T.cosets[*c.coset]) : "-") << "\t"
            << (c.witness ? c.witness->str() : "-") << "\n";
        return ok;
    }
    if (!c.represented) {
        emit_json(out, {{"kronecker", c.kronecker}, {"represented", false}});
        return ok;
    }
    json j{{"coset", T.cosets[*c.coset]}};
    if (c.witness) {
        j["witness"] = c.witness->str();
        j["x"] = jint(c.witness_rep->x);
        j["y"] = jint(c.witness_rep->y);
    } else {
        j["witness"] = nullptr;
        j["x"] = nullptr;
        j["y"] = nullptr;
    }
    emit_json(out, j);
    return ok;
}

int cmd_represent(std::ostream & out, Format f, std::string const & form,
                  std::string const & value, std::string const & level)
{
    Form Q = parse_qf(form);
    Int m = parse_int(value);
    Level N = parse_level(level);
    std::vector<Representation> reps = find_representations(Q, m, N);
    if (f == Format::json) {
        json j = json::array();
        for (auto const & r : reps)
            j.push_back({{"x", jint(r.x)},
                         {"y", jint(r.y)},
                         {"proper", r.proper},
                         {"admissible", r.admissible}});
        emit_json(out, {{"form", jform(Q)},
                        {"value", jint(m)},
                        {"level", N},
                        {"representations", j}});
        return ok;
    }
    for (auto const & r : reps) {
        if (f == Format::tsv)
            out << r.x << "\t" << r.y << "\t" << r.proper << "\t"
                << r.admissible << "\n";
        else
            out << "(" << r.x << ", " << r.y << ")"
                << (r.proper ? " proper" : "")
                << (r.admissible ? " admissible" : "") << "\n";
    }
    return ok;
}

int cmd_fundomain(std::ostream & out, Format f, std::string const & prime,
                  std::string const & svg)
{
    Int P = parse_int(prime);
    if (!P.fits_slong_p())
        throw validation_error("p out of range: " + prime);
    std::int64_t p = P.get_si();
    require_prime_ge5(p);
    BoundaryInventory inv = r_gamma0p_boundary(p);
    EllipticData e = elliptic_data(p);
    if (!svg.empty()) {
        std::ofstream file(svg);
        if (!file)
            throw validation_error("cannot write " + svg);
        file << boundary_svg(inv);
    }
    if (f == Format::text) {
        out << "p: " << p << "\n";
        for (Arc const & a : inv.arcs)
            out << "arc k=" << a.k << ": |tau - " << a.center << "| = "
                << a.radius << ", gamma_k = " << a.gamma.str() << "\n";
        for (Rational const & x : inv.lines)
            out << "line: Re(tau) = " << x << "\n";
        out << "E2: " << list_str(e.E2) << "\nE3: " << list_str(e.E3) << "\n";
        return ok;
    }
    if (f == Format::tsv) {
        for (Arc const & a : inv.arcs)
            out << "arc\t" << a.k << "\t" << a.center << "\t" << a.radius
                << "\n";
        for (Rational const & x : inv.lines)
            out << "line\t" << x << "\n";
        return ok;
    }
    json arcs = json::array();
    for (Arc const & a : inv.arcs)
        arcs.push_back({{"k", a.k},
                        {"center", jrational(a.center)},
                        {"radius", jrational(a.radius)},
                        {"gamma", jmatrix(a.gamma)}});
    json lines = json::array();
    for (Rational const & x : inv.lines)
        lines.push_back(jrational(x));
    emit_json(out, {{"p", p},
                    {"arcs", arcs},
                    {"lines", lines},
                    {"E2", e.E2},
                    {"E3", e.E3}});
    return ok;
}

int cmd_tables(std::ostream & out, Format f, std::string const & only)
{
    std::vector<ReferenceTable> tables = reference_tables();
    if (!only.empty()) {
        auto it = std::find_if(tables.begin(), tables.end(),
                               [&](auto const & t) { return t.name == only; });
        if (it == tables.end())
            throw validation_error("unknown table " + only);
        json got = it->compute();
        bool const match = got == it->expected;
        if (f == Format::json)
            emit_json(out, {{"table", it->name},
                            {"match", match},
                            {"computed", got}});
        else
            out << it->name << ": " << got.dump() << " ("
                << (match ? "match" : "MISMATCH") << ")\n";
        return match ? ok : failure;
    }
    std::size_t good = 0;
    json report = json::array();
    for (ReferenceTable const & t : tables) {
        json got = t.compute();
        bool const match = got == t.expected;
        good += match;
        if (f == Format::json)
            report.push_back({{"table", t.name}, {"match", match}});
        else if (!match)
            out << "mismatch: " << t.name << ": expected "
                << t.expected.dump() << ", computed " << got.dump() << "\n";
    }
    if (f == Format::json)
        emit_json(out, {{"tables", report},
                        {"matched", good},
                        {"total", tables.size()}});
    else
        out << good << "/" << tables.size() << " tables match\n";
    return good == tables.size() ? ok : failure;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out,
        std::ostream & err)
{
    CLI::App app{"Gamma_0(N)-equivalence of binary quadratic forms",
                 "gamma-forms"};
    app.require_subcommand(1);

    Common common;
    std::string disc, level, form, form1, form2, prime, value, svg, table;
    bool show_table = false, oracle = false;

    auto * reduce = app.add_subcommand("reduce", "class representative of a form");
    add_format(reduce, common);
    reduce->add_option("--form", form, "a,b,c")->required();
    reduce->add_option("--disc", disc, "expected discriminant");
    reduce->add_option("--level", level, "N")->required();

    auto * enumerate = app.add_subcommand("enumerate", "reduced forms");
    add_format(enumerate, common);
    enumerate->add_option("--disc", disc, "D")->required();
    enumerate->add_option("--level", level, "N")->required();

    auto * equiv = app.add_subcommand("equiv", "Gamma_0(N)-equivalence test");
    add_format(equiv, common);
    equiv->add_option("--form1", form1, "a,b,c")->required();
    equiv->add_option("--form2", form2, "a,b,c")->required();
    equiv->add_option("--level", level, "N")->required();

    auto * classgroup = app.add_subcommand("classgroup", "C(D, Gamma_0(N))");
    add_format(classgroup, common);
    classgroup->add_option("--disc", disc, "D")->required();
    classgroup->add_option("--level", level, "N")->required();
    classgroup->add_flag("--table", show_table, "print the Cayley table");

    auto * iso = app.add_subcommand("verify-iso", "compare with C(D N^2)");
    add_format(iso, common);
    iso->add_option("--disc", disc, "D")->required();
    iso->add_option("--level", level, "N")->required();
    iso->add_flag("--oracle", oracle, "cross-check products with ideals");

    auto * genus = app.add_subcommand("genus", "N-genus table");
    add_format(genus, common);
    genus->add_option("--disc", disc, "D")->required();
    genus->add_option("--level", level, "N")->required();

    auto * classify = app.add_subcommand("classify", "genus of a prime");
    add_format(classify, common);
    classify->add_option("--prime", prime, "p")->required();
    classify->add_option("--disc", disc, "D")->required();
    classify->add_option("--level", level, "N")->required();

    auto * represent = app.add_subcommand("represent", "solutions of Q(x,y) = m");
    add_format(represent, common);
    represent->add_option("--form", form, "a,b,c")->required();
    represent->add_option("--value", value, "m")->required();
    represent->add_option("--level", level, "N")->required();

    auto * fundomain = app.add_subcommand("fundomain", "region for Gamma_0(p)");
    add_format(fundomain, common);
    fundomain->add_option("--p", prime, "prime p >= 5")->required();
    fundomain->add_option("--svg", svg, "write an SVG drawing here");

    auto * tables = app.add_subcommand("paper-tables", "check worked examples");
    add_format(tables, common);
    tables->add_option("--table", table, "run a single table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : validation;
    }

    try {
        Format const f = common.fmt(Format::text);
        if (*reduce)
            return cmd_reduce(out, f, form, disc, level);
        if (*enumerate)
            return cmd_enumerate(out, f, disc, level);
        if (*equiv)
            return cmd_equiv(out, f, form1, form2, level);
        if (*classgroup)
            return cmd_classgroup(out, f, disc, level, show_table);
        if (*iso)
            return cmd_verify_iso(out, f, disc, level, oracle);
        if (*genus)
            return cmd_genus(out, f, disc, level);
        if (*classify)
            return cmd_classify(out, common.fmt(Format::json), prime, disc, level);
        if (*represent)
            return cmd_represent(out, f, form, value, level);
        if (*fundomain)
            return cmd_fundomain(out, common.fmt(Format::json), prime, svg);
        if (*tables)
            return cmd_tables(out, f, table);
    } catch (validation_error const & e) {
        err << "error: validation: " << e.what() << "\n";
        return validation;
    } catch (unsupported_level const & e) {
        err << "error: unsupported-level: " << e.what() << "\n";
        return unsupported;
    } catch (safety_bound_exceeded const & e) {
        err << "error: safety-bound: " << e.what() << "\n";
        return safety_bound;
    } catch (std::exception const & e) {
        err << "error: internal: " << e.what() << "\n";
        return failure;
    }
    return failure;
}

} // namespace gammaforms::cli
