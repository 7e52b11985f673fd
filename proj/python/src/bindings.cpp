#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammaforms/classgroup.hpp"
#include "gammaforms/cli.hpp"
#include "gammaforms/errors.hpp"
#include "gammaforms/fundomain.hpp"
#include "gammaforms/genus.hpp"
#include "gammaforms/reduction.hpp"

namespace py = pybind11;
using namespace gammaforms;

// Python int <-> mpz_class through decimal strings.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class>
{
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        object s = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!s)
            return false;
        return value.set_str(s.cast<std::string>(), 10) == 0;
    }

    static handle cast(mpz_class const & v, return_value_policy, handle)
    {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

py::dict classification_dict(PrimeClassification const & c,
                             GenusTable const & T)
{
    py::dict d;
    d["p"] = c.p;
    d["kronecker"] = c.kronecker;
    d["represented"] = c.represented;
    d["coset"] = c.coset ? py::cast(T.cosets[*c.coset]) : py::none();
    d["witness"] = c.witness ? py::cast(*c.witness) : py::none();
    d["witness_rep"] = c.witness_rep
                               ? py::cast(std::make_pair(c.witness_rep->x,
                                                         c.witness_rep->y))
                               : py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Gamma_0(N)-equivalence of binary quadratic forms";

    py::register_exception<validation_error>(m, "ValidationError",
                                             PyExc_ValueError);
    py::register_exception<unsupported_level>(m, "UnsupportedLevel",
                                              PyExc_ValueError);
    py::register_exception<safety_bound_exceeded>(m, "SafetyBoundExceeded",
                                                  PyExc_RuntimeError);

    py::class_<Form>(m, "Form")
            .def(py::init<Int, Int, Int>(), py::arg("a"), py::arg("b"),
                 py::arg("c"))
            .def_static("parse", &Form::parse)
            .def_readonly("a", &Form::a)
            .def_readonly("b", &Form::b)
            .def_readonly("c", &Form::c)
            .def_property_readonly("disc", &Form::disc)
            .def("is_primitive", &Form::is_primitive)
            .def("is_positive_definite", &Form::is_positive_definite)
            .def("__call__", &Form::operator(), py::arg("x"), py::arg("y"))
            .def("act", &act, py::arg("g"))
            .def("coeffs",
                 [](Form const & f) { return std::make_tuple(f.a, f.b, f.c); })
            .def(py::self == py::self)
            .def(py::self < py::self)
            .def("__hash__",
                 [](Form const & f) {
                     return py::hash(py::make_tuple(f.a, f.b, f.c));
                 })
            .def("__str__", &Form::str)
            .def("__repr__",
                 [](Form const & f) { return "Form(" + f.str() + ")"; });

    py::class_<GroupElement>(m, "GroupElement")
            .def(py::init(&GroupElement::make), py::arg("a"), py::arg("b"),
                 py::arg("c"), py::arg("d"))
            .def_readonly("a", &GroupElement::a)
            .def_readonly("b", &GroupElement::b)
            .def_readonly("c", &GroupElement::c)
            .def_readonly("d", &GroupElement::d)
            .def("det", &GroupElement::det)
            .def("inverse", &GroupElement::inverse)
            .def("in_gamma0", &GroupElement::in_gamma0, py::arg("N"))
            .def(py::self * py::self)
            .def(py::self == py::self)
            .def("__repr__", [](GroupElement const & g) {
                return "GroupElement(" + g.str() + ")";
            });

    m.def("act", &act, py::arg("form"), py::arg("g"));
    m.def("kronecker", &kronecker, py::arg("D"), py::arg("m"));
    m.def("is_valid_discriminant", &is_valid_discriminant, py::arg("D"));

    m.def("reduce",
          [](Form const & Q, Level N) {
              ReductionResult r = reduce_gamma0(Q, N);
              return std::make_pair(r.reduced, r.transform);
          },
          py::arg("form"), py::arg("N"),
          "Canonical representative of the Gamma_0(N)-class of a form and "
          "the transform reaching it.");
    m.def("reduce_sl2",
          [](Form const & Q) {
              ReductionResult r = reduce_sl2(Q);
              return std::make_pair(r.reduced, r.transform);
          },
          py::arg("form"));
    m.def("is_reduced", &is_reduced, py::arg("form"), py::arg("N"));
    m.def("enumerate_reduced", &enumerate_reduced, py::arg("D"),
          py::arg("N"));
    m.def("class_reps", &gamma0_class_reps, py::arg("D"), py::arg("N"));
    m.def("equivalent_gamma0", &equivalent_gamma0, py::arg("Q1"),
          py::arg("Q2"), py::arg("N"));

    m.def("principal_form", &principal_form, py::arg("D"));
    m.def("prepare_coprime", &prepare_coprime, py::arg("form"), py::arg("M"),
          py::arg("N"));
    m.def("dirichlet_compose", &dirichlet_compose, py::arg("Q1"),
          py::arg("Q2"), py::arg("N"));

    py::class_<FormClassGroup>(m, "ClassGroup")
            .def_readonly("D", &FormClassGroup::D)
            .def_readonly("N", &FormClassGroup::N)
            .def_readonly("elements", &FormClassGroup::elements)
            .def_readonly("table", &FormClassGroup::cayley)
            .def_readonly("invariant_factors",
                          &FormClassGroup::invariant_factors)
            .def_readonly("identity", &FormClassGroup::identity)
            .def("order", &FormClassGroup::order)
            .def("inverse", &FormClassGroup::inverse)
            .def("element_order", &FormClassGroup::element_order)
            .def("index_of", &FormClassGroup::index_of);
    m.def("class_group", &class_group, py::arg("D"), py::arg("N"));
    m.def("verify_iso",
          [](Int const & D, Level N) {
              IsoReport r = verify_iso_with_scaled(D, N);
              py::dict d;
              d["isomorphic"] = r.isomorphic;
              d["order_level"] = r.order_level;
              d["order_scaled"] = r.order_scaled;
              d["invariant_factors"] = r.factors_level;
              d["invariant_factors_scaled"] = r.factors_scaled;
              return d;
          },
          py::arg("D"), py::arg("N"));

    py::class_<Representation>(m, "Representation")
            .def_readonly("x", &Representation::x)
            .def_readonly("y", &Representation::y)
            .def_readonly("m", &Representation::m)
            .def_readonly("proper", &Representation::proper)
            .def_readonly("admissible", &Representation::admissible)
            .def("__repr__", [](Representation const & r) {
                std::ostringstream o;
                o << "Representation(" << r.x << ", " << r.y << ")";
                return o.str();
            });
    m.def("find_representations", &find_representations, py::arg("form"),
          py::arg("m"), py::arg("N"));

    py::class_<GenusTable>(m, "GenusTable")
            .def_readonly("D", &GenusTable::D)
            .def_readonly("N", &GenusTable::N)
            .def_readonly("ker_chi", &GenusTable::ker_chi)
            .def_readonly("H", &GenusTable::H)
            .def_readonly("cosets", &GenusTable::cosets)
            .def_property_readonly("genera", [](GenusTable const & T) {
                std::vector<std::pair<Form, std::size_t>> out;
                for (auto const & g : T.assignment)
                    out.emplace_back(g.form, g.coset);
                return out;
            });
    m.def("genus_table", &genus_table, py::arg("D"), py::arg("N"));
    m.def("classify_prime",
          [](std::int64_t p, Int const & D, Level N) {
              GenusTable T = genus_table(D, N);
              return classification_dict(classify_prime(p, T), T);
          },
          py::arg("p"), py::arg("D"), py::arg("N"));
    m.def("principal_genus_congruences", &principal_genus_congruences,
          py::arg("D"), py::arg("N"));

    m.def("elliptic_points",
          [](std::int64_t p) {
              EllipticData e = elliptic_data(p);
              return std::make_pair(e.E2, e.E3);
          },
          py::arg("p"));

    m.def("cli_run",
          [](std::vector<std::string> const & args) {
              std::ostringstream out, err;
              int code = cli::run(args, out, err);
              return std::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"),
          "Runs the command line; returns (exit code, stdout, stderr).");
}
