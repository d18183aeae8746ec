#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieposet/canonical.hpp"
#include "lieposet/contact.hpp"
#include "lieposet/error.hpp"
#include "lieposet/io.hpp"
#include "lieposet/sweep.hpp"
#include "lieposet/topology.hpp"

namespace py = pybind11;
using namespace lieposet;

namespace {

// JSON crosses the boundary as text; the stdlib json module does the rest.
Json to_json(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_json(obj.cast<std::string>());
    return parse_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json index_report(const IndexReport& r) {
    return Json{{"index", r.index},
                {"trials", r.trials},
                {"sample_bound", r.sample_bound},
                {"certified", r.certified},
                {"failure_bound", r.failure_bound}};
}

py::object build(const py::object& sequence) {
    const ContactSequence seq = sequence_from_json(to_json(sequence));
    const Assembly a = validate_contact_sequence(seq);
    const Functional phi = build_contact_form(seq, a);
    const LieAlgebra g = build_type_a(a.poset);
    const Rational det = determinant(extended_matrix(g, phi));
    const RationalMatrix b = kirillov_matrix(g, phi);
    bool kernel_ok = kernel(b).size() == 1;
    for (const Rational& x : multiply(b, expected_kernel(a.poset))) kernel_ok = kernel_ok && sgn(x) == 0;
    return to_python(Json{{"poset", poset_to_json(a.poset)},
                          {"contact_form", functional_to_json(phi)},
                          {"determinant", to_fraction(det)},
                          {"kernel_check", kernel_ok}});
}

py::object contact_verdict(const py::object& algebra, int trials, std::uint64_t seed) {
    const LieAlgebra g = algebra_from_json(to_json(algebra));
    const ContactVerdict v = is_contact(g, trials, seed);
    Json out{{"verdict", std::string(to_string(v.kind))}, {"reason", v.reason}};
    if (v.kind == ContactVerdict::Kind::Witness) {
        Json w = Json::array();
        for (const Rational& x : v.witness) w.push_back(to_fraction(x));
        out["witness"] = w;
    }
    if (v.kind == ContactVerdict::Kind::NotContact) out["failure_bound"] = v.failure_bound;
    return to_python(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Type-A Lie poset algebras: index, contact classification, homology";

    // Kept alive for the interpreter's lifetime; `kind` carries the error kind.
    static const py::handle error = py::exception<Error>(m, "LieposetError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::reinterpret_borrow<py::object>(error)(e.what());
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    py::class_<Poset>(m, "Poset")
        .def(py::init(&make_poset), py::arg("n"), py::arg("relations") = std::vector<Relation>{},
             "Poset on 1..n from generating relations i < j.")
        .def_static("from_json", [](const py::object& j) { return poset_from_json(to_json(j)); })
        .def("to_json", [](const Poset& p) { return to_python(poset_to_json(p)); })
        .def_property_readonly("size", &Poset::size)
        .def_property_readonly("height", &Poset::height)
        .def_property_readonly("components", &Poset::components)
        .def_property_readonly("is_connected", &Poset::is_connected)
        .def_property_readonly("relations", &Poset::relations)
        .def_property_readonly("covers", [](const Poset& p) { return p.hasse().covers; })
        .def("less", &Poset::less)
        .def("__len__", &Poset::size)
        .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
        .def("__repr__", [](const Poset& p) { return "Poset(" + poset_to_json(p).dump() + ")"; });

    m.def("chain", &chain, py::arg("n"));
    m.def("antichain", &antichain, py::arg("n"));
    m.def("complete_poset", &complete_poset, py::arg("ranks"));
    m.def("disjoint_sum", &disjoint_sum);
    m.def("are_isomorphic", [](const Poset& a, const Poset& b) { return are_isomorphic(a, b); });
    m.def("enumerate_posets", &enumerate_posets, py::arg("n"), py::arg("max_height") = 2,
          py::arg("connected_only") = false, "One representative per isomorphism class.");
    m.def("extremal", [](const Poset& p) {
        const ExtremalData e = extremal_data(p);
        return py::dict(py::arg("ext") = e.ext, py::arg("rel_e") = e.rel_e, py::arg("interior") = e.interior);
    });

    m.def("dimension", [](const Poset& p) { return build_type_a(p).dim(); });
    m.def("index_formula", &index_formula_h2, "Index of g_A(P) for height <= 2.");
    m.def("is_frobenius", &is_frobenius_h2);
    m.def(
        "index",
        [](const Poset& p, int trials, std::uint64_t seed) {
            return to_python(index_report(index(build_type_a(p), trials, seed)));
        },
        py::arg("poset"), py::arg("trials") = kDefaultTrials, py::arg("seed") = 0, "Randomized rank index.");
    m.def(
        "algebra_index",
        [](const py::object& algebra, int trials, std::uint64_t seed) {
            return to_python(index_report(index(algebra_from_json(to_json(algebra)), trials, seed)));
        },
        py::arg("algebra"), py::arg("trials") = kDefaultTrials, py::arg("seed") = 0);
    m.def("center_dimension", [](const Poset& p) { return center(build_type_a(p)).size(); });
    m.def("h2_dimension", [](const Poset& p) { return ce_cohomology_dims(build_type_a(p)).h2; });

    m.def(
        "classify",
        [](const Poset& p, std::uint64_t seed) { return to_python(classification_to_json(classify_h2(p, seed))); },
        py::arg("poset"), py::arg("seed") = 0, "Contact classification for height <= 2.");
    m.def("is_contact", &contact_verdict, py::arg("algebra"), py::arg("trials") = kDefaultTrials,
          py::arg("seed") = 0, "Contact test for a structure-constant algebra.");
    m.def("build_sequence", &build, py::arg("sequence"), "Replay a contact sequence and verify its form.");

    m.def(
        "betti_numbers",
        [](const Poset& p, bool reduced) { return betti_numbers(order_complex(p), reduced); },
        py::arg("poset"), py::arg("reduced") = false);
    m.def("is_acyclic", &verify_acyclic);
    m.def("hasse_dot", &hasse_dot, py::arg("poset"), py::arg("name") = "P");

    m.def(
        "sweep",
        [](int max_n, std::uint64_t seed, int trials) { return to_python(sweep_to_json(sweep(max_n, seed, trials))); },
        py::arg("max_n"), py::arg("seed"), py::arg("trials") = kDefaultTrials);
}
