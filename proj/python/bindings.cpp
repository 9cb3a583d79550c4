#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leavitt/bimodule.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/report.hpp"
#include "leavitt/verify.hpp"

namespace py = pybind11;
using namespace leavitt;

namespace {

DifferentialFault fault_from(const std::string& name)
{
    auto f = parse_fault(name);
    if (!f)
        throw py::value_error("unknown fault '" + name + "'");
    return *f;
}

py::tuple pair_tuple(const Quiver& q, const AdmissiblePair& x)
{
    return py::make_tuple(format_path(q, x.p), format_path(q, x.q));
}

py::dict record_dict(const CheckRecord& r)
{
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["cases"] = r.cases;
    d["failures"] = r.failures;
    d["counterexample"] = r.counterexample;
    return d;
}

}  // namespace

PYBIND11_MODULE(_leavitt, m)
{
    m.doc() = "Leavitt path algebras and the injective Leavitt complex of a finite quiver";

    py::register_exception<QuiverError>(m, "QuiverError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CocycleError>(m, "CocycleError", PyExc_RuntimeError);

    py::class_<Quiver>(m, "Quiver")
        .def_static("parse", [](const std::string& text) { return parse_quiver(text); }, py::arg("text"))
        .def_static("load", &load_quiver, py::arg("path"))
        .def_property_readonly("vertices",
                               [](const Quiver& q) {
                                   std::vector<std::string> out;
                                   for (VertexId v = 0; v < q.vertex_count(); ++v)
                                       out.push_back(q.vertex_name(v));
                                   return out;
                               })
        .def_property_readonly("arrows",
                               [](const Quiver& q) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (ArrowId a = 0; a < q.arrow_count(); ++a)
                                       out.emplace_back(q.arrow_name(a), q.vertex_name(q.source(a)),
                                                        q.vertex_name(q.target(a)));
                                   return out;
                               })
        .def("special", [](const Quiver& q, const std::string& v) { return q.arrow_name(q.special(q.vertex(v))); })
        .def("digest", [](const Quiver& q) { return fnv1a_hex(q.canonical_text()); })
        .def("__str__", &Quiver::canonical_text);

    m.def(
        "basis",
        [](const Quiver& q, const std::string& vertex, int l, int n) {
            std::vector<py::tuple> out;
            for (const auto& x : enumerate_B(q, q.vertex(vertex), l, n))
                out.push_back(pair_tuple(q, x));
            return out;
        },
        py::arg("quiver"), py::arg("vertex"), py::arg("l"), py::arg("n"),
        "Admissible pairs (p, q) with s(q) = vertex, l(q) = n and l(q) - l(p) = l.");

    m.def(
        "witness",
        [](const Quiver& q, const std::string& vertex, int l) {
            return pair_tuple(q, witness_admissible(q, q.vertex(vertex), l));
        },
        py::arg("quiver"), py::arg("vertex"), py::arg("l"));

    m.def(
        "reduce",
        [](const Quiver& q, const std::string& expr, const std::string& field) {
            return format_lpa(q, parse_expression(expr, q, parse_field(field)));
        },
        py::arg("quiver"), py::arg("expr"), py::arg("field") = "Q", "Normal form of an algebra expression.");

    m.def(
        "degrees",
        [](const Quiver& q, const std::string& expr, const std::string& field) {
            std::map<int, std::string> out;
            for (const auto& [d, part] : grade(parse_expression(expr, q, parse_field(field))))
                out[d] = format_lpa(q, part);
            return out;
        },
        py::arg("quiver"), py::arg("expr"), py::arg("field") = "Q");

    m.def(
        "differential",
        [](const Quiver& q, const std::string& vector, const std::string& fault, const std::string& field) {
            return format_vector(q, differential(q, parse_vector(vector, q, parse_field(field)), fault_from(fault)));
        },
        py::arg("quiver"), py::arg("vector"), py::arg("fault") = "none", py::arg("field") = "Q");

    m.def(
        "act",
        [](const Quiver& q, const std::string& vector, const std::string& by, const std::string& field) {
            Field f = parse_field(field);
            return format_vector(q, b_action(q, parse_vector(vector, q, f), parse_expression(by, q, f)));
        },
        py::arg("quiver"), py::arg("vector"), py::arg("by"), py::arg("field") = "Q",
        "Right action of an algebra element on a vector of the complex.");

    m.def(
        "verify",
        [](const Quiver& q, const std::string& suite, int nmax, int lmin, int lmax, std::uint64_t seed,
           const std::string& fault, int roundtrip_bound, int trials, const std::string& field) {
            VerifyOptions opt;
            opt.nmax = nmax;
            opt.lmin = lmin;
            opt.lmax = lmax;
            opt.seed = seed;
            opt.field = parse_field(field);
            opt.fault = fault_from(fault);
            opt.roundtrip_bound = roundtrip_bound;
            opt.roundtrip_trials = trials;
            opt.roundtrip_nmin = std::max(lmin, -2);
            opt.roundtrip_nmax = std::min(lmax, 2);
            std::vector<CheckRecord> records;
            auto add = [&](std::vector<CheckRecord> r) { records.insert(records.end(), r.begin(), r.end()); };
            if (suite == "all" || suite == "complex")
                add(verify_complex(q, opt));
            if (suite == "all" || suite == "algebra")
                add(verify_algebra(q, opt));
            if (suite == "all" || suite == "bimodule")
                add(verify_bimodule(q, opt));
            if (suite == "all" || suite == "roundtrip")
                add(verify_roundtrip(q, opt));
            if (records.empty())
                throw py::value_error("unknown suite '" + suite + "'");
            py::list out;
            for (const auto& r : records)
                out.append(record_dict(r));
            return out;
        },
        py::arg("quiver"), py::arg("suite") = "all", py::arg("nmax") = 5, py::arg("lmin") = -4, py::arg("lmax") = 4,
        py::arg("seed") = 1, py::arg("fault") = "none", py::arg("roundtrip_bound") = 3, py::arg("trials") = 10,
        py::arg("field") = "Q");
}
