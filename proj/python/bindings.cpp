#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clawcycle/detect.hpp"
#include "clawcycle/errors.hpp"
#include "clawcycle/hypercube.hpp"
#include "clawcycle/report.hpp"
#include "clawcycle/textio.hpp"
#include "clawcycle/verify.hpp"
#include "clawcycle/witness.hpp"

namespace py = pybind11;
using namespace clawcycle;

namespace {

VertexSet make_set(int n, const std::vector<std::uint32_t>& labels) {
    return VertexSet::from_labels(CubeDim(n), labels);
}

std::vector<std::uint32_t> labels_of(const VertexSet& s) {
    std::vector<std::uint32_t> out;
    for (auto v : s.members()) out.push_back(v.label);
    return out;
}

std::vector<std::uint32_t> to_labels(const std::vector<Vertex>& vs) {
    std::vector<std::uint32_t> out;
    for (auto v : vs) out.push_back(v.label);
    return out;
}

SetFormat set_format(const std::string& f) {
    if (f == "auto") return SetFormat::Auto;
    if (f == "binary") return SetFormat::Binary;
    if (f == "hex") return SetFormat::Hex;
    throw InvalidArgument("format must be auto, binary or hex");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Claw and induced-cycle witnesses in hypercube vertex subsets";

    auto base = py::register_exception<Error>(m, "ClawcycleError", PyExc_ValueError);
    py::register_exception<InsufficientCardinality>(m, "InsufficientCardinality", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init(&make_set), py::arg("n"), py::arg("labels") = std::vector<std::uint32_t>{})
        .def_static("full", [](int n) { return VertexSet::full(CubeDim(n)); })
        .def_static("from_hex", [](int n, const std::string& text) { return parse_set(text, CubeDim(n), SetFormat::Hex); })
        .def_property_readonly("n", [](const VertexSet& s) { return s.dim().value(); })
        .def("labels", &labels_of)
        .def("hex", &format_set_hex)
        .def("binary", &format_set_binary)
        .def("__len__", &VertexSet::size)
        .def("__contains__", [](const VertexSet& s, std::uint32_t l) { return l < s.dim().order() && s.test(l); })
        .def("__eq__", [](const VertexSet& a, const VertexSet& b) { return a == b; })
        .def("__repr__", [](const VertexSet& s) {
            return "VertexSet(n=" + std::to_string(s.dim().value()) + ", hex=" + format_set_hex(s) + ")";
        });

    py::class_<Claw>(m, "Claw")
        .def_property_readonly("center", [](const Claw& c) { return c.center.label; })
        .def_property_readonly("leaves", [](const Claw& c) {
            return std::vector<std::uint32_t>{c.leaves[0].label, c.leaves[1].label, c.leaves[2].label};
        })
        .def_property_readonly("kind", [](const Claw&) { return "claw"; });

    py::class_<InducedCycle>(m, "InducedCycle")
        .def_property_readonly("cycle", [](const InducedCycle& c) { return to_labels(c.cycle); })
        .def_property_readonly("kind", [](const InducedCycle&) { return "cycle"; });

    py::class_<ExtractionStep>(m, "ExtractionStep")
        .def_readonly("dim", &ExtractionStep::dim)
        .def_readonly("split_coord", &ExtractionStep::split_coord)
        .def_readonly("chosen_side", &ExtractionStep::chosen_side)
        .def_readonly("side_cardinalities", &ExtractionStep::side_cardinalities);

    py::class_<ExtractionTrace>(m, "ExtractionTrace")
        .def_readonly("steps", &ExtractionTrace::steps)
        .def_readonly("base", &ExtractionTrace::base);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check_name", &VerificationReport::check_name)
        .def_readonly("universe_size", &VerificationReport::universe_size)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("failed", &VerificationReport::failed)
        .def_readonly("counterexamples", &VerificationReport::counterexamples)
        .def_readonly("wall_time", &VerificationReport::wall_time)
        .def_readonly("worker_count", &VerificationReport::worker_count)
        .def_readonly("deterministic_digest", &VerificationReport::deterministic_digest)
        .def_readonly("informational", &VerificationReport::informational)
        .def_readonly("counters", &VerificationReport::counters)
        .def_readonly("findings", &VerificationReport::findings)
        .def("ok", &VerificationReport::ok)
        .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); });

    py::class_<ExtremalResult>(m, "ExtremalResult")
        .def_readonly("dim", &ExtremalResult::dim)
        .def_readonly("forbidden", &ExtremalResult::forbidden)
        .def_readonly("max_size", &ExtremalResult::max_size)
        .def_readonly("certificate", &ExtremalResult::certificate)
        .def_readonly("nodes_explored", &ExtremalResult::nodes_explored);

    m.def("adjacent", [](std::uint32_t u, std::uint32_t v, int n) { return adjacent(Vertex{u}, Vertex{v}, CubeDim(n)); });
    m.def("neighbors", [](std::uint32_t v, int n) { return to_labels(neighbors(Vertex{v}, CubeDim(n))); });
    m.def("split", &split, py::arg("set"), py::arg("coord"));
    m.def("embed", &embed, py::arg("set"), py::arg("coord"), py::arg("bit"));
    m.def("canonical_form", &canonical_form);

    m.def("induced_degree", [](const VertexSet& s, std::uint32_t v) { return induced_degree(s, Vertex{v}); });
    m.def("find_claw", &find_claw);
    m.def("find_induced_cycle", &find_induced_cycle, py::arg("set"), py::arg("k"));
    m.def("find_theorem_witness", &find_theorem_witness);
    m.def("check_witness", &check_witness);
    m.def("format_witness", [](const Witness& w, int n) { return format_witness(w, CubeDim(n)); });

    m.def("find_witness_inductive", [](const VertexSet& s) {
        auto r = find_witness_inductive(s);
        return py::make_tuple(r.witness, r.trace);
    });
    m.def("base_case_solve", &base_case_solve);
    m.def("base_case_solve_structured", [](const VertexSet& s) {
        auto r = base_case_solve_structured(s);
        return py::make_tuple(r.witness, r.case_id);
    });

    m.def("parse_set", [](const std::string& text, int n, const std::string& format) {
        return parse_set(text, CubeDim(n), set_format(format));
    }, py::arg("text"), py::arg("n"), py::arg("format") = "auto");

    m.def("verify_theorem_exhaustive", &verify_theorem_exhaustive, py::arg("n") = 4, py::arg("size") = 9,
          py::arg("workers") = 1, py::arg("symmetry_reduced") = false, py::call_guard<py::gil_scoped_release>());
    m.def("verify_proposition_exhaustive", &verify_proposition_exhaustive, py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_case_claims", &verify_case_claims, py::arg("case_id") = 0, py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("extremal_search", &extremal_search, py::arg("n"), py::arg("cycle_length") = 8,
          py::call_guard<py::gil_scoped_release>());
    m.def("random_agreement_test", &random_agreement_test, py::arg("n"), py::arg("trials"), py::arg("seed"),
          py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
}
