#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "smallcancel/cancellation.hpp"
#include "smallcancel/cli.hpp"
#include "smallcancel/duals.hpp"
#include "smallcancel/flats.hpp"
#include "smallcancel/generators.hpp"
#include "smallcancel/io.hpp"

namespace py = pybind11;
using namespace smallcancel;

namespace {

TwoComplex generate_family(const std::string& family, int radius) {
  Family f = family_from_string(family);
  if (f == Family::PaperExample) return generate_paper_example(radius).complex;
  if (f == Family::QuasiFlatPlane) return generate_quasi_flat_plane(radius, [](int, int) { return true; }).complex;
  return generate_tiling(f, radius).complex;
}

FlatKind kind_from_name(const std::string& s) {
  if (s == "c6-plane") return FlatKind::HexagonalFlatPlane;
  if (s == "quasi") return FlatKind::QuasiFlatPlane;
  if (s == "c3t6") return FlatKind::Triangular;
  return flat_kind_from_string(s);
}

HellyMode helly_mode(const TwoComplex& X, const std::optional<std::string>& mode) {
  if (!mode) return check_condition_C(X, 6).holds() ? HellyMode::C6 : HellyMode::C4T4;
  if (*mode == "c6") return HellyMode::C6;
  if (*mode == "c4t4") return HellyMode::C4T4;
  throw std::invalid_argument("unknown Helly mode " + *mode);
}

py::tuple flat_tuple(const FlatResult& r) {
  if (r.certificate) return py::make_tuple(r.report, serialize(*r.certificate));
  return py::make_tuple(r.report, py::none());
}

}  // namespace

PYBIND11_MODULE(_smallcancel, m) {
  m.doc() = "Small cancellation complexes: checks, duals and flats";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumberingError>(m, "NumberingError", PyExc_ValueError);
  py::register_exception<OutOfPatch>(m, "OutOfPatch", PyExc_ValueError);

  py::class_<CheckReport>(m, "Report")
      .def_property_readonly("verdict", [](const CheckReport& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("witnesses", &CheckReport::witnesses)
      .def_readonly("timing_ms", &CheckReport::timing_ms)
      .def_property_readonly("holds", &CheckReport::holds)
      .def("to_json", &render_json)
      .def("to_text", &render_text)
      .def("__bool__", &CheckReport::holds)
      .def("__repr__", [](const CheckReport& r) {
        return "<Report " + std::string(to_string(r.verdict)) + ", " + std::to_string(r.witnesses.size()) +
               " witnesses>";
      });

  py::class_<TwoComplex>(m, "Complex")
      .def_static("load", [](const std::string& text) { return load_complex(text); }, py::arg("text"))
      .def_static("load_file", &load_complex_file, py::arg("path"))
      .def("serialize", [](const TwoComplex& X) { return serialize(X); })
      .def_property_readonly("name", &TwoComplex::name)
      .def_property_readonly("vertex_count", &TwoComplex::vertex_count)
      .def_property_readonly("edge_count", &TwoComplex::edge_count)
      .def_property_readonly("face_count", &TwoComplex::face_count)
      .def_property_readonly("vertex_ids", &TwoComplex::vertices)
      .def_property_readonly("face_ids",
                             [](const TwoComplex& X) {
                               std::vector<std::string> ids;
                               for (const auto& f : X.faces()) ids.push_back(f.id);
                               return ids;
                             })
      .def("euler_characteristic",
           [](const TwoComplex& X) {
             return static_cast<long>(X.vertex_count()) - static_cast<long>(X.edge_count()) +
                    static_cast<long>(X.face_count());
           })
      .def("__repr__", [](const TwoComplex& X) {
        std::ostringstream s;
        s << "<Complex " << X.name() << ": " << X.vertex_count() << " vertices, " << X.edge_count() << " edges, "
          << X.face_count() << " faces>";
        return s.str();
      });

  m.def("generate", &generate_family, py::arg("family"), py::arg("radius"),
        "Patch of triangular, square, hexagonal, quasi-flat-plane or paper-example.");
  m.def("quotient", [](const std::string& family, int mm, int n) {
    return quotient_by_lattice(family_from_string(family), mm, n).complex;
  }, py::arg("family"), py::arg("m"), py::arg("n"));
  m.def("validate", &validate_complex, py::arg("complex"), py::arg("embedded") = false);

  m.def("check_C", py::overload_cast<const TwoComplex&, int>(&check_condition_C), py::arg("complex"), py::arg("p"),
        py::call_guard<py::gil_scoped_release>());
  m.def("check_T", &check_condition_T, py::arg("complex"), py::arg("q"), py::call_guard<py::gil_scoped_release>());
  m.def("check_helly", [](const TwoComplex& X, std::optional<std::string> mode) {
    return check_helly(X, helly_mode(X, mode));
  }, py::arg("complex"), py::arg("mode") = py::none());
  m.def("check_strong_helly", [](const TwoComplex& X, std::optional<std::string> mode) {
    return check_strong_helly(X, helly_mode(X, mode));
  }, py::arg("complex"), py::arg("mode") = py::none());
  m.def("check_piece_length_bound", &check_piece_length_bound, py::arg("complex"), py::arg("q"));
  m.def("longest_piece", [](const TwoComplex& X) {
    std::size_t best = 0;
    const PieceSet pieces = enumerate_pieces(X);
    for (const auto& p : pieces.maximal()) best = std::max(best, p.path.size());
    return best;
  }, py::arg("complex"));

  m.def("nerve", [](const TwoComplex& X) { return serialize(build_nerve(X)); }, py::arg("complex"),
        "Text form of the nerve of the face cover.");
  m.def("quadrization", [](const TwoComplex& X) { return serialize(quadrize(X)); }, py::arg("complex"));
  m.def("check_dual", [](const TwoComplex& X, const std::string& kind, int k) {
    if (kind == "systolic") return check_systolic_links(build_nerve(X));
    if (kind == "quadric") return check_quadric_conditions(quadrize(X));
    if (kind == "k-large") return check_k_large(build_nerve(X), k);
    throw std::invalid_argument("unknown dual check " + kind);
  }, py::arg("complex"), py::arg("kind"), py::arg("k") = 6);

  m.def("gallery_distance",
        py::overload_cast<const TwoComplex&, std::string_view, std::string_view>(&gallery_distance),
        py::arg("complex"), py::arg("a"), py::arg("b"));
  m.def("dual_distance", [](const TwoComplex& X, const std::string& a, const std::string& b, const std::string& dual) {
    if (dual == "nerve") return graph_distance(build_nerve(X).one_skeleton(), a, b);
    if (dual == "quadrization")
      return graph_distance(quadrize(X).one_skeleton(), quad_face_name(a), quad_face_name(b));
    throw std::invalid_argument("unknown dual " + dual);
  }, py::arg("complex"), py::arg("a"), py::arg("b"), py::arg("dual") = "nerve");

  m.def("detect_flat", [](const TwoComplex& X, const std::string& kind, int margin,
                          std::optional<std::vector<std::string>> faces) {
    Subcomplex E = faces ? Subcomplex::from_ids(X, *faces) : Subcomplex::whole(X);
    FlatKind k = kind_from_name(kind);
    FlatResult r = [&] {
      py::gil_scoped_release release;
      return check_flat(k, X, E, margin);
    }();
    return flat_tuple(r);
  }, py::arg("complex"), py::arg("kind"), py::arg("margin") = 2, py::arg("faces") = py::none(),
        "Returns (report, certificate text or None). kind is c6-plane, quasi or c3t6.");
  m.def("reverify", [](const std::string& cert) { return reverify(parse_certificate(cert)).report; },
        py::arg("certificate"));
  m.def("check_embedding", [](const TwoComplex& X, const std::string& cert, int margin) {
    return check_flat_embedding(X, parse_certificate(cert), margin);
  }, py::arg("complex"), py::arg("certificate"), py::arg("margin") = 2);
  m.def("translate", [](const TwoComplex& X, const std::string& cert, int dx, int dy) {
    return flat_tuple(translate_subcomplex(X, parse_certificate(cert), dx, dy));
  }, py::arg("complex"), py::arg("certificate"), py::arg("dx"), py::arg("dy"));

  m.def("numbering", [](const TwoComplex& X, const std::string& rule, const std::array<std::string, 3>& seed,
                        std::size_t count) {
    NumberingRule r = rule == "c6" ? NumberingRule::C6 : NumberingRule::Quasi;
    if (rule != "c6" && rule != "quasi") throw std::invalid_argument("unknown rule " + rule);
    return numbering(X, r, seed, count).cells;
  }, py::arg("complex"), py::arg("rule"), py::arg("seed"), py::arg("count") = 25);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one command line; returns (exit code, stdout text, stderr text).");
}
