#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steinersurf/coloring.hpp"
#include "steinersurf/complex.hpp"
#include "steinersurf/embedding.hpp"
#include "steinersurf/error.hpp"
#include "steinersurf/gf2d.hpp"
#include "steinersurf/io.hpp"
#include "steinersurf/isomorphism.hpp"
#include "steinersurf/sphere.hpp"
#include "steinersurf/steiner.hpp"

namespace py = pybind11;
using namespace steinersurf;

namespace {

SearchEngine engine_from(const std::string& e) {
  if (e == "auto") return SearchEngine::Auto;
  if (e == "backtrack") return SearchEngine::Backtrack;
  if (e == "clause") return SearchEngine::Clause;
  throw Error(ErrorCode::InvalidArgument, "engine must be auto, backtrack or clause");
}

py::dict report_dict(const ManifoldReport& r) {
  py::dict d;
  d["dimension"] = r.dimension;
  d["euler"] = r.euler;
  d["f"] = r.f.counts;
  d["orientable"] = r.orientable;
  d["genus"] = r.surface ? py::object(py::int_(r.surface->genus)) : py::object(py::none());
  return d;
}

// Either a projective system with a polynomial/monomial, or a Bose system
// with one of its built-in transversals.
std::pair<SteinerQuasigroup, Permutation> system_and_transversal(int pg, int bose_s, std::uint32_t monomial,
                                                                 const std::string& poly, const std::string& kind) {
  if ((pg > 0) == (bose_s > 0)) throw Error(ErrorCode::InvalidArgument, "give exactly one of pg and bose");
  if (pg > 0) {
    FieldGF2d f(pg);
    if ((monomial > 0) == !poly.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of monomial and poly");
    auto t = poly.empty() ? eval_permutation_monomial(f, monomial)
                          : eval_permutation_polynomial(f, parse_polynomial(f, poly));
    return {quasigroup_of(projective_sts(f)), t};
  }
  if (kind != "orientable" && kind != "nonorientable")
    throw Error(ErrorCode::InvalidArgument, "kind must be orientable or nonorientable");
  auto k = kind == "orientable" ? TransversalKind::Orientable : TransversalKind::Nonorientable;
  return {quasigroup_of(bose(bose_s)), bose_transversal(bose_s, k)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Steiner triple systems, their surfaces and (k,2)-colorings";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args are (code, message)
      PyErr_SetObject(error.ptr(), py::make_tuple(to_string(e.code()), e.what()).ptr());
    }
  });

  py::class_<SimplicialComplex>(m, "Complex")
      .def(py::init<std::vector<Facet>, std::string>(), py::arg("facets"), py::arg("name") = "")
      .def_property_readonly("facets", &SimplicialComplex::facets)
      .def_property_readonly("vertices", &SimplicialComplex::vertices)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("name", &SimplicialComplex::name)
      .def("__len__", &SimplicialComplex::num_facets)
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& k) {
        return "<Complex " + (k.name().empty() ? std::string("") : k.name() + " ") + format_fvector(f_vector(k)) + ">";
      });

  m.def("parse_facets", &parse_facet_text, py::arg("text"));
  m.def("format_facets", [](const SimplicialComplex& k) { return format_facet_text(k); }, py::arg("complex"));
  m.def("f_vector", [](const SimplicialComplex& k) { return f_vector(k).counts; }, py::arg("complex"));
  m.def("classify", [](const SimplicialComplex& k) { return report_dict(classify_closed_manifold(k)); },
        py::arg("complex"), "Closed-manifold classification; raises Error when k is not one.");

  m.def("torus_7", &torus_7);
  m.def("rp2_6", &rp2_6);
  m.def("ball_b15", &ball_b15);
  m.def("sphere167", [] { return build_non_4_2_colorable_sphere().sphere; });
  m.def("cyclic_polytope_boundary", &cyclic_polytope_boundary, py::arg("m"), py::arg("dim") = 4);
  m.def("bose", [](int s) { return bose(s).to_complex(); }, py::arg("s"));
  m.def("affine_sts", [](int k) { return affine_sts(k).to_complex(); }, py::arg("k"));
  m.def(
      "projective_sts",
      [](int d, std::optional<std::uint32_t> modulus) { return projective_sts(FieldGF2d(d, modulus)).to_complex(); },
      py::arg("d"), py::arg("modulus") = py::none());

  m.def(
      "color",
      [](const SimplicialComplex& k, int colors, int s, std::vector<Facet> removed, int threads,
         std::uint64_t node_limit, double time_limit, const std::string& engine) {
        auto p = make_coloring_problem(k, colors, s, std::move(removed));
        SearchOptions o;
        o.threads = threads;
        o.node_limit = node_limit;
        o.time_limit = time_limit;
        o.engine = engine_from(engine);
        SearchOutcome r;
        {
          py::gil_scoped_release release;
          r = search_coloring(p, o);
        }
        py::dict d;
        d["status"] = to_string(r.status);
        d["coloring"] = r.witness ? py::object(py::cast(r.witness->assignment)) : py::object(py::none());
        d["nodes"] = r.stats.nodes;
        d["seconds"] = r.stats.seconds;
        d["engine"] = r.stats.engine;
        return d;
      },
      py::arg("complex"), py::arg("k"), py::arg("s") = 2, py::arg("removed") = std::vector<Facet>{},
      py::arg("threads") = 1, py::arg("node_limit") = 0, py::arg("time_limit") = 0.0, py::arg("engine") = "auto");
  m.def(
      "verify_coloring",
      [](const SimplicialComplex& k, const std::map<Vertex, int>& coloring, int colors, int s,
         std::vector<Facet> removed) {
        auto p = make_coloring_problem(k, colors, s, std::move(removed));
        return verify_coloring(p, Coloring{coloring, colors}).valid;
      },
      py::arg("complex"), py::arg("coloring"), py::arg("k"), py::arg("s") = 2,
      py::arg("removed") = std::vector<Facet>{});
  m.def(
      "chromatic_number",
      [](const SimplicialComplex& k, int max_k, int s, double time_limit) -> std::optional<int> {
        SearchOptions o;
        o.time_limit = time_limit;
        ChromaticResult r;
        {
          py::gil_scoped_release release;
          r = chromatic_number(k, s, max_k, o);
        }
        return r.value;
      },
      py::arg("complex"), py::arg("max_k"), py::arg("s") = 2, py::arg("time_limit") = 0.0,
      "None when the value exceeds max_k or a run hit the time limit.");

  m.def(
      "steiner_surface",
      [](int pg, int bose_s, std::uint32_t monomial, const std::string& poly, const std::string& kind) {
        auto [mu, t] = system_and_transversal(pg, bose_s, monomial, poly, kind);
        return steiner_surface(mu, t);
      },
      py::arg("pg") = 0, py::arg("bose") = 0, py::arg("monomial") = 0, py::arg("poly") = "",
      py::arg("kind") = "orientable");
  m.def(
      "analyze_transversal",
      [](int pg, int bose_s, std::uint32_t monomial, const std::string& poly, const std::string& kind) {
        auto [mu, t] = system_and_transversal(pg, bose_s, monomial, poly, kind);
        auto r = analyze_transversal(mu, t);
        py::dict d;
        d["transversal"] = r.is_transversal;
        d["disjoint"] = r.disjoint;
        d["orientable"] = r.orientable ? py::object(py::bool_(*r.orientable)) : py::object(py::none());
        return d;
      },
      py::arg("pg") = 0, py::arg("bose") = 0, py::arg("monomial") = 0, py::arg("poly") = "",
      py::arg("kind") = "orientable");

  m.def(
      "embed",
      [](const SimplicialComplex& sts, bool orientable, int star_vertex) {
        EmbedOptions o;
        o.orientable = orientable;
        o.star_vertex = star_vertex;
        auto st = embed_max_genus(sts_from_complex(sts), o);
        auto done = complete_to_triangulation(st);
        py::dict d;
        d["complex"] = done.complex;
        d["cycle"] = st.cycle;
        d["expected_genus"] = done.expected_genus;
        return d;
      },
      py::arg("sts"), py::arg("orientable") = true, py::arg("star_vertex") = 1);

  m.def("find_isomorphism", &find_isomorphism, py::arg("a"), py::arg("b"));
}
