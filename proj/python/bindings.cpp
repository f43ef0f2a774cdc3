#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwc/corona_spectra.hpp"
#include "qwc/errors.hpp"
#include "qwc/graph_spec.hpp"
#include "qwc/json_io.hpp"
#include "qwc/state_transfer.hpp"

namespace py = pybind11;
using namespace qwc;

namespace {

// Vertex given as an address string ("base:i", "copy:i:j") or a (base, inner) tuple.
CoronaVertex to_corona_vertex(const py::object& obj, const Graph& g, const Graph& h) {
  if (py::isinstance<py::str>(obj)) {
    GraphSpec spec;
    spec.kind = GraphSpec::Kind::corona;
    spec.g = g;
    spec.h = h;
    return parse_corona_vertex(obj.cast<std::string>(), spec);
  }
  const auto t = obj.cast<std::pair<std::size_t, std::size_t>>();
  return {t.first, t.second};
}

CoronaParams params_of(const Graph& g, const Graph& h) {
  return CoronaParams::make(static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(h.order()),
                            require_regular(g, "G"), require_regular(h, "H"));
}

}  // namespace

PYBIND11_MODULE(_qwcorona, m) {
  m.doc() = "Signless Laplacian quantum walks on vertex complemented coronae";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidSupportError>(m, "InvalidSupportError", PyExc_ArithmeticError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("regular_degree", &Graph::regular_degree)
      .def("is_connected", &Graph::is_connected)
      .def("diameter", &Graph::diameter)
      .def("adjacency_matrix", &Graph::adjacency_matrix)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("generate", [](const std::string& s) { return generate(s); }, py::arg("spec"));
  m.def("parse_graph", [](const std::string& s) { return parse_graph_spec(s).graph(); }, py::arg("spec"),
        "Generator string, corona(G,H) or cocktail-corona:m, as a graph.");
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("empty_graph", &empty_graph);
  m.def("path_graph", &path_graph);
  m.def("cocktail_party_graph", &cocktail_party_graph);
  m.def("hypercube_graph", &hypercube_graph);
  m.def("halved_cube_graph", &halved_cube_graph);
  m.def("vertex_complemented_corona", &vertex_complemented_corona);
  m.def("signless_laplacian", &signless_laplacian);
  m.def("corona_index", [](std::size_t n1, std::size_t n2, std::size_t base, std::size_t inner) {
    return corona_index(n1, n2, {base, inner});
  });

  py::class_<QuadExt>(m, "QuadExt")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t>(), py::arg("a"), py::arg("b"), py::arg("delta"))
      .def_property_readonly("a", &QuadExt::a)
      .def_property_readonly("b", &QuadExt::b)
      .def_property_readonly("delta", &QuadExt::delta)
      .def("is_integer", &QuadExt::is_integer)
      .def("__float__", &QuadExt::value)
      .def("__eq__", [](const QuadExt& x, const QuadExt& y) { return x == y; })
      .def("__lt__", [](const QuadExt& x, const QuadExt& y) { return x < y; })
      .def("__hash__", [](const QuadExt& x) { return py::hash(py::make_tuple(x.a(), x.b(), x.delta())); })
      .def("__str__", &QuadExt::to_string)
      .def("__repr__", [](const QuadExt& x) { return "QuadExt(" + x.to_string() + ")"; });

  m.def("square_free_part", [](std::uint64_t n) {
    const auto d = square_free_part(n);
    return std::make_pair(d.s, d.c);
  }, "n = s^2 c with c square-free; returns (s, c).");
  m.def("recognize", [](double x, double tolerance) -> std::optional<QuadExt> {
    RecognitionOptions o;
    o.tolerance = tolerance;
    const auto r = recognize_quadext(x, o);
    return r.matched() ? r.value : std::nullopt;
  }, py::arg("x"), py::arg("tolerance") = 1e-9);

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_readonly("multiplicities", &SpectralDecomposition::multiplicities)
      .def_readonly("projectors", &SpectralDecomposition::projectors)
      .def_readonly("clustering_warning", &SpectralDecomposition::clustering_warning)
      .def("__len__", &SpectralDecomposition::size);

  m.def("decompose", [](const Graph& g, double cluster_tol) {
    SpectralOptions o;
    o.cluster_tol = cluster_tol;
    return decompose(signless_laplacian(g), o);
  }, py::arg("graph"), py::arg("cluster_tol") = 1e-7, "Spectral decomposition of Q = D + A.");
  m.def("transition_matrix", &transition_matrix, py::arg("dec"), py::arg("tau"));
  m.def("transition_amplitude", &transition_amplitude, py::arg("dec"), py::arg("u"), py::arg("v"),
        py::arg("tau"));
  m.def("fidelity_scan", [](const SpectralDecomposition& dec, std::size_t u, std::size_t v, double t_max,
                            std::size_t steps) {
    const auto s = fidelity_scan(dec, u, v, t_max, steps);
    std::vector<double> taus, fids;
    for (const auto& x : s.samples) {
      taus.push_back(x.tau);
      fids.push_back(x.fidelity);
    }
    return py::dict(py::arg("tau") = taus, py::arg("fidelity") = fids, py::arg("best_tau") = s.best.tau,
                    py::arg("best_fidelity") = s.best.fidelity);
  }, py::arg("dec"), py::arg("u"), py::arg("v"), py::arg("t_max"), py::arg("steps"));
  m.def("antipodal_identity_check", [](const Graph& g) { return antipodal_identity_check(g); });

  m.def("corona_spectrum_json", [](const Graph& g, const Graph& h, bool projectors) {
    return to_json(corona_spectrum(g, h), projectors).dump();
  }, py::arg("g"), py::arg("h"), py::arg("projectors") = false);
  m.def("corona_eigenvalues", [](const Graph& g, const Graph& h) {
    const auto spectrum = corona_spectrum(g, h);
    std::vector<std::pair<double, std::size_t>> out;
    for (const auto& e : spectrum.entries()) out.emplace_back(e.value, e.multiplicity);
    return out;
  }, "Closed-form (value, multiplicity) entries, not merged.");
  m.def("corona_transition_element", [](const Graph& g, const Graph& h, std::size_t u, std::size_t v,
                                        double tau) {
    return corona_transition_element(decompose(signless_laplacian(g)), params_of(g, h), u, v, tau);
  }, py::arg("g"), py::arg("h"), py::arg("u"), py::arg("v"), py::arg("tau"));
  m.def("corona_full_q", &corona_full_q);

  m.def("certify_pst_json", [](const Graph& g, std::size_t u, std::size_t v) {
    return to_json(certify_pst(decompose(signless_laplacian(g)), u, v)).dump();
  });
  m.def("check_corona_pst_json", [](const Graph& g, const Graph& h, const py::object& a, const py::object& b) {
    return to_json(check_corona_pst(g, h, to_corona_vertex(a, g, h), to_corona_vertex(b, g, h))).dump();
  });
  m.def("k2_corona_json", [](std::int64_t n2, std::int64_t r2) { return to_json(k2_corona_no_pst(n2, r2)).dump(); });
  m.def("periodicity_json", [](const std::vector<QuadExt>& support) {
    return to_json(is_periodic_vertex(support)).dump();
  });
  m.def("pgst_search_json", [](const Graph& g, const Graph& h, std::size_t u, std::size_t v, double epsilon,
                               std::int64_t l_bound) {
    return to_json(pgst_time_search(decompose(signless_laplacian(g)), params_of(g, h), u, v, epsilon, l_bound))
        .dump();
  });
  m.def("pgst_cocktail_json", [](std::int64_t m_, double epsilon, std::int64_t l_bound) {
    return to_json(pgst_cocktail(m_, epsilon, l_bound)).dump();
  });
}
