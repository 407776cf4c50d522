#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reorient/connectivity.hpp"
#include "reorient/exact.hpp"
#include "reorient/generate.hpp"
#include "reorient/io.hpp"
#include "reorient/polyalg.hpp"
#include "reorient/reductions.hpp"

namespace py = pybind11;
using namespace reorient;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<std::int64_t>());
  const auto f = py::module_::import("fractions").attr("Fraction")(h);
  return Rational(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
}

std::vector<Rational> to_weights(const std::optional<py::sequence>& seq) {
  std::vector<Rational> out;
  if (seq) {
    for (const auto& item : *seq) out.push_back(to_rational(item));
  }
  return out;
}

SearchOptions options(std::optional<py::object> budget, std::int64_t node_limit) {
  SearchOptions o;
  o.node_limit = node_limit;
  if (budget && !budget->is_none()) o.budget = to_rational(*budget);
  return o;
}

/// DIMACS-style signed literals, 1-based.
SatInstance sat_from(int num_vars, const std::vector<std::vector<int>>& clauses) {
  SatInstance sat;
  sat.num_vars = num_vars;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int l : c) {
      if (l == 0) throw std::invalid_argument("literal 0 is not allowed");
      lits.push_back(Literal{std::abs(l) - 1, l < 0});
    }
    sat.clauses.push_back(std::move(lits));
  }
  sat.validate();
  return sat;
}

std::vector<std::vector<int>> sat_clauses(const SatInstance& sat) {
  std::vector<std::vector<int>> out;
  for (const auto& c : sat.clauses) {
    std::vector<int> row;
    for (const auto& l : c) row.push_back(l.negated ? -(l.var + 1) : l.var + 1);
    out.push_back(std::move(row));
  }
  return out;
}

py::dict witness_dict(const ReductionWitness& w) {
  py::dict d;
  d["graph"] = w.instance;
  d["budget"] = w.budget;
  d["requirement"] = w.requirement ? py::cast(*w.requirement) : py::none();
  d["vertex_roles"] = w.vertex_roles;
  return d;
}

const auto kBudget = py::arg("budget") = py::none();
const auto kNodes = py::arg("node_limit") = 20'000'000;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact, polynomial and approximate solvers for reorientation problems on mixed graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);

  py::class_<MixedGraph>(m, "MixedGraph")
      .def(py::init<int>(), py::arg("num_vertices") = 0)
      .def_property_readonly("num_vertices", &MixedGraph::num_vertices)
      .def_property_readonly("num_edges", &MixedGraph::num_edges)
      .def_property_readonly("num_arcs", &MixedGraph::num_arcs)
      .def("add_vertex", &MixedGraph::add_vertex)
      .def("add_edge", &MixedGraph::add_edge, py::arg("u"), py::arg("v"), py::arg("label") = "")
      .def("add_arc", &MixedGraph::add_arc, py::arg("tail"), py::arg("head"), py::arg("label") = "")
      .def("edges",
           [](const MixedGraph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("arcs",
           [](const MixedGraph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& a : g.arcs()) out.emplace_back(a.tail, a.head);
             return out;
           })
      .def_static("from_text", [](const std::string& text) { return parse_instance_text(text).graph; })
      .def("to_text",
           [](const MixedGraph& g) {
             InstanceFile f;
             f.graph = g;
             return emit_instance_text(f);
           })
      .def("content_hash",
           [](const MixedGraph& g) {
             InstanceFile f;
             f.graph = g;
             return content_hash(emit_instance_text(f));
           })
      .def(py::self == py::self)
      .def("__repr__", [](const MixedGraph& g) {
        return "MixedGraph(n=" + std::to_string(g.num_vertices()) + ", edges=" + std::to_string(g.num_edges()) +
               ", arcs=" + std::to_string(g.num_arcs()) + ")";
      });

  py::class_<Requirement>(m, "Requirement")
      .def(py::init<int>())
      .def_static("uniform", &Requirement::uniform)
      .def("set", &Requirement::set)
      .def("__call__", &Requirement::operator())
      .def_property_readonly("size", &Requirement::size)
      .def("satisfied_by", &Requirement::satisfied_by);

  py::class_<ConnectivityTarget>(m, "Target")
      .def_static("strong", &ConnectivityTarget::strong, "l-vertex-strong")
      .def_static("arc", &ConnectivityTarget::arc, "k-arc-strong")
      .def_static("requirement", &ConnectivityTarget::requirement)
      .def("satisfied_by", &ConnectivityTarget::satisfied_by);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("feasible", &SolveResult::feasible)
      .def_property_readonly("optimum", [](const SolveResult& r) { return fraction(r.optimum); })
      .def_readonly("witness", &SolveResult::witness)
      .def_readonly("nodes_explored", &SolveResult::nodes_explored)
      .def("__repr__", [](const SolveResult& r) {
        return std::string("SolveResult(feasible=") + (r.feasible ? "True" : "False") +
               ", optimum=" + to_string(r.optimum) + ")";
      });

  // connectivity
  m.def("is_strong", &is_strong);
  m.def("is_k_arc_strong", &is_k_arc_strong);
  m.def("is_k_strong", &is_k_strong);
  m.def("is_k_edge_connected", &is_k_edge_connected);
  m.def("edge_connectivity", &edge_connectivity);
  m.def("local_arc_connectivity", &local_arc_connectivity);
  m.def("local_edge_connectivity", &local_edge_connectivity);
  m.def("orientation_condition", &check_kstrong_orientation_condition, py::arg("graph"), py::arg("k"));
  m.def("reverse_arcs", [](const MixedGraph& g, std::vector<int> idx) { return reverse_arcs(g, idx); });
  m.def("deorient_arcs", [](const MixedGraph& g, std::vector<int> idx) { return deorient_arcs(g, idx); });
  m.def("double_edges", [](const MixedGraph& g, std::vector<int> idx) { return double_edges(g, idx); });

  // exact
  m.def("min_reversals",
        [](const MixedGraph& g, const ConnectivityTarget& t, std::optional<py::object> b, std::int64_t n) {
          return min_reversals(g, t, options(b, n));
        },
        py::arg("graph"), py::arg("target"), kBudget, kNodes);
  m.def("min_deorientations",
        [](const MixedGraph& g, const ConnectivityTarget& t, std::optional<py::object> b, std::int64_t n) {
          return min_deorientations(g, t, options(b, n));
        },
        py::arg("graph"), py::arg("target"), kBudget, kNodes);
  m.def("min_doubling",
        [](const MixedGraph& g, int c, bool vertex_deleted, std::optional<py::sequence> w, std::optional<py::object> b,
           std::int64_t n) { return min_doubling(g, DoublingTarget{c, vertex_deleted}, to_weights(w), options(b, n)); },
        py::arg("graph"), py::arg("c") = 4, py::arg("vertex_deleted") = false, py::arg("weights") = py::none(),
        kBudget, kNodes);
  m.def("max_partial_orientation",
        [](const MixedGraph& g, const ConnectivityTarget& t, std::int64_t n) {
          return max_partial_orientation(g, t, options(std::nullopt, n));
        },
        py::arg("graph"), py::arg("target"), kNodes);
  m.def("find_orientation",
        [](const MixedGraph& g, const ConnectivityTarget& t, std::int64_t n) {
          return find_orientation(g, t, options(std::nullopt, n));
        },
        py::arg("graph"), py::arg("target"), kNodes);
  m.def("vertex_cover",
        [](const MixedGraph& g, std::optional<py::object> b, std::int64_t n) { return vertex_cover(g, options(b, n)); },
        py::arg("graph"), kBudget, kNodes);
  m.def("max2sat",
        [](int num_vars, const std::vector<std::vector<int>>& clauses) { return max2sat(sat_from(num_vars, clauses)); },
        py::arg("num_vars"), py::arg("clauses"));

  // polynomial and approximate
  m.def("w23eda",
        [](const MixedGraph& g, std::optional<py::sequence> w) { return w23eda(g, to_weights(w)); },
        py::arg("graph"), py::arg("weights") = py::none());
  m.def("degree_deorientation", &degree_deorientation, py::arg("digraph"), py::arg("k"));
  m.def("is_cactus", &is_cactus);
  m.def("robbins_partial_orientation",
        [](const MixedGraph& g, int k) {
          const auto r = robbins_partial_orientation(g, k);
          std::vector<int> codes;
          for (auto c : r.orientation.decisions) codes.push_back(static_cast<int>(c));
          return py::make_tuple(r.feasible, r.bound, codes);
        },
        py::arg("graph"), py::arg("k"));
  m.def("deor_2approx",
        [](const MixedGraph& d, int k, VertexId root) {
          const auto r = deor_k_arc_2approx(d, k, root);
          return py::make_tuple(r.feasible, r.arcs);
        },
        py::arg("digraph"), py::arg("k"), py::arg("root") = 0);
  m.def("m4eda_approx",
        [](const MixedGraph& g) {
          const auto r = m4eda_approx(g);
          return py::make_tuple(r.feasible, r.doubled);
        },
        py::arg("graph"));

  // reductions
  m.def("build_rocket",
        [](const std::string& kind, int k) {
          if (kind != "out" && kind != "in") throw std::invalid_argument("kind is 'out' or 'in'");
          return build_rocket(kind == "out" ? RocketKind::out : RocketKind::in, k).graph;
        },
        py::arg("kind"), py::arg("k"));
  m.def("reduce_i2vcomg_to_m2sar",
        [](const MixedGraph& g, std::vector<VertexId> t) { return witness_dict(reduce_i2vcomg_to_m2sar(g, t).witness); },
        py::arg("graph"), py::arg("terminals"));
  m.def("class_g_instance", [](const MixedGraph& cubic) { return class_g_instance(cubic).graph; });
  m.def("reduce_vc_to_4eda", [](const MixedGraph& g, int k) { return witness_dict(reduce_vc_to_4eda(g, k).witness); },
        py::arg("graph"), py::arg("k"));
  m.def("normalize_s3b",
        [](int num_vars, const std::vector<std::vector<int>>& clauses) {
          return sat_clauses(normalize_to_s3bmax2sat(sat_from(num_vars, clauses)).instance);
        },
        py::arg("num_vars"), py::arg("clauses"));
  m.def("reduce_s3b_to_3sdo",
        [](int num_vars, const std::vector<std::vector<int>>& clauses, int ell) {
          return witness_dict(reduce_s3bmax2sat_to_3sdo(sat_from(num_vars, clauses), ell).witness);
        },
        py::arg("num_vars"), py::arg("clauses"), py::arg("ell"));
  m.def("lift_3sdo_to_lstrong",
        [](const MixedGraph& d, int budget, int ell) { return witness_dict(lift_3sdo_to_lstrong(d, budget, ell)); },
        py::arg("digraph"), py::arg("budget"), py::arg("ell"));
  m.def("harden_lco",
        [](const MixedGraph& g, const Requirement& r) {
          const auto h = harden_lco(g, r);
          return py::make_tuple(h.graph, h.requirement);
        },
        py::arg("graph"), py::arg("requirement"));
  m.def("reduce_lco_to_lcdo",
        [](const MixedGraph& g, const Requirement& r) { return witness_dict(reduce_lco_to_lcdo(g, r).witness); },
        py::arg("graph"), py::arg("requirement"));

  // generators
  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("random_cactus", &random_cactus, py::arg("n"), py::arg("seed"));
  m.def("random_s3b_sat",
        [](int num_vars, std::uint64_t seed) { return sat_clauses(random_s3b_sat(num_vars, seed)); },
        py::arg("num_vars"), py::arg("seed"));
}
