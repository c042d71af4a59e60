// Python bindings for the core operations.  Counts come back as native
// python ints (arbitrary precision), vertex sets as 0-indexed lists.

#include "accdom/accurate.hpp"
#include "accdom/audit.hpp"
#include "accdom/closed_forms.hpp"
#include "accdom/domination.hpp"
#include "accdom/graph.hpp"
#include "accdom/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace accdom;

namespace {

py::int_ to_py(const Count& c) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::list to_py(const CountPolynomial& p) {
    py::list out;
    for (const Count& c : p.coeffs) out.append(to_py(c));
    return out;
}

VertexSet set_from(const Graph& g, const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) {
        if (v < 0 || v >= g.n()) throw input_error("vertex out of range");
        s.add(v);
    }
    return s;
}

SweepOptions sweep(int workers, int guard) { return {workers, guard}; }

}  // namespace

PYBIND11_MODULE(accdom, m) {
    m.doc() = "exact counting and enumeration of accurate dominating sets";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("neighbors", [](const Graph& g, int v) {
            if (v < 0 || v >= g.n()) throw input_error("vertex out of range");
            return g.adj(v).members();
        })
        .def("degree_sequence", &Graph::degree_sequence)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("family", [](const std::string& spec) { return realize(parse_family_spec(spec)); },
          py::arg("spec"), "build a graph from a family spec like 'path:7' or 'corona:complete:2'");
    m.def("corona_k1", &corona_k1);
    m.def("graph_join", &join);
    m.def("cartesian_product", &cartesian_product);

    m.def("is_dominating",
          [](const Graph& g, const std::vector<int>& d) { return is_dominating(g, set_from(g, d)); });
    m.def("is_accurate",
          [](const Graph& g, const std::vector<int>& d) { return is_accurate(g, set_from(g, d)); });
    m.def("is_accurate_naive", [](const Graph& g, const std::vector<int>& d) {
        return is_accurate_naive(g, set_from(g, d));
    });
    m.def("gamma", &accdom::gamma);  // qualified: libm declares ::gamma
    m.def("gamma_a", &accdom::gamma_a);
    m.def("min_dominating_within", [](const Graph& g, const std::vector<int>& allowed) {
        return min_dominating_within(g, set_from(g, allowed));
    });

    m.def("count_dominating",
          [](const Graph& g, int i, int workers, int guard) {
              return to_py(count_dominating(g, i, sweep(workers, guard)));
          },
          py::arg("g"), py::arg("i"), py::arg("workers") = 1, py::arg("guard") = kSweepGuard);
    m.def("count_accurate",
          [](const Graph& g, int i, int workers, int guard) {
              return to_py(count_accurate(g, i, sweep(workers, guard)));
          },
          py::arg("g"), py::arg("i"), py::arg("workers") = 1, py::arg("guard") = kSweepGuard);
    m.def("enumerate_accurate",
          [](const Graph& g, int i, int workers, int guard) {
              py::list out;
              for (VertexSet s : enumerate_accurate(g, i, sweep(workers, guard)))
                  out.append(s.members());
              return out;
          },
          py::arg("g"), py::arg("i"), py::arg("workers") = 1, py::arg("guard") = kSweepGuard);
    m.def("domination_polynomial",
          [](const Graph& g, int workers, int guard) {
              return to_py(domination_polynomial(g, sweep(workers, guard)));
          },
          py::arg("g"), py::arg("workers") = 1, py::arg("guard") = kSweepGuard);
    m.def("accurate_polynomial",
          [](const Graph& g, int workers, int guard) {
              return to_py(accurate_polynomial(g, sweep(workers, guard)));
          },
          py::arg("g"), py::arg("workers") = 1, py::arg("guard") = kSweepGuard);

    m.def("threshold", &threshold);
    m.def("gamma_a_closed",
          [](const std::string& spec) { return gamma_a_closed(parse_family_spec(spec)); });
    m.def("corona_count", [](long long n, long long mm) { return to_py(corona_count(n, mm)); });
    m.def("corona_polynomial",
          [](long long n, bool corrected) {
              return to_py(corona_polynomial(
                  n, corrected ? CoronaVariant::corrected : CoronaVariant::printed));
          },
          py::arg("n"), py::arg("corrected") = true);
    m.def("llano_path_count",
          [](long long n, long long k) { return to_py(llano_path_count(n, k)); });
    m.def("llano_cycle_count", [](long long n, long long k, const std::string& reading) {
        CycleReading r = reading == "product" ? CycleReading::product
                         : reading == "sum"   ? CycleReading::sum
                                              : CycleReading::difference;
        return to_py(llano_cycle_count(n, k, r));
    });
    m.def("path_table", [](int n_max) {
        py::dict rows;
        DominationTable t = DominationTable::paths(n_max);
        for (int n = 1; n <= n_max; ++n) {
            py::list row;
            for (const Count& c : t.row(n)) row.append(to_py(c));
            rows[py::int_(n)] = row;
        }
        return rows;
    });
    m.def("cycle_table", [](int n_max) {
        py::dict rows;
        DominationTable t = DominationTable::cycles(n_max);
        for (int n = 3; n <= n_max; ++n) {
            py::list row;
            for (const Count& c : t.row(n)) row.append(to_py(c));
            rows[py::int_(n)] = row;
        }
        return rows;
    });

    m.def("audit_formula_json",
          [](const std::string& name, int lo, int hi) {
              auto id = parse_formula_id(name);
              if (!id) throw parse_error("unknown formula id '" + name + "'");
              Auditor a;
              AuditRange range = lo == 0 && hi == 0 ? default_formula_range(*id)
                                                    : AuditRange{lo, hi};
              return report_to_json(a.audit_formula(*id, range));
          },
          py::arg("name"), py::arg("lo") = 0, py::arg("hi") = 0);
    m.def("audit_bound_json",
          [](const std::string& name, int lo, int hi) {
              auto id = parse_bound_id(name);
              if (!id) throw parse_error("unknown bound id '" + name + "'");
              Auditor a;
              AuditRange range = lo == 0 && hi == 0 ? default_bound_range(*id)
                                                    : AuditRange{lo, hi};
              return report_to_json(a.audit_bound(*id, range));
          },
          py::arg("name"), py::arg("lo") = 0, py::arg("hi") = 0);
}
