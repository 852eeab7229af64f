#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgl/scenario.hpp"

namespace py = pybind11;

namespace {

using namespace hgl;

struct PyRing {
  RingPtr ptr;
};

PyRing make_ring(const std::vector<std::string>& vars, long long characteristic,
                 const std::vector<int>& weights, const std::string& relation) {
  RingPtr base = Ring::make(vars, characteristic, weights);
  if (relation.empty()) return {base};
  return {base->with_relations({Polynomial::parse(base, relation)})};
}

Ideal make_ideal(const PyRing& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(Polynomial::parse(ring.ptr, g));
  return Ideal(ring.ptr, std::move(ps));
}

Submodule make_coker(const PyRing& ring, int rows,
                     const std::vector<std::vector<std::string>>& matrix) {
  std::vector<ModuleElement> cols;
  if (!matrix.empty()) {
    size_t ncols = matrix[0].size();
    for (const auto& row : matrix)
      if (row.size() != ncols) throw std::invalid_argument("ragged relation matrix");
    for (size_t c = 0; c < ncols; ++c) {
      ModuleElement col(ring.ptr, rows);
      for (int r = 0; r < rows; ++r)
        col.comp(r) = Polynomial::parse(ring.ptr, matrix[r][c]);
      cols.push_back(std::move(col));
    }
  }
  return Submodule::cokernel(ring.ptr, rows, std::move(cols));
}

std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebner().gens) out.push_back(g.comp(0).str());
  return out;
}

py::object opt_len(const std::optional<long long>& v) {
  if (!v) return py::none();
  return py::cast(*v);
}

std::string run_text(const std::string& text, const std::string& name,
                     std::optional<int> max_period, const std::string& format) {
  ScenarioSpec spec = parse_scenario(text);
  spec.name = name;
  RunOptions opts;
  if (max_period) opts.max_period_override = *max_period;
  RunReport report = run_scenario(spec, opts);
  return format == "csv" ? report_csv(report) : report_json(report);
}

}  // namespace

PYBIND11_MODULE(_hgl, m) {
  m.doc() = "length growth of Ext/Tor along ideal powers: exact algebra kernel";

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("vars"),
           py::arg("characteristic") = kDefaultCharacteristic,
           py::arg("weights") = std::vector<int>{}, py::arg("relation") = "")
      .def_property_readonly("vars", [](const PyRing& r) { return r.ptr->vars(); })
      .def_property_readonly("characteristic",
                             [](const PyRing& r) { return r.ptr->characteristic(); })
      .def("__repr__", [](const PyRing& r) {
        std::string s = "Ring(";
        for (size_t i = 0; i < r.ptr->nvars(); ++i)
          s += (i ? ", " : "") + r.ptr->vars()[i];
        if (!r.ptr->relations().empty()) s += " / " + r.ptr->relations()[0].str();
        return s + ")";
      });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("ring"), py::arg("gens"))
      .def("gens", [](const Ideal& I) {
        std::vector<std::string> out;
        for (const auto& g : I.gens()) out.push_back(g.str());
        return out;
      })
      .def("groebner", &gb_strings)
      .def("contains", [](const Ideal& I, const std::string& p) {
        return I.contains(Polynomial::parse(I.ring(), p));
      })
      .def("power", [](const Ideal& I, long long n) { return ideal_power(I, n); })
      .def("colon",
           [](const Ideal& I, const std::string& g) {
             return colon(I, Polynomial::parse(I.ring(), g));
           })
      .def("colon_ideal", [](const Ideal& I, const Ideal& K) { return colon(I, K); })
      .def("saturate",
           [](const Ideal& I, const Ideal& K) {
             auto [s, idx] = saturate(I, K);
             return py::make_tuple(s, idx);
           })
      .def("intersect", [](const Ideal& I, const Ideal& J) { return intersect(I, J); })
      .def("dim", &krull_dim)
      .def("quotient_length", [](const Ideal& I) { return opt_len(quotient_length(I)); })
      .def("quotient_hilbert", &quotient_hilbert)
      .def("analytic_spread", [](const Ideal& I) { return analytic_spread(I); })
      .def("symbolic_power", [](const Ideal& I, long long n) { return symbolic_power(I, n); })
      .def("__repr__", [](const Ideal& I) {
        std::string s = "Ideal(";
        for (size_t i = 0; i < I.gens().size(); ++i)
          s += (i ? ", " : "") + I.gens()[i].str();
        return s + ")";
      });

  py::class_<Submodule>(m, "Module")
      .def(py::init(&make_coker), py::arg("ring"), py::arg("rank"), py::arg("relations"))
      .def_static(
          "free",
          [](const PyRing& ring, int rank) { return Submodule::free_module(ring.ptr, rank); },
          py::arg("ring"), py::arg("rank"))
      .def_static("quotient_by_ideal", &Submodule::quotient_by_ideal)
      .def("length", [](const Submodule& M) { return opt_len(length(M)); })
      .def("hilbert", &hilbert_function)
      .def("rank", &Submodule::rank);

  m.def("ext_length",
        [](int i, const Submodule& A, const Submodule& B) {
          return opt_len(ext_module(i, A, B).len);
        },
        py::arg("i"), py::arg("first"), py::arg("second"));
  m.def("tor_length",
        [](int i, const Submodule& A, const Submodule& B) {
          return opt_len(tor_module(i, A, B).len);
        },
        py::arg("i"), py::arg("first"), py::arg("second"));
  m.def("h0m_length", [](const Ideal& J) {
    return opt_len(local_cohomology_h0(J, Ideal::irrelevant(J.ring())).len);
  });
  m.def("power_quotient", &power_quotient, py::arg("module"), py::arg("ideal"), py::arg("n"));

  m.def("veronese_oracle", [](long long n0, long long n1) {
    LengthSequence seq = run_oracle_veronese(n0, n1);
    std::vector<long long> out;
    for (const auto& v : seq.values) out.push_back(*v);
    return out;
  });

  m.def("fit_values",
        [](long long n0, const std::vector<long long>& values, int max_period,
           int max_degree) -> py::object {
          LengthSequence seq;
          seq.n0 = n0;
          for (long long v : values) seq.values.push_back(v);
          auto rep = fit_quasipolynomial(seq, max_period, max_degree);
          if (!rep) return py::none();
          py::dict d;
          d["period"] = rep->period;
          d["degree"] = rep->degree;
          d["stable_from"] = rep->stable_from;
          d["nlc"] = rep->normalized_leading_coefficient.str();
          d["nlc_is_integer"] = rep->nlc_is_integer;
          py::list classes;
          for (const auto& c : rep->classes) {
            py::dict cd;
            cd["residue"] = c.residue;
            cd["degree"] = c.degree;
            std::vector<std::string> coeffs;
            for (const auto& q : c.coeffs) coeffs.push_back(q.str());
            cd["coefficients"] = coeffs;
            cd["formula"] = rat_poly_str(c.coeffs);
            classes.append(cd);
          }
          d["classes"] = classes;
          return d;
        },
        py::arg("n0"), py::arg("values"), py::arg("max_period") = 6,
        py::arg("max_degree") = 6);

  m.def("builtin_scenarios", [] { return builtin_scenario_names(); });
  m.def("run_builtin",
        [](const std::string& name, std::optional<int> max_period,
           const std::string& format) {
          if (name == "artin-rees-probe") {
            auto rep = run_artin_rees_probe();
            return format == "csv" ? probe_csv(rep) : probe_json(rep);
          }
          auto text = builtin_scenario_text(name);
          if (!text) throw std::invalid_argument("unknown scenario: " + name);
          return run_text(*text, name, max_period, format);
        },
        py::arg("name"), py::arg("max_period") = py::none(),
        py::arg("format") = "json");
  m.def("run_scenario_text",
        [](const std::string& text, std::optional<int> max_period,
           const std::string& format) { return run_text(text, "", max_period, format); },
        py::arg("text"), py::arg("max_period") = py::none(),
        py::arg("format") = "json");
}
