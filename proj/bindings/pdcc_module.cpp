/* pdcc_module.cpp
 *
 * Python bindings for the main operations: operator construction,
 * compatibility conditions, resolutions, Spencer cohomology, Janet
 * boards, duality and the verification suites. Exact rationals cross
 * the boundary as strings ("p/q"); matrices as nested lists of them.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdcc/duality.hpp"
#include "pdcc/json_io.hpp"
#include "pdcc/opmatrix.hpp"
#include "pdcc/poly.hpp"
#include "pdcc/resolution.hpp"
#include "pdcc/spencer.hpp"
#include "pdcc/systems.hpp"
#include "pdcc/verify.hpp"

namespace py = pybind11;
using namespace pdcc;

namespace {

Metric metric_from_string(const std::string& name, int n) {
  if (name == "euclidean") return euclidean_metric(n);
  if (name == "minkowski") return minkowski_metric(n);
  throw std::invalid_argument("unknown metric '" + name + "'");
}

OpMatrix make_builtin(const std::string& name, int dim, const std::string& metric) {
  SystemDescriptor desc{system_name_from_string(name), std::nullopt, dim};
  if (desc.name == SystemName::killing || desc.name == SystemName::conformal_killing) {
    if (dim < 2) throw std::invalid_argument("needs dim >= 2");
    desc.metric = metric_from_string(metric, dim);
  }
  return builtin_system(desc);
}

std::vector<std::vector<std::string>> qmatrix_to_lists(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows);
  for (int i = 0; i < m.rows; i++) {
    out[i].reserve(m.cols);
    for (int j = 0; j < m.cols; j++) out[i].push_back(to_string(m.at(i, j)));
  }
  return out;
}

std::vector<std::string> witnesses_to_json(const std::vector<ModuleElement>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const ModuleElement& w : ws) out.push_back(module_element_to_json(w).dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_pdcc, m) {
  m.doc() = "exact compatibility conditions, free resolutions and duality "
            "for constant-coefficient linear PDE operators over Q[d1..dn]";

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, int n) { return parse_poly(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_readonly("n", &Poly::n)
      .def("degree", &Poly::degree)
      .def("is_zero", &Poly::is_zero)
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__str__", [](const Poly& p) { return to_string(p); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + to_string(p) + "')"; });

  py::class_<OpMatrix>(m, "OpMatrix")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("rows"), py::arg("cols"))
      .def_readonly("n", &OpMatrix::n)
      .def_readonly("rows", &OpMatrix::rows)
      .def_readonly("cols", &OpMatrix::cols)
      .def("entry", [](const OpMatrix& a, int i, int j) { return a.entry.at(i).at(j); })
      .def("set_entry",
           [](OpMatrix& a, int i, int j, const Poly& p) {
             if (p.n != a.n) throw std::invalid_argument("variable count mismatch");
             a.entry.at(i).at(j) = p;
           })
      .def("set_entry",
           [](OpMatrix& a, int i, int j, const std::string& text) {
             a.entry.at(i).at(j) = parse_poly(text, a.n);
           })
      .def("is_zero", &OpMatrix::is_zero)
      .def("to_json", [](const OpMatrix& a) { return opmatrix_to_json(a).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return opmatrix_from_json(nlohmann::json::parse(text));
                  })
      .def("save", [](const OpMatrix& a, const std::string& path) { save_opmatrix(path, a); })
      .def_static("load", [](const std::string& path) { return load_opmatrix(path); })
      .def("__eq__", [](const OpMatrix& a, const OpMatrix& b) { return a == b; })
      .def("__str__", [](const OpMatrix& a) { return opmatrix_to_string(a); })
      .def("__repr__", [](const OpMatrix& a) {
        std::ostringstream s;
        s << "OpMatrix(n=" << a.n << ", " << a.rows << "x" << a.cols << ")";
        return s.str();
      });

  m.def("builtin_system", &make_builtin, py::arg("name"), py::arg("dim") = 0,
        py::arg("metric") = "euclidean",
        "named operators: killing, conformal-killing, example-3-9, example-3-13, "
        "example-3-13-involutive, example-4-15, gradient, triple-cc-3-14");
  m.def("adjoint", &adjoint, py::arg("a"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def(
      "compatibility_conditions",
      [](const OpMatrix& a) { return compatibility_conditions(a); }, py::arg("a"));
  m.def("trim_rows", &trim_rows, py::arg("a"));
  m.def("op_order", &op_order, py::arg("a"));
  m.def(
      "same_row_module",
      [](const OpMatrix& a, const OpMatrix& b) {
        return module_equal(rows_of(a), rows_of(b), default_order());
      },
      py::arg("a"), py::arg("b"), "row modules of a and b coincide in D^(1 x cols)");

  py::class_<RankReport>(m, "RankReport")
      .def_readonly("rank", &RankReport::rank)
      .def_readonly("confirmed_by_groebner", &RankReport::confirmed_by_groebner)
      .def_property_readonly("witness_point", [](const RankReport& r) {
        std::vector<std::string> out;
        for (const Q& c : r.witness_point) out.push_back(to_string(c));
        return out;
      });
  m.def(
      "generic_rank",
      [](const OpMatrix& a, std::uint64_t seed) { return generic_rank(a, seed); },
      py::arg("a"), py::arg("seed") = 0);

  py::class_<FreeResolution>(m, "FreeResolution")
      .def_readonly("steps", &FreeResolution::steps)
      .def_readonly("betti", &FreeResolution::betti)
      .def_readonly("orders", &FreeResolution::orders)
      .def_readonly("minimized", &FreeResolution::minimized)
      .def_readonly("warnings", &FreeResolution::warnings)
      .def("__repr__", [](const FreeResolution& r) {
        std::ostringstream s;
        s << "FreeResolution(betti=[";
        for (std::size_t i = 0; i < r.betti.size(); i++) s << (i ? "," : "") << r.betti[i];
        s << "])";
        return s.str();
      });
  m.def(
      "resolve",
      [](const OpMatrix& a, bool minimize, int max_length) {
        return resolve(a, minimize, max_length);
      },
      py::arg("a"), py::arg("minimize") = true, py::arg("max_length") = -1);
  m.def("euler_characteristic", &euler_characteristic, py::arg("resolution"));

  py::class_<ChainReport::Junction>(m, "Junction")
      .def_readonly("composition_zero", &ChainReport::Junction::composition_zero)
      .def_readonly("exact", &ChainReport::Junction::exact);
  py::class_<ChainReport>(m, "ChainReport")
      .def_readonly("pass_", &ChainReport::pass)
      .def_readonly("junctions", &ChainReport::junctions);
  m.def(
      "verify_chain", [](const FreeResolution& r) { return verify_chain(r); },
      py::arg("resolution"));

  py::class_<SymbolSystem>(m, "SymbolSystem")
      .def_readonly("n", &SymbolSystem::n)
      .def_readonly("m", &SymbolSystem::m)
      .def_readonly("q", &SymbolSystem::q);
  m.def(
      "symbol_of",
      [](const OpMatrix& a, int q) { return symbol_of(a, q < 0 ? op_order(a) : q); },
      py::arg("a"), py::arg("q") = -1,
      "degree-q homogeneous symbol; q defaults to the operator order");

  py::class_<SymbolBasis>(m, "SymbolBasis")
      .def_readonly("r", &SymbolBasis::r)
      .def_readonly("dim", &SymbolBasis::dim);
  m.def("prolong", &prolong, py::arg("symbol"), py::arg("r"));
  m.def("prolong_system", &prolong_system, py::arg("symbol"), py::arg("r"));

  py::class_<DeltaMap>(m, "DeltaMap")
      .def_readonly("s", &DeltaMap::s)
      .def_readonly("r", &DeltaMap::r)
      .def_property_readonly("shape",
                             [](const DeltaMap& d) {
                               return py::make_tuple(d.matrix.rows, d.matrix.cols);
                             })
      .def("rank", [](const DeltaMap& d) { return qm_rank(d.matrix); })
      .def("matrix", [](const DeltaMap& d) { return qmatrix_to_lists(d.matrix); });
  m.def("delta_map", &delta_map, py::arg("symbol"), py::arg("s"), py::arg("r"));

  py::class_<CohomologyReport>(m, "CohomologyReport")
      .def_readonly("s", &CohomologyReport::s)
      .def_readonly("r", &CohomologyReport::r)
      .def_readonly("dim_B", &CohomologyReport::dim_B)
      .def_readonly("dim_Z", &CohomologyReport::dim_Z)
      .def_readonly("dim_H", &CohomologyReport::dim_H);
  m.def("cohomology", &cohomology, py::arg("symbol"), py::arg("s"), py::arg("r"));
  m.def("is_s_acyclic", &is_s_acyclic, py::arg("symbol"), py::arg("s"), py::arg("r_max"));

  py::class_<JanetBoard>(m, "JanetBoard")
      .def_readonly("beta", &JanetBoard::beta)
      .def_readonly("alpha", &JanetBoard::alpha)
      .def_readonly("involutive", &JanetBoard::involutive)
      .def_readonly("attempts_used", &JanetBoard::attempts_used)
      .def_property_readonly("coordinate_change",
                             [](const JanetBoard& b) {
                               return qmatrix_to_lists(b.coordinate_change);
                             })
      .def_property_readonly("solved_equations", [](const JanetBoard& b) {
        py::list out;
        for (const SolvedEquation& eq : b.solved_equations) {
          std::vector<int> mu(eq.mu.n);
          for (int i = 0; i < eq.mu.n; i++) mu[i] = eq.mu[i];
          out.append(py::make_tuple(eq.cls, eq.k, mu));
        }
        return out;
      });
  m.def("janet_board", &janet_board, py::arg("symbol"), py::arg("attempts") = 12,
        py::arg("seed") = 0);
  m.def("janet_sequence", &janet_sequence, py::arg("symbol"), py::arg("board"));
  m.def("dim_prediction", &dim_prediction, py::arg("symbol"), py::arg("board"),
        py::arg("r"));

  py::class_<DualityReport>(m, "DualityReport")
      .def_readonly("input", &DualityReport::input)
      .def_readonly("adjoint_cc", &DualityReport::adjoint_cc)
      .def_readonly("candidate", &DualityReport::candidate)
      .def_readonly("exact", &DualityReport::exact)
      .def_readonly("parametrization", &DualityReport::parametrization)
      .def_property_readonly("torsion_witnesses", [](const DualityReport& r) {
        return witnesses_to_json(r.torsion_witnesses);
      });
  m.def(
      "double_duality_test", [](const OpMatrix& a) { return double_duality_test(a); },
      py::arg("a"));

  py::class_<AdjointSequenceReport>(m, "AdjointSequenceReport")
      .def_readonly("steps", &AdjointSequenceReport::steps)
      .def_readonly("exact", &AdjointSequenceReport::exact)
      .def_readonly("all_exact", &AdjointSequenceReport::all_exact)
      .def_property_readonly("witnesses", [](const AdjointSequenceReport& r) {
        std::vector<std::vector<std::string>> out;
        out.reserve(r.witnesses.size());
        for (const auto& ws : r.witnesses) out.push_back(witnesses_to_json(ws));
        return out;
      });
  m.def(
      "adjoint_sequence", [](const FreeResolution& r) { return adjoint_sequence(r); },
      py::arg("resolution"));

  py::class_<DimensionFormulas>(m, "DimensionFormulas")
      .def_readonly("riemann_dim", &DimensionFormulas::riemann_dim)
      .def_readonly("riemann_bianchi_dim", &DimensionFormulas::riemann_bianchi_dim)
      .def_readonly("conformal_F0_dim", &DimensionFormulas::conformal_F0_dim)
      .def_readonly("weyl_dim", &DimensionFormulas::weyl_dim)
      .def_readonly("weyl_bianchi_dim", &DimensionFormulas::weyl_bianchi_dim);
  m.def("dimension_formulas", &dimension_formulas, py::arg("n"));

  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("id", &ClaimResult::id)
      .def_readonly("statement", &ClaimResult::statement)
      .def_readonly("status", &ClaimResult::status)
      .def_readonly("detail", &ClaimResult::detail);
  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("suite", &VerifyReport::suite)
      .def_readonly("claims", &VerifyReport::claims)
      .def_readonly("passed", &VerifyReport::passed)
      .def_readonly("failed", &VerifyReport::failed)
      .def_readonly("reported", &VerifyReport::reported)
      .def("ok", &VerifyReport::ok);
  m.def(
      "run_suite",
      [](const std::string& suite, const std::string& fixtures_dir, bool include_n5,
         std::uint64_t seed) {
        VerifyOptions opt;
        opt.fixtures_dir = fixtures_dir;
        opt.include_n5 = include_n5;
        opt.seed = seed;
        return run_suite(suite, opt);
      },
      py::arg("suite"), py::arg("fixtures_dir") = "", py::arg("include_n5") = true,
      py::arg("seed") = 0, "suites: appendix, formulas, duality");
  m.def("default_fixtures_dir", &default_fixtures_dir);
}
