/*
 * Python bindings for the main operations: registry access, verification,
 * coboundary solving/classification, and Poisson superbrackets. Values cross
 * the boundary as canonical expression strings.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superbialg/report.hpp"

namespace py = pybind11;
using namespace sbg;

namespace {

std::vector<std::pair<SymId, Rational>> bindings(const std::map<std::string, std::string>& params) {
  std::vector<std::pair<SymId, Rational>> out;
  for (const auto& [k, v] : params) {
    Scalar s = parse_scalar(v);
    out.push_back({sym(k), s.is_zero() ? Rational(0) : s.terms()[0].coeff});
  }
  return out;
}

SuperBialgebra pair_with(const std::string& name, const std::map<std::string, std::string>& params) {
  auto pd = find_pair(name);
  if (!pd) throw std::out_of_range("unknown pair '" + name + "'");
  SuperAlgebra p = registry(pd->primal);
  SuperAlgebra d = registry(pd->dual);
  for (auto& [id, v] : bindings(params)) {
    bool in_p = false, in_d = false;
    for (const auto& f : p.f) in_p |= f.depends_on(id);
    for (const auto& f : d.f) in_d |= f.depends_on(id);
    if (in_p) p = p.bind_params({{id, v}});
    if (in_d) d = d.bind_params({{id, v}});
  }
  return make_bialgebra(p, d, name);
}

} // namespace

PYBIND11_MODULE(_superbialg, m) {
  m.doc() = "exact r-matrices and Poisson superbrackets of low-dimensional Lie super-bialgebras";

  m.def("algebras", [] { return registry_names(); });
  m.def("pairs", [] {
    std::vector<std::string> out;
    for (const auto& p : registry_pairs()) out.push_back(p.name);
    return out;
  });
  m.def("algebra_json", [](const std::string& name) { return algebra_to_json(registry(name)); });
  m.def(
      "simplify", [](const std::string& expr) { return parse_scalar(expr).str(); },
      "canonical form of an expression in the scalar grammar");
  m.def(
      "verify",
      [](const std::string& name, const std::map<std::string, std::string>& params) {
        if (registry_has(name)) {
          SuperAlgebra a = registry(name);
          for (auto& [id, v] : bindings(params)) a = a.bind_params({{id, v}});
          return validate(a).empty();
        }
        SuperBialgebra b = pair_with(name, params);
        return validate(b.primal).empty() && validate(b.dual).empty() &&
               mixed_jacobi_check(b).empty() && cocycle_check(b).empty();
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "solve",
      [](const std::string& pair, const std::string& side, bool skew,
         const std::map<std::string, std::string>& params) {
        SuperBialgebra b = pair_with(pair, params);
        SolutionSet set = solve_coboundary(b, side == "dual" ? Side::dual : Side::primal);
        if (skew && set.consistent) set = skew_reduce(set, b);
        return solution_set_json_string(set);
      },
      py::arg("pair"), py::arg("side") = "primal", py::arg("skew_reduce") = false,
      py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "poisson",
      [](const std::string& pair, const std::string& structure, const std::string& side,
         const std::map<std::string, std::string>& params) {
        SuperBialgebra b = pair_with(pair, params);
        Side s = side == "dual" ? Side::dual : Side::primal;
        SolutionSet set = skew_reduce(solve_coboundary(b, s), b);
        if (!set.consistent) throw std::runtime_error("side is not coboundary: " + set.witness);
        SMatrix r = set.particular;
        const SuperAlgebra& galg = s == Side::primal ? b.primal : b.dual;
        auto f = invariant_fields(maurer_cartan(group_parameterization(galg, s == Side::dual)));
        Structure st = structure == "L" ? Structure::L
                                        : structure == "R" ? Structure::R : Structure::full;
        return bracket_table_json_string(sklyanin(f, r, st));
      },
      py::arg("pair"), py::arg("structure") = "full", py::arg("side") = "primal",
      py::arg("params") = std::map<std::string, std::string>{});
  m.def("golden_status", [] {
    ReportStatus st;
    for (auto&& rs : {check_golden_r(), check_golden_fields(), check_golden_poisson()})
      for (auto& r : rs) {
        if (!r.ok) st.failures.push_back(r.id);
        st.results.push_back(r);
      }
    return std::make_pair(st.results.size(), st.failures);
  });
}
