/*
 * report.cpp
 * ----------
 * JSON/markdown serialization of registry objects, solution sets and bracket
 * tables, plus the full table-regeneration run with its manifest. Output is
 * deterministic: fixed iteration order, ordered JSON, no timestamps.
 */
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "superbialg/conventions.hpp"
#include "superbialg/golden.hpp"
#include "superbialg/report.hpp"

namespace sbg {

using json = nlohmann::ordered_json;

namespace {

json algebra_json(const SuperAlgebra& a) {
  json j;
  j["name"] = a.name;
  j["dim"] = a.dim;
  json grading = json::array();
  for (auto p : a.grading) grading.push_back(p == Parity::odd ? "odd" : "even");
  j["grading"] = grading;
  json brackets = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int jj = i; jj < a.dim; ++jj)
      for (int k = 0; k < a.dim; ++k) {
        const Scalar& c = a.fc(k, i, jj);
        if (c.is_zero()) continue;
        brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"coeff", c.str()}});
      }
  j["brackets"] = brackets;
  json cons = json::array();
  for (const auto& c : a.constraints) cons.push_back(c.str() + " != 0");
  for (const auto& s : a.side_conditions) cons.push_back(s);
  j["constraints"] = cons;
  return j;
}

json matrix_json(const SMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
    rows.push_back(row);
  }
  return rows;
}

json rmatrix_json(const SMatrix& m) {
  json terms = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int jj = 0; jj < m.cols(); ++jj)
      if (!m.at(i, jj).is_zero())
        terms.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeff", m.at(i, jj).str()}});
  return terms;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

} // namespace

std::string algebra_to_json_string(const SuperAlgebra& a) { return algebra_json(a).dump(2) + "\n"; }

std::string solution_set_json_string(const SolutionSet& s) {
  json j;
  j["consistent"] = s.consistent;
  if (!s.consistent) {
    j["witness"] = s.witness;
  } else {
    j["particular"] = rmatrix_json(s.particular);
    json h = json::array();
    const char* even_names[] = {"a", "b", "c", "d", "e", "k", "m", "n"};
    const char* odd_names[] = {"zeta", "eta"};
    int ei = 0, oi = 0;
    for (std::size_t i = 0; i < s.homogeneous.size(); ++i) {
      json one;
      one["free_coefficient"] = s.hom_parity[i] == Parity::odd
                                    ? (oi < 2 ? odd_names[oi++] : "odd#" + std::to_string(i))
                                    : (ei < 8 ? even_names[ei++] : "c#" + std::to_string(i));
      one["parity"] = s.hom_parity[i] == Parity::odd ? "odd" : "even";
      one["terms"] = rmatrix_json(s.homogeneous[i]);
      h.push_back(one);
    }
    j["homogeneous"] = h;
  }
  json cons = json::array();
  for (const auto& c : s.constraints) cons.push_back(c.str() + " != 0");
  j["constraints"] = cons;
  return j.dump(2) + "\n";
}

std::string classification_json_string(const ClassificationResult& c) {
  json j;
  j["kind"] = kind_str(c.kind);
  j["graded_skew"] = c.skew;
  j["cybe"] = c.cybe;
  j["r"] = rmatrix_json(c.r);
  j["symmetric_part"] = rmatrix_json(c.symmetric_part);
  json sch = json::array();
  for (int i = 0; i < c.schouten_bracket.dim; ++i)
    for (int jj = 0; jj < c.schouten_bracket.dim; ++jj)
      for (int k = 0; k < c.schouten_bracket.dim; ++k)
        if (!c.schouten_bracket.at(i, jj, k).is_zero())
          sch.push_back({{"i", i + 1},
                         {"j", jj + 1},
                         {"k", k + 1},
                         {"coeff", c.schouten_bracket.at(i, jj, k).str()}});
  j["schouten"] = sch;
  j["factorizable_constraints"] = c.factorizable_constraints;
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

std::string bracket_table_json_string(const PoissonTable& t) {
  json j;
  j["algebra"] = t.param.alg.name;
  j["side"] = t.param.dual ? "dual" : "primal";
  j["structure"] = t.structure == Structure::full ? "full" : (t.structure == Structure::L ? "L" : "R");
  json entries = json::array();
  const auto& tab = SymbolTable::instance();
  for (int mu = 0; mu < t.param.alg.dim; ++mu)
    for (int nu = mu; nu < t.param.alg.dim; ++nu)
      entries.push_back({{"mu", tab.name(t.param.coords[static_cast<std::size_t>(mu)])},
                         {"nu", tab.name(t.param.coords[static_cast<std::size_t>(nu)])},
                         {"value", t.bracket.at(mu, nu).str()}});
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string bracket_table_markdown(const PoissonTable& t, const std::string& title) {
  std::ostringstream os;
  const auto& tab = SymbolTable::instance();
  os << "### " << title << "\n\n| bracket | value |\n|---|---|\n";
  for (int mu = 0; mu < t.param.alg.dim; ++mu)
    for (int nu = mu; nu < t.param.alg.dim; ++nu)
      os << "| {" << tab.name(t.param.coords[static_cast<std::size_t>(mu)]) << ", "
         << tab.name(t.param.coords[static_cast<std::size_t>(nu)]) << "} | "
         << t.bracket.at(mu, nu).str() << " |\n";
  os << "\n";
  return os.str();
}

ReportStatus report_all(const std::string& outdir) {
  namespace fs = std::filesystem;
  ReportStatus status;
  fs::create_directories(outdir);

  auto collect = [&](std::vector<CheckResult> results) {
    for (auto& r : results) {
      if (!r.ok) status.failures.push_back(r.id + ": " + r.detail);
      status.results.push_back(std::move(r));
    }
  };
  collect(check_golden_r());
  collect(check_golden_classes());
  collect(check_golden_bir());
  collect(check_golden_fields());
  collect(check_golden_poisson());
  collect(check_golden_axioms());

  // tables 5-7: regenerated r-matrices and Schouten brackets
  {
    json rows = json::array();
    std::ostringstream md;
    md << "## Coboundary r-matrices and Schouten brackets\n\n";
    for (const auto& row : golden_r_rows()) {
      SuperBialgebra b = golden_bialgebra(row);
      const SuperAlgebra& acting = row.side == Side::primal ? b.primal : b.dual;
      SMatrix r = build_tensor2(acting, row.r, row.bind);
      Tensor3 sch = schouten(r, acting);
      json one;
      one["id"] = row.id;
      one["pair"] = std::string("(") + row.primal + "," + row.dual + ")";
      one["side"] = row.side == Side::primal ? "primal" : "dual";
      one["comment"] = row.comment;
      one["r"] = rmatrix_json(r);
      json schj = json::array();
      for (int i = 0; i < sch.dim; ++i)
        for (int jj = 0; jj < sch.dim; ++jj)
          for (int k = 0; k < sch.dim; ++k)
            if (!sch.at(i, jj, k).is_zero())
              schj.push_back(
                  {{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"coeff", sch.at(i, jj, k).str()}});
      one["schouten"] = schj;
      rows.push_back(one);
      md << "- `" << row.id << "` (" << (row.side == Side::primal ? "r" : "r~") << ")"
         << (row.comment[0] ? std::string(" [") + row.comment + "]" : "") << "\n";
    }
    write_file(fs::path(outdir) / "tables_5_7_rmatrices.json", rows.dump(2) + "\n");
    write_file(fs::path(outdir) / "tables_5_7_rmatrices.md", md.str());
  }

  // tables 8-10: invariant fields
  {
    json rows = json::array();
    std::ostringstream md;
    md << "## Invariant supervector fields\n\n";
    for (const auto& row : golden_field_rows()) {
      SuperAlgebra alg = bind_algebra(row.algebra, row.bind);
      GroupParameterization p = group_parameterization(alg, row.dual_group);
      InvariantFields f = invariant_fields(maurer_cartan(p));
      json one;
      one["id"] = row.id;
      one["algebra"] = row.algebra;
      one["group"] = row.dual_group ? "dual" : "primal";
      one["X_Ll"] = matrix_json(f.XL_l);
      one["X_Lr"] = matrix_json(f.XL_r);
      one["X_Rl"] = matrix_json(f.XR_l);
      one["X_Rr"] = matrix_json(f.XR_r);
      rows.push_back(one);
      md << "### " << row.id << "\n\n`X^(L,l)`:\n\n```\n" << f.XL_l.str() << "\n```\n\n`X^(R,l)`:\n\n```\n"
         << f.XR_l.str() << "\n```\n\n";
    }
    write_file(fs::path(outdir) / "tables_8_10_fields.json", rows.dump(2) + "\n");
    write_file(fs::path(outdir) / "tables_8_10_fields.md", md.str());
  }

  // tables 11-14: Poisson superbrackets
  {
    json rows = json::array();
    std::ostringstream md;
    md << "## Poisson superbrackets\n\n";
    for (const auto& row : golden_poisson_rows()) {
      json one;
      one["id"] = row.id;
      one["pair"] = std::string("(") + row.primal + "," + row.dual + ")";
      one["group"] = row.group_side == Side::primal ? "primal" : "dual";
      one["comment"] = row.comment;
      SuperAlgebra galg = bind_algebra(row.group_side == Side::primal ? row.primal : row.dual, row.bind);
      GroupParameterization p = group_parameterization(galg, row.group_side == Side::dual);
      InvariantFields f = invariant_fields(maurer_cartan(p));
      SMatrix r = build_tensor2(galg, row.r, row.bind);
      one["r"] = rmatrix_json(r);
      bool cybe = schouten(r, galg).is_zero();
      json tables;
      for (Structure st : {Structure::full, Structure::L, Structure::R}) {
        if (st != Structure::full && !cybe) continue;
        PoissonTable t = sklyanin(f, r, st);
        const char* key = st == Structure::full ? "full" : (st == Structure::L ? "L" : "R");
        json entries = json::array();
        const auto& tab = SymbolTable::instance();
        for (int mu = 0; mu < galg.dim; ++mu)
          for (int nu = mu; nu < galg.dim; ++nu)
            entries.push_back({{"mu", tab.name(p.coords[static_cast<std::size_t>(mu)])},
                               {"nu", tab.name(p.coords[static_cast<std::size_t>(nu)])},
                               {"value", t.bracket.at(mu, nu).str()}});
        tables[key] = entries;
        md << bracket_table_markdown(t, std::string(row.id) + " [" + key + "]");
      }
      one["tables"] = tables;
      rows.push_back(one);
    }
    write_file(fs::path(outdir) / "tables_11_14_poisson.json", rows.dump(2) + "\n");
    write_file(fs::path(outdir) / "tables_11_14_poisson.md", md.str());
  }

  // status + manifest
  {
    json st;
    st["checks"] = json::array();
    for (const auto& r : status.results)
      st["checks"].push_back({{"id", r.id}, {"ok", r.ok}, {"detail", r.detail}});
    st["failed"] = status.failures.size();
    write_file(fs::path(outdir) / "status.json", st.dump(2) + "\n");

    json manifest;
    manifest["command"] = "report-all";
    manifest["inputs"] = "builtin catalog (tables 1-4) and embedded golden rows (tables 5-14)";
    manifest["conventions"] = conventions_fingerprint();
    manifest["outputs"] = {"tables_5_7_rmatrices.json", "tables_5_7_rmatrices.md",
                           "tables_8_10_fields.json",   "tables_8_10_fields.md",
                           "tables_11_14_poisson.json", "tables_11_14_poisson.md",
                           "status.json"};
    write_file(fs::path(outdir) / "manifest.json", manifest.dump(2) + "\n");
  }
  return status;
}

} // namespace sbg
