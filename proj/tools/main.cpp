/*
 * superbialg CLI: registry browsing, verification, coboundary solving and
 * classification, Poisson superbrackets, and regeneration of the result
 * tables against the embedded golden data.
 *
 * Exit codes: 0 success, 1 verification/golden mismatch, 2 usage error.
 */
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superbialg/report.hpp"

using namespace sbg;
using json = nlohmann::ordered_json;

namespace {

std::vector<std::pair<SymId, Rational>> parse_bindings(const std::vector<std::string>& params) {
  std::vector<std::pair<SymId, Rational>> out;
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--params expects name=value, got " + kv);
    std::string name = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    Scalar s = parse_scalar(val);
    if (!s.is_param_rational() || !s.denominator().is_one() || s.terms().size() > 1 ||
        (!s.is_zero() && !s.terms()[0].mono.empty()))
      throw CLI::ValidationError("--params value must be rational: " + kv);
    Rational r = s.is_zero() ? Rational(0) : s.terms()[0].coeff;
    out.push_back({sym(name), r});
  }
  return out;
}

SuperAlgebra bind_all(SuperAlgebra a, const std::vector<std::pair<SymId, Rational>>& bs) {
  std::vector<std::pair<SymId, Rational>> used;
  for (const auto& [id, v] : bs) {
    bool touches = false;
    for (const auto& f : a.f)
      if (f.depends_on(id)) {
        touches = true;
        break;
      }
    if (touches) used.push_back({id, v});
  }
  return used.empty() ? a : a.bind_params(used);
}

SuperBialgebra load_pair(const std::string& name, const std::vector<std::pair<SymId, Rational>>& bs) {
  auto pd = find_pair(name);
  if (!pd) throw std::out_of_range("unknown pair '" + name + "'");
  SuperBialgebra b = bialgebra_from_pair(*pd); // applies pinned bindings
  return make_bialgebra(bind_all(b.primal, bs), bind_all(b.dual, bs), name);
}

// General member of a solution set with named free coefficients, used to
// print bracket tables the way the published tables keep a, b, zeta free.
SMatrix named_member(const SolutionSet& set) {
  SMatrix r = set.particular;
  const char* even_names[] = {"a", "b", "c", "d", "e"};
  const char* odd_names[] = {"zeta", "eta"};
  int ei = 0, oi = 0;
  for (std::size_t i = 0; i < set.homogeneous.size(); ++i) {
    const char* nm = set.hom_parity[i] == Parity::odd ? (oi < 2 ? odd_names[oi++] : nullptr)
                                                      : (ei < 5 ? even_names[ei++] : nullptr);
    if (!nm) throw std::runtime_error("too many free coefficients to name");
    r = r + set.homogeneous[i].scaled(Scalar::symbol(nm));
  }
  return r;
}

int cmd_list(bool pairs, const std::string& type, const std::string& format) {
  if (!pairs) {
    json out = json::array();
    for (const auto& name : registry_names()) {
      SuperAlgebra a = registry(name);
      if (!type.empty() && a.type_string() != type) continue;
      if (format == "json") {
        json one;
        one["name"] = name;
        one["type"] = a.type_string();
        json cons = json::array();
        for (const auto& c : a.constraints) cons.push_back(c.str() + " != 0");
        for (const auto& s : a.side_conditions) cons.push_back(s);
        one["constraints"] = cons;
        out.push_back(one);
      } else {
        std::cout << a.type_string() << "  " << name;
        for (const auto& s : a.side_conditions) std::cout << "   [" << s << "]";
        std::cout << "\n";
      }
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return 0;
  }
  json out = json::array();
  int count = 0;
  for (const auto& p : registry_pairs()) {
    if (!type.empty() && p.type != type) continue;
    ++count;
    if (format == "json")
      out.push_back({{"name", p.name}, {"type", p.type}, {"comment", p.comment}});
    else {
      std::cout << p.type << "  " << p.name;
      if (!p.comment.empty()) std::cout << "   [" << p.comment << "]";
      std::cout << "\n";
    }
  }
  if (format == "json")
    std::cout << json{{"count", count}, {"pairs", out}}.dump(2) << "\n";
  else
    std::cout << count << " pairs\n";
  return 0;
}

int cmd_verify(const std::string& name, const std::string& file,
               const std::vector<std::pair<SymId, Rational>>& bs) {
  auto report_and_exit = [&](const std::string& what, const ValidationReport& rep) {
    if (!rep.empty()) {
      std::cout << what << ": FAIL\n" << report_str(rep);
      return 1;
    }
    std::cout << what << ": ok\n";
    return 0;
  };
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    SuperAlgebra a = bind_all(algebra_from_json(text), bs);
    return report_and_exit("validate " + a.name, validate(a));
  }
  if (registry_has(name)) {
    SuperAlgebra a = bind_all(registry(name), bs);
    return report_and_exit("validate " + name, validate(a));
  }
  if (auto pd = find_pair(name)) {
    SuperBialgebra b = load_pair(name, bs);
    int rc = 0;
    rc |= report_and_exit("validate " + pd->primal, validate(b.primal));
    rc |= report_and_exit("validate " + pd->dual, validate(b.dual));
    rc |= report_and_exit("mixed super Jacobi", mixed_jacobi_check(b));
    rc |= report_and_exit("one-cocycle", cocycle_check(b));
    rc |= report_and_exit("Drinfeld double Jacobi", validate(drinfeld_double(b)));
    rc |= report_and_exit("pairing ad-invariance", pairing_invariance_check(b));
    return rc ? 1 : 0;
  }
  std::cerr << "unknown algebra or pair '" << name << "'\n";
  return 2;
}

int cmd_solve(const std::string& pair, const std::string& side_opt, bool skew,
              const std::vector<std::pair<SymId, Rational>>& bs, const std::string& format) {
  SuperBialgebra b = load_pair(pair, bs);
  std::vector<Side> sides;
  if (side_opt == "primal" || side_opt == "both") sides.push_back(Side::primal);
  if (side_opt == "dual" || side_opt == "both") sides.push_back(Side::dual);
  json out;
  out["pair"] = pair;
  BiRResult bir = bi_r_matrix_check(b);
  out["bi_r_matrix"] = bir.is_bi_r;
  for (Side s : sides) {
    SolutionSet set = s == Side::primal ? bir.primal : bir.dual;
    if (skew && set.consistent) set = skew_reduce(set, b);
    const char* key = s == Side::primal ? "primal" : "dual";
    out[key] = json::parse(solution_set_json_string(set));
    if (set.consistent) {
      SMatrix r = named_member(set);
      if (is_super_skew(r, s == Side::primal ? b.primal : b.dual)) {
        ClassificationResult c = classify(b, s, r);
        out[key]["classification"] = json::parse(classification_json_string(c));
      } else {
        SolutionSet sk = skew_reduce(set, b);
        if (sk.consistent) {
          ClassificationResult c = classify(b, s, named_member(sk));
          out[key]["classification_of_skew_member"] = json::parse(classification_json_string(c));
        }
      }
    }
  }
  if (format == "md") {
    std::cout << "## " << pair << "\n\n```json\n" << out.dump(2) << "\n```\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_poisson(const std::string& pair, const std::string& structure, const std::string& side_opt,
                const std::vector<std::pair<SymId, Rational>>& bs, const std::string& format) {
  SuperBialgebra b = load_pair(pair, bs);
  Side side = side_opt == "dual" ? Side::dual : Side::primal;
  SolutionSet set = solve_coboundary(b, side);
  if (!set.consistent) {
    std::cout << "the " << side_opt << " side of " << pair
              << " is not coboundary: " << set.witness << "\n";
    return 1;
  }
  SolutionSet sk = skew_reduce(set, b);
  if (!sk.consistent) {
    std::cout << "no graded skew-symmetric r-matrix on the " << side_opt << " side\n";
    return 1;
  }
  SMatrix r = named_member(sk);
  const SuperAlgebra& galg = side == Side::primal ? b.primal : b.dual;
  GroupParameterization p = group_parameterization(galg, side == Side::dual);
  InvariantFields f = invariant_fields(maurer_cartan(p));
  Structure st = structure == "L" ? Structure::L : structure == "R" ? Structure::R : Structure::full;
  try {
    PoissonTable t = sklyanin(f, r, st);
    if (format == "md")
      std::cout << bracket_table_markdown(t, pair + " [" + structure + ", " + side_opt + "]");
    else
      std::cout << bracket_table_json_string(t);
  } catch (const std::invalid_argument& e) {
    std::cout << "refused: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact r-matrices and Poisson superbrackets of low-dimensional Lie super-bialgebras"};
  app.require_subcommand(1);

  // list
  auto* list = app.add_subcommand("list", "catalog of algebras and dual pairs");
  bool list_pairs = false;
  std::string list_type, list_format = "text";
  list->add_flag("--pairs", list_pairs, "list dual pairs instead of algebras");
  list->add_option("--type", list_type, "filter by grading type, e.g. (1,1)");
  list->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "axiom checks for an algebra or pair");
  std::string verify_name, verify_file;
  std::vector<std::string> verify_params;
  verify->add_option("name", verify_name, "registry algebra or pair name");
  verify->add_option("--file", verify_file, "algebra JSON file");
  verify->add_option("--params", verify_params, "parameter bindings name=value");

  // solve
  auto* solve = app.add_subcommand("solve", "coboundary solution set and classification");
  std::string solve_pair, solve_side = "both", solve_format = "json";
  bool solve_skew = false;
  std::vector<std::string> solve_params;
  solve->add_option("pair", solve_pair)->required();
  solve->add_option("--side", solve_side)->check(CLI::IsMember({"primal", "dual", "both"}));
  solve->add_flag("--skew-reduce", solve_skew, "project onto graded skew-symmetric members");
  solve->add_option("--params", solve_params, "parameter bindings name=value");
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "md"}));

  // poisson
  auto* poisson = app.add_subcommand("poisson", "Sklyanin superbrackets on the (dual) supergroup");
  std::string poi_pair, poi_structure = "full", poi_side = "primal", poi_format = "json";
  std::vector<std::string> poi_params;
  poisson->add_option("pair", poi_pair)->required();
  poisson->add_option("--structure", poi_structure)->check(CLI::IsMember({"full", "L", "R"}));
  poisson->add_option("--side", poi_side)->check(CLI::IsMember({"primal", "dual"}));
  poisson->add_option("--params", poi_params, "parameter bindings name=value");
  poisson->add_option("--format", poi_format)->check(CLI::IsMember({"json", "md"}));

  // report-all
  auto* report = app.add_subcommand("report-all", "regenerate tables 5-14 and diff against golden data");
  std::string report_out;
  report->add_option("--out", report_out, "output directory")->required();

  // export
  auto* exp = app.add_subcommand("export", "print an algebra in the JSON file format");
  std::string exp_name;
  exp->add_option("--algebra", exp_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return cmd_list(list_pairs, list_type, list_format);
    if (*verify) {
      if (verify_name.empty() && verify_file.empty()) {
        std::cerr << "verify: expected a name or --file\n";
        return 2;
      }
      return cmd_verify(verify_name, verify_file, parse_bindings(verify_params));
    }
    if (*solve) return cmd_solve(solve_pair, solve_side, solve_skew, parse_bindings(solve_params), solve_format);
    if (*poisson)
      return cmd_poisson(poi_pair, poi_structure, poi_side, parse_bindings(poi_params), poi_format);
    if (*report) {
      ReportStatus st = report_all(report_out);
      for (const auto& r : st.results)
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.id << (r.ok ? "" : "  " + r.detail) << "\n";
      std::cout << (st.all_ok() ? "all golden rows match" : "GOLDEN MISMATCHES: " + std::to_string(st.failures.size()))
                << "\n";
      return st.all_ok() ? 0 : 1;
    }
    if (*exp) {
      if (!registry_has(exp_name)) {
        std::cerr << "unknown algebra '" << exp_name << "'\n";
        return 2;
      }
      std::cout << algebra_to_json(registry(exp_name));
      return 0;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
