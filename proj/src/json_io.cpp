/*
 * json_io.cpp
 * -----------
 * The algebra file format: {name, dim, grading, brackets, constraints},
 * with an optional symbols section declaring extra parameter names.
 */
#include <json.hpp>

#include "superbialg/superalgebra.hpp"

namespace sbg {

using json = nlohmann::ordered_json;

std::string algebra_to_json(const SuperAlgebra& a) {
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
  return j.dump(2) + "\n";
}

SuperAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  SuperAlgebra a;
  a.name = j.value("name", "anonymous");
  a.dim = j.at("dim").get<int>();
  for (const auto& g : j.at("grading"))
    a.grading.push_back(g.get<std::string>() == "odd" ? Parity::odd : Parity::even);
  if (static_cast<int>(a.grading.size()) != a.dim)
    throw std::invalid_argument("algebra file: grading length does not match dim");
  if (j.contains("symbols"))
    for (const auto& s : j["symbols"])
      sym_declare(s.at("name").get<std::string>(),
                  s.value("parity", "even") == "odd" ? Parity::odd : Parity::even,
                  s.value("kind", "parameter") == "coordinate" ? SymbolKind::coordinate
                                                               : SymbolKind::parameter);
  a.f.assign(static_cast<std::size_t>(a.dim * a.dim * a.dim), Scalar());
  for (const auto& b : j.at("brackets")) {
    int i = b.at("i").get<int>() - 1;
    int jj = b.at("j").get<int>() - 1;
    int k = b.at("k").get<int>() - 1;
    if (i < 0 || jj < 0 || k < 0 || i >= a.dim || jj >= a.dim || k >= a.dim)
      throw std::invalid_argument("algebra file: bracket index out of range");
    a.set_bracket(i, jj, k, parse_scalar(b.at("coeff").get<std::string>()));
  }
  if (j.contains("constraints"))
    for (const auto& c : j["constraints"]) a.side_conditions.push_back(c.get<std::string>());
  return a;
}

} // namespace sbg
