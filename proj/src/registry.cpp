/*
 * registry.cpp
 * ------------
 * Built-in catalog: two- and three-dimensional Lie superalgebras, the dual
 * algebras appearing in the classification, and the 74 dual pairs.
 */
#include <map>

#include "superbialg/superalgebra.hpp"

namespace sbg {

namespace {

class Builder {
public:
  Builder(std::string name, const std::string& grading) {
    a_.name = std::move(name);
    a_.dim = static_cast<int>(grading.size());
    for (char c : grading) a_.grading.push_back(c == 'o' ? Parity::odd : Parity::even);
    a_.f.assign(static_cast<std::size_t>(a_.dim * a_.dim * a_.dim), Scalar());
  }
  // [X_i, X_j] += coeff X_k, 1-based indices as in the tables.
  Builder& br(int i, int j, int k, const std::string& coeff) {
    a_.set_bracket(i - 1, j - 1, k - 1, parse_scalar(coeff));
    return *this;
  }
  Builder& nonzero(const std::string& param) {
    a_.constraints.push_back(ParamPoly::variable(sym(param)));
    return *this;
  }
  Builder& side(std::string text) {
    a_.side_conditions.push_back(std::move(text));
    return *this;
  }
  SuperAlgebra take() { return std::move(a_); }

private:
  SuperAlgebra a_;
};

// Dual family of Eq.: {X^2,X^2} = alpha X^1, {X^2,X^3} = beta X^1,
// {X^3,X^3} = gamma X^1 on gradings (even, odd, odd).
SuperAlgebra gtilde(const std::string& name, const std::string& alpha, const std::string& beta,
                    const std::string& gamma) {
  Builder b(name, "eoo");
  if (alpha != "0") b.br(2, 2, 1, alpha);
  if (beta != "0") b.br(2, 3, 1, beta);
  if (gamma != "0") b.br(3, 3, 1, gamma);
  return b.take();
}

std::string gname(int idx, const std::string& alpha, const std::string& beta, const std::string& gamma) {
  return "(A_{1,1}+2A)^" + std::to_string(idx) + "_{" + alpha + "," + beta + "," + gamma + "}";
}

std::map<std::string, SuperAlgebra> build_registry() {
  std::map<std::string, SuperAlgebra> reg;
  auto put = [&](SuperAlgebra a) { reg.emplace(a.name, std::move(a)); };

  // ---- Table 1: algebras ------------------------------------------------
  put(Builder("B", "eo").br(1, 2, 2, "1").take());
  put(Builder("(A_{1,1}+A)", "eo").br(2, 2, 1, "1").take());
  put(Builder("(B+A_{1,1})", "eeo").br(1, 3, 3, "1").take());
  put(Builder("(2A_{1,1}+A)", "eeo").br(3, 3, 1, "1").take());
  put(Builder("C^1_0", "eeo").br(1, 2, 2, "1").take());
  put(Builder("C^1_p", "eeo").br(1, 2, 2, "1").br(1, 3, 3, "p").nonzero("p").side("p != 0").take());
  put(Builder("C^1_{1/2}", "eeo").br(1, 2, 2, "1").br(1, 3, 3, "1/2").br(3, 3, 2, "1").take());
  put(Builder("C^2_0", "eoo").br(1, 2, 2, "1").take());
  put(Builder("(A_{1,1}+2A)^0", "eoo").br(2, 2, 1, "1").take());
  put(Builder("C^2_p", "eoo").br(1, 2, 2, "1").br(1, 3, 3, "p").nonzero("p").side("0 < |p| <= 1").take());
  put(Builder("C^3", "eoo").br(1, 3, 2, "1").take());
  put(Builder("C^4", "eoo").br(1, 2, 2, "1").br(1, 3, 2, "1").br(1, 3, 3, "1").take());
  put(Builder("C^5_p", "eoo").br(1, 2, 2, "p").br(1, 2, 3, "-1").br(1, 3, 2, "1").br(1, 3, 3, "p").side("p >= 0").take());
  put(Builder("(A_{1,1}+2A)^1", "eoo").br(2, 2, 1, "1").br(3, 3, 1, "1").take());
  put(Builder("(A_{1,1}+2A)^2", "eoo").br(2, 2, 1, "1").br(3, 3, 1, "-1").take());

  // ---- duals from Tables 2-4 --------------------------------------------
  put(Builder("I_{(1,1)}", "eo").take());
  put(Builder("I_{(2,1)}", "eeo").take());
  put(Builder("I_{(1,2)}", "eoo").take());
  put(Builder("(A_{1,1}+A).i", "eo").br(2, 2, 1, "-1").take());
  put(Builder("(B+A_{1,1}).i", "eeo").br(2, 3, 3, "1").take());
  put(Builder("(2A_{1,1}+A).i", "eeo").br(3, 3, 1, "-1").take());
  put(Builder("(2A_{1,1}+A).ii", "eeo").br(3, 3, 2, "1").take());
  put(Builder("C^1_{-p}.i", "eeo").br(1, 2, 1, "1").br(2, 3, 3, "p").take());
  put(Builder("C^1_{0,k}", "eeo").br(1, 2, 2, "k").nonzero("k").side("k != 0").take());
  put(Builder("C^1_p.i|_{p=-1/2}", "eeo").br(1, 2, 1, "1").br(2, 3, 3, "1/2").take());
  put(Builder("C^1_p.ii|_{p=-1/2}", "eeo").br(1, 2, 1, "-1").br(2, 3, 3, "-1/2").take());
  put(Builder("C^1_{1/2}.i", "eeo").br(1, 2, 1, "1").br(2, 3, 3, "-1/2").br(3, 3, 1, "1").take());
  put(Builder("C^1_{1/2}.ii", "eeo").br(1, 2, 1, "-1").br(2, 3, 3, "1/2").br(3, 3, 1, "-1").take());
  put(Builder("C^1_{1/2,k}", "eeo").br(1, 2, 2, "k").br(1, 3, 3, "k/2").br(3, 3, 2, "k").nonzero("k").side("k != 0").take());

  // (1,2)-type dual families, concrete members named as in Table 4.
  struct GSpec {
    int idx;
    const char *alpha, *beta, *gamma;
  };
  const GSpec gspecs[] = {
      {0, "0", "0", "1"},  {0, "0", "0", "-1"}, {0, "1", "0", "0"},   {0, "-1", "0", "0"},
      {0, "1", "1", "1"},  {0, "-1", "-1", "-1"},
      {1, "1", "0", "1"},  {1, "-1", "0", "-1"}, {1, "1", "k", "1"},  {1, "-1", "k", "-1"},
      {1, "k", "0", "1"},  {1, "s", "0", "-1"},
      {2, "1", "0", "-1"}, {2, "-1", "0", "1"},  {2, "0", "1", "0"},  {2, "0", "-1", "0"},
      {2, "1", "1", "0"},  {2, "-1", "1", "0"},  {2, "0", "1", "1"},  {2, "0", "1", "-1"},
      {2, "1", "k", "-1"}, {2, "-1", "k", "1"},  {2, "k", "0", "1"},  {2, "s", "0", "-1"},
  };
  for (const auto& g : gspecs) put(gtilde(gname(g.idx, g.alpha, g.beta, g.gamma), g.alpha, g.beta, g.gamma));
  // symbolic families used by the r-matrix/bracket tables
  put(gtilde("G~_{alpha,beta,gamma}", "alpha", "beta", "gamma"));
  put(gtilde("G~_{alpha,0,gamma}", "alpha", "0", "gamma"));
  put(gtilde("G~_{-gamma,0,gamma}", "-gamma", "0", "gamma"));
  // one-parameter union of C^1_{1/2}.i (eps = 1) and C^1_{1/2}.ii (eps = -1)
  put(Builder("C^1_{1/2,eps}", "eeo")
          .br(1, 2, 1, "eps")
          .br(2, 3, 3, "-eps/2")
          .br(3, 3, 1, "eps")
          .side("eps = +-1")
          .take());

  // p = 1 member of C^2_p under its own catalog name.
  {
    SuperAlgebra c21 = reg.at("C^2_p").bind_params({{sym("p"), Rational(1)}});
    c21.name = "C^2_1";
    c21.side_conditions.clear();
    put(std::move(c21));
  }
  return reg;
}

const std::map<std::string, SuperAlgebra>& the_registry() {
  static const std::map<std::string, SuperAlgebra> reg = build_registry();
  return reg;
}

std::vector<PairDescriptor> build_pairs() {
  std::vector<PairDescriptor> out;
  auto add = [&](const std::string& primal, const std::string& dual, const std::string& comment = "") {
    const auto& reg = the_registry();
    PairDescriptor d;
    d.primal = primal;
    d.dual = dual;
    d.name = "(" + primal + "," + dual + ")";
    d.type = reg.at(primal).type_string();
    d.comment = comment;
    out.push_back(std::move(d));
  };

  // Table 3, type (1,1)
  add("(A_{1,1}+A)", "I_{(1,1)}");
  add("B", "I_{(1,1)}");
  add("B", "(A_{1,1}+A)");
  add("B", "(A_{1,1}+A).i");

  // Table 2, type (2,1)
  add("(2A_{1,1}+A)", "I_{(2,1)}");
  add("(B+A_{1,1})", "I_{(2,1)}");
  add("(B+A_{1,1})", "(B+A_{1,1}).i");
  add("(B+A_{1,1})", "(2A_{1,1}+A)");
  add("(B+A_{1,1})", "(2A_{1,1}+A).i");
  add("C^1_p", "I_{(2,1)}", "p in R");
  add("C^1_p", "(2A_{1,1}+A)", "p in R");
  add("C^1_p", "(2A_{1,1}+A).i", "p in R");
  add("C^1_p", "(2A_{1,1}+A).ii", "p = 1/2");
  out.back().pinned.push_back({"p", Rational(1, 2)});
  add("C^1_p", "C^1_{-p}.i", "p in R");
  add("C^1_0", "C^1_{0,k}", "k != 0");
  add("C^1_{1/2}", "I_{(2,1)}");
  add("C^1_{1/2}", "C^1_p.i|_{p=-1/2}");
  add("C^1_{1/2}", "C^1_p.ii|_{p=-1/2}");
  add("C^1_{1/2}", "C^1_{1/2}.i");
  add("C^1_{1/2}", "C^1_{1/2}.ii");
  add("C^1_{1/2}", "C^1_{1/2,k}", "k != 0");

  // Table 4, type (1,2)
  add("C^2_1", "I_{(1,2)}");
  add("C^2_1", gname(0, "0", "0", "1"));
  add("C^2_1", gname(0, "0", "0", "-1"));
  add("C^2_1", gname(1, "1", "0", "1"));
  add("C^2_1", gname(1, "-1", "0", "-1"));
  add("C^2_1", gname(2, "1", "0", "-1"));
  add("C^2_1", gname(2, "-1", "0", "1"));
  add("C^2_p", "I_{(1,2)}", "-1 <= p < 1");
  add("C^2_p", gname(0, "1", "0", "0"), "-1 <= p < 1");
  add("C^2_p", gname(0, "-1", "0", "0"), "-1 <= p < 1");
  add("C^2_p", gname(0, "0", "0", "1"), "-1 <= p < 1");
  add("C^2_p", gname(0, "0", "0", "-1"), "-1 <= p < 1");
  add("C^2_p", gname(0, "1", "1", "1"), "-1 <= p < 1");
  add("C^2_p", gname(0, "-1", "-1", "-1"), "-1 <= p < 1");
  add("C^2_p", gname(1, "1", "k", "1"), "-1 < k < 1");
  add("C^2_p", gname(1, "-1", "k", "-1"), "-1 < k < 1");
  add("C^2_p", gname(2, "0", "1", "0"), "-1 <= p < 1");
  add("C^2_p", gname(2, "1", "1", "0"), "-1 <= p < 1");
  add("C^2_p", gname(2, "-1", "1", "0"), "-1 <= p < 1");
  add("C^2_p", gname(2, "0", "1", "1"), "-1 <= p < 1");
  add("C^2_p", gname(2, "0", "1", "-1"), "-1 <= p < 1");
  add("C^2_p", gname(2, "1", "k", "-1"), "k in R");
  add("C^2_p", gname(2, "-1", "k", "1"), "k in R");
  add("C^3", "I_{(1,2)}");
  add("C^3", gname(0, "1", "0", "0"));
  add("C^3", gname(0, "0", "0", "1"));
  add("C^3", gname(1, "1", "0", "1"));
  add("C^3", gname(1, "-1", "0", "-1"));
  add("C^3", gname(2, "0", "1", "0"));
  add("C^3", gname(2, "0", "-1", "0"));
  add("C^3", gname(2, "1", "0", "-1"));
  add("C^3", gname(2, "-1", "0", "1"));
  add("C^4", "I_{(1,2)}");
  add("C^4", gname(0, "1", "0", "0"));
  add("C^4", gname(0, "-1", "0", "0"));
  add("C^4", gname(0, "0", "0", "1"));
  add("C^4", gname(0, "0", "0", "-1"));
  add("C^4", gname(1, "k", "0", "1"), "0 < k");
  add("C^4", gname(1, "s", "0", "-1"), "s < 0");
  add("C^4", gname(2, "0", "1", "0"));
  add("C^4", gname(2, "0", "-1", "0"));
  add("C^4", gname(2, "k", "0", "1"), "k < 0");
  add("C^4", gname(2, "s", "0", "-1"), "0 < s");
  add("C^5_p", "I_{(1,2)}", "p >= 0");
  add("C^5_p", gname(0, "0", "0", "1"), "p >= 0");
  add("C^5_p", gname(0, "0", "0", "-1"), "p >= 0");
  add("C^5_p", gname(1, "k", "0", "1"), "0 < k");
  add("C^5_p", gname(1, "s", "0", "-1"), "s < 0");
  add("C^5_p", gname(2, "k", "0", "1"), "k < 0");
  add("C^5_p", gname(2, "s", "0", "-1"), "0 < s");
  add("(A_{1,1}+2A)^0", "I_{(1,2)}");
  add("(A_{1,1}+2A)^1", "I_{(1,2)}");
  add("(A_{1,1}+2A)^2", "I_{(1,2)}");

  return out;
}

} // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : the_registry()) names.push_back(k);
  return names;
}

bool registry_has(const std::string& name) { return the_registry().count(name) != 0; }

SuperAlgebra registry(const std::string& name) {
  auto it = the_registry().find(name);
  if (it == the_registry().end()) throw std::out_of_range("unknown algebra '" + name + "'");
  return it->second;
}

const std::vector<PairDescriptor>& registry_pairs() {
  static const std::vector<PairDescriptor> pairs = build_pairs();
  return pairs;
}

std::optional<PairDescriptor> find_pair(const std::string& name) {
  for (const auto& p : registry_pairs())
    if (p.name == name) return p;
  return std::nullopt;
}

} // namespace sbg
