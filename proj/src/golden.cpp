/*
 * golden.cpp
 * ----------
 * Embedded regression rows for the classification and bracket tables, plus
 * the verification engine. Row ids carry the source table for traceability.
 */
#include <sstream>

#include "superbialg/golden.hpp"

namespace sbg {

namespace {

// shorthand constructors for the data tables
GTerm T(const char* c, int i, int j) { return {c, i, j, false}; }
GTerm W(const char* c, int i, int j) { return {c, i, j, true}; }
GTerm3 W3(const char* c, int i, int j, int k) { return {c, i, j, k}; }

std::vector<GoldenR> make_r_rows() {
  std::vector<GoldenR> v;
  // ---- Table 5 (type (1,1)) --------------------------------------------
  v.push_back({"T5:((A_{1,1}+A),I_{(1,1)}):r", "(A_{1,1}+A)", "I_{(1,1)}", Side::primal, {},
               {T("a", 1, 1)}, {}, "a in R"});
  v.push_back({"T5:(B,(A_{1,1}+A)):r", "B", "(A_{1,1}+A)", Side::primal, {},
               {W("-1/4", 2, 2)}, {}, ""});
  v.push_back({"T5:(B,(A_{1,1}+A)):r~", "B", "(A_{1,1}+A)", Side::dual, {},
               {T("a", 1, 1), W("1/2", 2, 2)}, {W3("-1/2", 1, 2, 2)}, "a in R"});
  v.push_back({"T5:(B,(A_{1,1}+A).i):r", "B", "(A_{1,1}+A).i", Side::primal, {},
               {W("1/4", 2, 2)}, {}, ""});
  v.push_back({"T5:(B,(A_{1,1}+A).i):r~", "B", "(A_{1,1}+A).i", Side::dual, {},
               {T("a", 1, 1), W("-1/2", 2, 2)}, {W3("1/2", 1, 2, 2)}, "a in R"});

  // ---- Table 6 (type (2,1)) --------------------------------------------
  v.push_back({"T6:((2A_{1,1}+A),I_{(2,1)}):r", "(2A_{1,1}+A)", "I_{(2,1)}", Side::primal, {},
               {T("a", 1, 1), T("b", 1, 2), T("c", 2, 1), T("d", 2, 2)}, {}, "a,b,c,d in R"});
  v.push_back({"T6:((B+A_{1,1}),I_{(2,1)}):r", "(B+A_{1,1})", "I_{(2,1)}", Side::primal, {},
               {T("a", 2, 2)}, {}, "a in R"});
  v.push_back({"T6:((B+A_{1,1}),(B+A_{1,1}).i):r", "(B+A_{1,1})", "(B+A_{1,1}).i", Side::primal, {},
               {T("a", 2, 2), W("1", 1, 2)}, {}, "a in R"});
  v.push_back({"T6:((B+A_{1,1}),(B+A_{1,1}).i):r~", "(B+A_{1,1})", "(B+A_{1,1}).i", Side::dual, {},
               {T("b", 1, 1), W("-1", 1, 2)}, {}, "b in R"});
  v.push_back({"T6:((B+A_{1,1}),(2A_{1,1}+A)):r", "(B+A_{1,1})", "(2A_{1,1}+A)", Side::primal, {},
               {T("a", 2, 2), W("-1/4", 3, 3)}, {}, "a in R"});
  v.push_back({"T6:((B+A_{1,1}),(2A_{1,1}+A)):r~", "(B+A_{1,1})", "(2A_{1,1}+A)", Side::dual, {},
               {T("b", 1, 1), T("c", 1, 2), T("d", 2, 1), T("e", 2, 2), W("1/2", 3, 3)},
               {W3("-1/2", 1, 3, 3)}, "b,c,d,e in R"});
  v.push_back({"T6:((B+A_{1,1}),(2A_{1,1}+A).i):r", "(B+A_{1,1})", "(2A_{1,1}+A).i", Side::primal, {},
               {T("a", 2, 2), W("1/4", 3, 3)}, {}, "a in R"});
  v.push_back({"T6:((B+A_{1,1}),(2A_{1,1}+A).i):r~", "(B+A_{1,1})", "(2A_{1,1}+A).i", Side::dual, {},
               {T("b", 1, 1), T("c", 1, 2), T("d", 2, 1), T("e", 2, 2), W("-1/2", 3, 3)},
               {W3("1/2", 1, 3, 3)}, "b,c,d,e in R"});
  v.push_back({"T6:(C^1_p,(2A_{1,1}+A)):r1", "C^1_p", "(2A_{1,1}+A)", Side::primal, {},
               {W("-1/(4*p)", 3, 3)}, {}, "p in R-{0,1}"});
  v.push_back({"T6:(C^1_p,(2A_{1,1}+A)):r2", "C^1_p", "(2A_{1,1}+A)", Side::primal, {{"p", 1}},
               {T("zeta", 2, 3), T("eta", 3, 2), W("-1/4", 3, 3)}, {}, "p = 1"});
  v.push_back({"T6:(C^1_p,(2A_{1,1}+A).i):r1", "C^1_p", "(2A_{1,1}+A).i", Side::primal, {},
               {W("1/(4*p)", 3, 3)}, {}, "p in R-{0,1}"});
  v.push_back({"T6:(C^1_p,(2A_{1,1}+A).i):r2", "C^1_p", "(2A_{1,1}+A).i", Side::primal, {{"p", 1}},
               {T("zeta", 2, 3), T("eta", 3, 2), W("1/4", 3, 3)}, {}, "p = 1"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r1", "C^1_0", "C^1_{-p}.i", Side::primal, {{"p", 0}},
               {W("1", 1, 2), W("a/2", 3, 3)}, {}, "p = 0, a in R"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r2", "C^1_p", "C^1_{-p}.i", Side::primal, {{"p", 1}},
               {W("1", 1, 2), W("zeta", 2, 3)}, {}, "p = 1"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r3", "C^1_p", "C^1_{-p}.i", Side::primal, {},
               {W("1", 1, 2)}, {}, "p in R-{0,1}"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r~1", "C^1_0", "C^1_{-p}.i", Side::dual, {{"p", 0}},
               {W("-1", 1, 2), W("b/2", 3, 3)}, {}, "p = 0, b in R"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r~2", "C^1_p", "C^1_{-p}.i", Side::dual, {{"p", -1}},
               {W("-1", 1, 2), W("zeta", 1, 3)}, {}, "p = -1"});
  v.push_back({"T6:(C^1_p,C^1_{-p}.i):r~3", "C^1_p", "C^1_{-p}.i", Side::dual, {},
               {W("-1", 1, 2)}, {}, "p in R-{0,-1}"});
  v.push_back({"T6:(C^1_p,I_{(2,1)}):r1", "C^1_0", "I_{(2,1)}", Side::primal, {{"p", 0}},
               {W("a/2", 3, 3)}, {}, "p = 0, a in R"});
  v.push_back({"T6:(C^1_p,I_{(2,1)}):r2", "C^1_p", "I_{(2,1)}", Side::primal, {{"p", 1}},
               {T("zeta", 2, 3), T("eta", 3, 2)}, {}, "p = 1"});
  v.push_back({"T6:(C^1_{1/2},C^1_p.i|_{p=-1/2}):r", "C^1_{1/2}", "C^1_p.i|_{p=-1/2}", Side::primal, {},
               {W("1", 1, 2)}, {}, ""});
  v.push_back({"T6:(C^1_{1/2},C^1_p.i|_{p=-1/2}):r~", "C^1_{1/2}", "C^1_p.i|_{p=-1/2}", Side::dual, {},
               {W("-1", 1, 2), W("-1/2", 3, 3)}, {W3("1/2", 1, 3, 3)}, ""});
  v.push_back({"T6:(C^1_{1/2},C^1_p.ii|_{p=-1/2}):r", "C^1_{1/2}", "C^1_p.ii|_{p=-1/2}", Side::primal, {},
               {W("-1", 1, 2)}, {}, ""});
  v.push_back({"T6:(C^1_{1/2},C^1_p.ii|_{p=-1/2}):r~", "C^1_{1/2}", "C^1_p.ii|_{p=-1/2}", Side::dual, {},
               {W("1", 1, 2), W("1/2", 3, 3)}, {W3("-1/2", 1, 3, 3)}, ""});
  v.push_back({"T6:(C^1_{1/2},C^1_{1/2,eps}):r", "C^1_{1/2}", "C^1_{1/2,eps}", Side::primal, {},
               {W("eps", 1, 2), W("-eps/2", 3, 3)}, {}, "eps = +-1"});
  v.push_back({"T6:(C^1_{1/2},C^1_{1/2,eps}):r~", "C^1_{1/2}", "C^1_{1/2,eps}", Side::dual, {},
               {W("-1/eps", 1, 2), W("1/(2*eps)", 3, 3)}, {}, "eps = +-1"});

  // ---- Table 7 (type (1,2)) --------------------------------------------
  v.push_back({"T7:(C^2_p,G~):r1", "C^2_0", "G~_{alpha,beta,gamma}", Side::primal, {{"gamma", 0}},
               {W("-alpha/4", 2, 2), W("-beta", 2, 3), W("b/2", 3, 3)}, {}, "p = 0, gamma = 0, b in R"});
  v.push_back({"T7:(C^2_p,G~):r2", "C^2_p", "G~_{alpha,beta,gamma}", Side::primal,
               {{"p", -1}, {"beta", 0}},
               {W("-alpha/4", 2, 2), T("b", 2, 3), T("c", 3, 2), W("gamma/4", 3, 3)}, {},
               "p = -1, beta = 0, b,c in R"});
  v.push_back({"T7:(C^2_p,G~):r3", "C^2_p", "G~_{alpha,beta,gamma}", Side::primal, {},
               {W("-alpha/4", 2, 2), W("-beta/(1+p)", 2, 3), W("-gamma/(4*p)", 3, 3)}, {},
               "p in (-1,1]-{0}"});
  v.push_back({"T7:(C^2_p,G~):r~1", "C^2_0", "G~_{alpha,beta,gamma}", Side::dual,
               {{"beta", 0}, {"gamma", 0}},
               {T("b", 1, 1), T("zeta", 1, 3), T("eta", 3, 1), W("1/(2*alpha)", 2, 2), W("c/2", 3, 3)},
               {W3("-1/(2*alpha)", 1, 2, 2)}, "p = 0, beta = gamma = 0, alpha != 0, b,c in R"});
  v.push_back({"T7:(C^2_p,G~):r~2", "C^2_p", "G~_{alpha,beta,gamma}", Side::dual, {{"beta", 0}},
               {T("b", 1, 1), W("1/(2*alpha)", 2, 2), W("p/(2*gamma)", 3, 3)},
               {W3("-1/(2*alpha)", 1, 2, 2), W3("-p^2/(2*gamma)", 1, 3, 3)},
               "p in [-1,1]-{0}, beta = 0, alpha,gamma != 0, b in R"});
  v.push_back({"T7:(C^3,I_{(1,2)}):r", "C^3", "I_{(1,2)}", Side::primal, {},
               {W("zeta", 1, 2), W("c/2", 2, 2), T("d", 2, 3), T("-d", 3, 2)}, {}, "c,d in R"});
  v.push_back({"T7:(C^3,(A_{1,1}+2A)^0_{1,0,0}):r", "C^3", "(A_{1,1}+2A)^0_{1,0,0}", Side::primal, {},
               {W("b/2", 2, 2), T("c", 2, 3), T("-1-c", 3, 2)}, {}, "b,c in R"});
  v.push_back({"T7:(C^3,(A_{1,1}+2A)^0_{1,0,0}):r~", "C^3", "(A_{1,1}+2A)^0_{1,0,0}", Side::dual, {},
               {T("m", 1, 1), T("zeta", 1, 3), T("zeta", 3, 1), W("1", 2, 3), W("n/2", 3, 3)},
               {W3("-1/2", 1, 3, 3)}, "m,n in R"});
  v.push_back({"T7:(C^3,(A_{1,1}+2A)^2_{0,eps,0}):r", "C^3", "G~_{alpha,beta,gamma}", Side::primal,
               {{"alpha", 0}, {"gamma", 0}},
               {W("zeta", 1, 2), W("c/2", 2, 2), T("d", 2, 3), T("-d", 3, 2), W("-beta/2", 3, 3)},
               {W3("beta*zeta", 2, 3, 2)}, "beta = eps = +-1, c,d in R"});
  v.push_back({"T7:(C^3,(A_{1,1}+2A)^2_{0,eps,0}):r~", "C^3", "G~_{alpha,beta,gamma}", Side::dual,
               {{"alpha", 0}, {"gamma", 0}},
               {T("m", 1, 1), T("eta", 1, 3), T("eta", 3, 1), W("1/(2*beta)", 3, 3)}, {},
               "beta = eps = +-1, m in R"});
  v.push_back({"T7:(C^4,G~):r", "C^4", "G~_{alpha,beta,gamma}", Side::primal, {},
               {W("(2*(beta-alpha)-gamma)/8", 2, 2), W("(gamma-2*beta)/4", 2, 3), W("-gamma/4", 3, 3)},
               {}, "alpha,beta,gamma in R"});
  v.push_back({"T7:(C^4,G~):r~", "C^4", "G~_{alpha,beta,gamma}", Side::dual,
               {{"alpha", 0}, {"gamma", 0}},
               {T("a", 1, 1), W("1/beta", 2, 3), W("1/(2*beta)", 3, 3)},
               {W3("-1/beta", 1, 2, 3), W3("1/beta", 3, 1, 3)}, "alpha = gamma = 0, beta != 0, a in R"});
  v.push_back({"T7:(C^5_p,G~_{-gamma,0,gamma}):r1", "C^5_p", "G~_{-gamma,0,gamma}", Side::primal,
               {{"p", 0}},
               {W("a/2", 2, 2), W("a/2", 3, 3), T("b", 2, 3), T("gamma-b", 3, 2)}, {},
               "p = 0, alpha+gamma = 0, a,b in R"});
  // NOTE: the published row carries an extra 1/p on the X2^X3 coefficient;
  // that value does not solve the coboundary equation it is tabulated for
  // (the residual is (1-p)(gamma-alpha)/(2(1+p^2))). The coefficient below is
  // the one forced by the equation; it agrees with the published row at
  // alpha = gamma.
  v.push_back({"T7:(C^5_p,G~_{alpha,0,gamma}):r2", "C^5_p", "G~_{alpha,0,gamma}", Side::primal, {},
               {W("-(2*alpha*p^2+alpha+gamma)/(8*p*(1+p^2))", 2, 2),
                W("(gamma-alpha)/(4*(1+p^2))", 2, 3),
                W("-(2*gamma*p^2+alpha+gamma)/(8*p*(1+p^2))", 3, 3)},
               {}, "p > 0"});
  v.push_back({"T7:(C^5_p,G~_{-gamma,0,gamma}):r~", "C^5_p", "G~_{-gamma,0,gamma}", Side::dual, {},
               {T("a", 1, 1), W("-p/(2*gamma)", 2, 2), W("p/(2*gamma)", 3, 3), W("-1/gamma", 2, 3)},
               {W3("(p^2-1)/(2*gamma)", 1, 2, 2), W3("-(p^2-1)/(2*gamma)", 1, 3, 3),
                W3("2*p/gamma", 1, 2, 3)},
               "p >= 0, alpha+gamma = 0, gamma != 0, a in R"});
  v.push_back({"T7:((A_{1,1}+2A)^0,I_{(1,2)}):r", "(A_{1,1}+2A)^0", "I_{(1,2)}", Side::primal, {},
               {T("a", 1, 1), T("zeta", 1, 3), T("eta", 3, 1), W("d/2", 3, 3)}, {}, "a,d in R"});
  v.push_back({"T7:((A_{1,1}+2A)^1,I_{(1,2)}):r", "(A_{1,1}+2A)^1", "I_{(1,2)}", Side::primal, {},
               {T("a", 1, 1)}, {}, "a in R"});
  v.push_back({"T7:((A_{1,1}+2A)^2,I_{(1,2)}):r+", "(A_{1,1}+2A)^2", "I_{(1,2)}", Side::primal, {},
               {T("a", 1, 1), T("zeta", 1, 2), T("zeta", 2, 1), T("zeta", 1, 3), T("zeta", 3, 1)}, {},
               "a in R, upper sign"});
  v.push_back({"T7:((A_{1,1}+2A)^2,I_{(1,2)}):r-", "(A_{1,1}+2A)^2", "I_{(1,2)}", Side::primal, {},
               {T("a", 1, 1), T("zeta", 1, 2), T("zeta", 2, 1), T("-zeta", 1, 3), T("-zeta", 3, 1)}, {},
               "a in R, lower sign"});
  return v;
}

} // namespace

const std::vector<GoldenR>& golden_r_rows() {
  static const std::vector<GoldenR> rows = make_r_rows();
  return rows;
}

const std::vector<std::string>& known_non_poisson_columns() {
  // Both (C^1_{1/2}, C^1_{1/2,eps}) columns fail the graded Jacobi identity
  // as printed: with eps = 1 the defect J(y,psi,psi) on the primal group
  // equals 2(1-exp(-x))(1+exp(-x)) != 0, and J(x~,psi~,psi~) on the dual
  // group equals (1-exp(y~))(2+2*exp(-y~)) != 0. The entries themselves are
  // reproduced exactly; no choice of the open sign conventions makes these
  // columns Poisson while keeping the other 47 columns as printed.
  static const std::vector<std::string> ids = {
      "T11:(C^1_{1/2},C^1_{1/2,eps}):G:axioms",
      "T11:(C^1_{1/2},C^1_{1/2,eps}):G~:axioms",
  };
  return ids;
}

// ---- builders -------------------------------------------------------------

SuperAlgebra bind_algebra(const std::string& name, const std::vector<GBind>& bind) {
  SuperAlgebra a = registry(name);
  std::vector<std::pair<SymId, Rational>> bs;
  for (const auto& b : bind)
    if (SymbolTable::instance().contains(b.param)) bs.push_back({sym(b.param), Rational(b.num, b.den)});
  return bs.empty() ? a : a.bind_params(bs);
}

SuperBialgebra golden_bialgebra(const GoldenR& row) {
  return make_bialgebra(bind_algebra(row.primal, row.bind), bind_algebra(row.dual, row.bind));
}

static Scalar bound_coeff(const char* text, const std::vector<GBind>& bind) {
  Scalar s = parse_scalar(text);
  for (const auto& b : bind) {
    SymId id = sym(b.param);
    if (!s.depends_on(id)) continue;
    if (SymbolTable::instance().is_odd(id))
      s = s.substitute_odd(id, Rational(b.num, b.den), id);
    else
      s = s.substitute_param(id, Rational(b.num, b.den));
  }
  return s;
}

SMatrix build_tensor2(const SuperAlgebra& alg, const std::vector<GTerm>& terms,
                      const std::vector<GBind>& bind) {
  SMatrix m(alg.dim, alg.dim);
  m.set_gradings(alg.grading, alg.grading);
  for (const auto& t : terms) {
    Scalar c = bound_coeff(t.coeff, bind);
    if (t.wedge)
      m = m + wedge2(alg, t.i - 1, t.j - 1).scaled(c);
    else
      m.at(t.i - 1, t.j - 1) += c;
  }
  return m;
}

Tensor3 build_tensor3(const SuperAlgebra& alg, const std::vector<GTerm3>& terms,
                      const std::vector<GBind>& bind) {
  Tensor3 t(alg.dim);
  for (const auto& w : terms) {
    Scalar c = bound_coeff(w.coeff, bind);
    Tensor3 base = wedge3(alg, w.i - 1, w.j - 1, w.k - 1);
    for (std::size_t n = 0; n < base.a.size(); ++n) t.a[n] += c * base.a[n];
  }
  return t;
}

SMatrix parse_matrix(int rows, int cols, const std::string& text) {
  SMatrix m(rows, cols);
  std::stringstream ss(text);
  std::string rowtext;
  int i = 0;
  while (std::getline(ss, rowtext, ';')) {
    std::stringstream rs(rowtext);
    std::string cell;
    int j = 0;
    while (std::getline(rs, cell, ',')) {
      m.at(i, j) = parse_scalar(cell);
      ++j;
    }
    if (j != cols) throw std::invalid_argument("matrix row width mismatch");
    ++i;
  }
  if (i != rows) throw std::invalid_argument("matrix row count mismatch");
  return m;
}

// ---- checks ----------------------------------------------------------------

std::vector<CheckResult> check_golden_r() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_r_rows()) {
    CheckResult res{row.id, true, ""};
    try {
      SuperBialgebra b = golden_bialgebra(row);
      const SuperAlgebra& acting = row.side == Side::primal ? b.primal : b.dual;
      SMatrix r = build_tensor2(acting, row.r, row.bind);
      if (!solves_coboundary(b, row.side, r)) {
        res.ok = false;
        res.detail = "tabulated r does not solve the coboundary equation";
      } else {
        SolutionSet set = solve_coboundary(b, row.side);
        if (!in_solution_set(set, b, r)) {
          res.ok = false;
          res.detail = "tabulated r not in the solved solution set";
        }
        Tensor3 sch = schouten(r, acting);
        Tensor3 expect = build_tensor3(acting, row.sch, row.bind);
        if (!(sch == expect)) {
          res.ok = false;
          res.detail += std::string(res.detail.empty() ? "" : "; ") +
                        "Schouten bracket mismatch: got " + sch.str(acting);
        }
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_golden_fields() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_field_rows()) {
    CheckResult res{row.id, true, ""};
    try {
      SuperAlgebra alg = bind_algebra(row.algebra, row.bind);
      GroupParameterization p = group_parameterization(alg, row.dual_group);
      InvariantFields f = invariant_fields(maurer_cartan(p));
      const int n = alg.dim;
      struct Item {
        const char* tag;
        const SMatrix* got;
        const char* want;
      } items[] = {{"XLl", &f.XL_l, row.XLl},
                   {"XLr", &f.XL_r, row.XLr},
                   {"XRl", &f.XR_l, row.XRl},
                   {"XRr", &f.XR_r, row.XRr}};
      for (const auto& it : items) {
        SMatrix want = parse_matrix(n, n, it.want);
        if (!(*it.got == want)) {
          res.ok = false;
          res.detail += std::string(res.detail.empty() ? "" : "; ") + it.tag + " mismatch: got\n" +
                        it.got->str();
        }
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

namespace {

PoissonTable golden_table(const GoldenPoisson& row, Structure st) {
  SuperAlgebra group_alg = bind_algebra(row.group_side == Side::primal ? row.primal : row.dual, row.bind);
  GroupParameterization p = group_parameterization(group_alg, row.group_side == Side::dual);
  InvariantFields f = invariant_fields(maurer_cartan(p));
  SMatrix r = build_tensor2(group_alg, row.r, row.bind);
  return sklyanin(f, r, st);
}

} // namespace

std::vector<CheckResult> check_golden_poisson() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_poisson_rows()) {
    CheckResult res{row.id, true, ""};
    try {
      bool need[3] = {false, false, false};
      for (const auto& e : row.entries) need[static_cast<int>(e.st)] = true;
      PoissonTable tables[3];
      for (int s = 0; s < 3; ++s)
        if (need[s]) tables[s] = golden_table(row, static_cast<Structure>(s));
      for (const auto& e : row.entries) {
        const PoissonTable& t = tables[static_cast<int>(e.st)];
        Scalar got = t.bracket.at(e.mu - 1, e.nu - 1);
        Scalar want = bound_coeff(e.expr, row.bind);
        if (!(got == want)) {
          res.ok = false;
          std::string tag = e.st == Structure::full ? "" : (e.st == Structure::L ? "^L" : "^R");
          res.detail += std::string(res.detail.empty() ? "" : "; ") + "{" + std::to_string(e.mu) + "," +
                        std::to_string(e.nu) + "}" + tag + " = " + got.str() + " expected " + want.str();
        }
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_golden_axioms() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_poisson_rows()) {
    CheckResult res{std::string(row.id) + ":axioms", true, ""};
    try {
      // Rows quoting eps (or beta standing in for eps) hold for the values
      // +-1 only; the Jacobi identity is quadratic in them, so check both
      // sign instances. Everything else is checked fully symbolically.
      std::vector<std::vector<GBind>> instances;
      bool sign_symbol = false;
      for (const auto& t : row.r)
        if (std::string(t.coeff).find("eps") != std::string::npos) sign_symbol = true;
      if (std::string(row.dual).find("eps") != std::string::npos) sign_symbol = true;
      if (std::string(row.comment).find("beta = eps") != std::string::npos) {
        for (long v : {1L, -1L}) {
          auto b = row.bind;
          b.push_back({"beta", v, 1});
          instances.push_back(b);
        }
      } else if (sign_symbol) {
        for (long v : {1L, -1L}) {
          auto b = row.bind;
          b.push_back({"eps", v, 1});
          instances.push_back(b);
        }
      } else {
        instances.push_back(row.bind);
      }
      for (const auto& bind : instances) {
        GoldenPoisson inst = row;
        inst.bind = bind;
        SuperAlgebra group_alg =
            bind_algebra(row.group_side == Side::primal ? row.primal : row.dual, bind);
        SMatrix r = build_tensor2(group_alg, row.r, bind);
        bool cybe = schouten(r, group_alg).is_zero();
        for (Structure st : {Structure::full, Structure::L, Structure::R}) {
          if (st != Structure::full && !cybe) continue;
          PoissonTable t = golden_table(inst, st);
          ValidationReport rep = poisson_axiom_check(t);
          if (!rep.empty()) {
            res.ok = false;
            res.detail += std::string(res.detail.empty() ? "" : "; ") + "structure " +
                          std::to_string(static_cast<int>(st)) + ": " + std::to_string(rep.size()) +
                          " axiom violations";
          }
        }
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_golden_classes() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_class_rows()) {
    CheckResult res{row.id, true, ""};
    try {
      const auto& rrows = golden_r_rows();
      SuperBialgebra b = [&] {
        if (row.r_row >= 0) {
          GoldenR rr = rrows[static_cast<std::size_t>(row.r_row)];
          rr.bind.insert(rr.bind.end(), row.bind.begin(), row.bind.end());
          return golden_bialgebra(rr);
        }
        auto pd = find_pair(row.pair);
        if (!pd) throw std::out_of_range("unknown pair " + std::string(row.pair));
        return make_bialgebra(bind_algebra(pd->primal, row.bind), bind_algebra(pd->dual, row.bind));
      }();
      const SuperAlgebra& acting = row.side == Side::primal ? b.primal : b.dual;
      SMatrix r(acting.dim, acting.dim);
      r.set_gradings(acting.grading, acting.grading);
      if (row.r_row >= 0) {
        GoldenR rr = rrows[static_cast<std::size_t>(row.r_row)];
        rr.bind.insert(rr.bind.end(), row.bind.begin(), row.bind.end());
        r = build_tensor2(acting, rr.r, rr.bind);
      }
      ClassificationResult c = classify(b, row.side, r);
      if (c.kind != row.expect) {
        res.ok = false;
        res.detail = "kind " + kind_str(c.kind) + " expected " + kind_str(row.expect);
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_golden_bir() {
  std::vector<CheckResult> out;
  for (const auto& row : golden_bir_rows()) {
    CheckResult res{row.id, true, ""};
    try {
      auto pd = find_pair(row.pair);
      if (!pd) throw std::out_of_range("unknown pair " + std::string(row.pair));
      SuperBialgebra b = make_bialgebra(bind_algebra(pd->primal, row.bind), bind_algebra(pd->dual, row.bind));
      BiRResult bi = bi_r_matrix_check(b);
      if (bi.primal.consistent != row.primal_coboundary || bi.dual.consistent != row.dual_coboundary) {
        res.ok = false;
        res.detail = std::string("got primal=") + (bi.primal.consistent ? "coboundary" : "empty") +
                     " dual=" + (bi.dual.consistent ? "coboundary" : "empty");
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

} // namespace sbg
