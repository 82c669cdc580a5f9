/*
 * golden_tables.cpp
 * -----------------
 * Invariant-field columns, Poisson superbracket columns, classification and
 * bi-r-matrix expectations.
 */
#include "superbialg/golden.hpp"

namespace sbg {

namespace {

GTerm T(const char* c, int i, int j) { return {c, i, j, false}; }
GTerm W(const char* c, int i, int j) { return {c, i, j, true}; }

std::vector<GoldenFields> make_field_rows() {
  std::vector<GoldenFields> v;
  // ---- Table 8 ------------------------------------------------------------
  v.push_back({"T8:B", "B", false, {},
               "1,-psi;0,-1", "1,-psi;0,-1", "1,0;0,-exp(-x)", "1,0;0,-exp(-x)"});
  v.push_back({"T8:(A_{1,1}+A)~", "(A_{1,1}+A)", true, {},
               "1,0;1/2*psi~,1", "1,0;1/2*psi~,-1", "1,0;-1/2*psi~,1", "1,0;-1/2*psi~,-1"});
  v.push_back({"T8:(A_{1,1}+A).i~", "(A_{1,1}+A).i", true, {},
               "1,0;-1/2*psi~,1", "1,0;-1/2*psi~,-1", "1,0;1/2*psi~,1", "1,0;1/2*psi~,-1"});
  // ---- Table 9 (primal groups) ---------------------------------------------
  v.push_back({"T9:(2A_{1,1}+A)", "(2A_{1,1}+A)", false, {},
               "1,0,0;0,1,0;-1/2*psi,0,-1", "1,0,0;0,1,0;1/2*psi,0,-1",
               "1,0,0;0,1,0;1/2*psi,0,-1", "1,0,0;0,1,0;-1/2*psi,0,-1"});
  v.push_back({"T9:(B+A_{1,1})", "(B+A_{1,1})", false, {},
               "1,0,-psi;0,1,0;0,0,-1", "1,0,-psi;0,1,0;0,0,-1",
               "1,0,0;0,1,0;0,0,-exp(-x)", "1,0,0;0,1,0;0,0,-exp(-x)"});
  v.push_back({"T9:C^1_p", "C^1_p", false, {},
               "1,-y,-p*psi;0,1,0;0,0,-1", "1,-y,-p*psi;0,1,0;0,0,-1",
               "1,0,0;0,exp(-x),0;0,0,-exp(-p*x)", "1,0,0;0,exp(-x),0;0,0,-exp(-p*x)"});
  v.push_back({"T9:C^1_{1/2}", "C^1_{1/2}", false, {},
               "1,-y,-1/2*psi;0,1,0;0,-1/2*psi,-1", "1,-y,-1/2*psi;0,1,0;0,1/2*psi,-1",
               "1,0,0;0,exp(-x),0;0,1/2*psi*exp(-1/2*x),-exp(-1/2*x)",
               "1,0,0;0,exp(-x),0;0,-1/2*psi*exp(-1/2*x),-exp(-1/2*x)"});
  v.push_back({"T9:(A_{1,1}+2A)^0", "(A_{1,1}+2A)^0", false, {},
               "1,0,0;-1/2*psi,-1,0;0,0,-1", "1,0,0;1/2*psi,-1,0;0,0,-1",
               "1,0,0;1/2*psi,-1,0;0,0,-1", "1,0,0;-1/2*psi,-1,0;0,0,-1"});
  v.push_back({"T9:(A_{1,1}+2A)^1", "(A_{1,1}+2A)^1", false, {},
               "1,0,0;-1/2*psi,-1,0;-1/2*chi,0,-1", "1,0,0;1/2*psi,-1,0;1/2*chi,0,-1",
               "1,0,0;1/2*psi,-1,0;1/2*chi,0,-1", "1,0,0;-1/2*psi,-1,0;-1/2*chi,0,-1"});
  v.push_back({"T9:(A_{1,1}+2A)^2", "(A_{1,1}+2A)^2", false, {},
               "1,0,0;-1/2*psi,-1,0;1/2*chi,0,-1", "1,0,0;1/2*psi,-1,0;-1/2*chi,0,-1",
               "1,0,0;1/2*psi,-1,0;-1/2*chi,0,-1", "1,0,0;-1/2*psi,-1,0;1/2*chi,0,-1"});
  v.push_back({"T9:C^2_p", "C^2_p", false, {},
               "1,-psi,-p*chi;0,-1,0;0,0,-1", "1,-psi,-p*chi;0,-1,0;0,0,-1",
               "1,0,0;0,-exp(-x),0;0,0,-exp(-p*x)", "1,0,0;0,-exp(-x),0;0,0,-exp(-p*x)"});
  v.push_back({"T9:C^3", "C^3", false, {},
               "1,-chi,0;0,-1,0;0,0,-1", "1,-chi,0;0,-1,0;0,0,-1",
               "1,0,0;0,-1,0;0,x,-1", "1,0,0;0,-1,0;0,x,-1"});
  v.push_back({"T9:C^4", "C^4", false, {},
               "1,-chi-psi,-chi;0,-1,0;0,0,-1", "1,-chi-psi,-chi;0,-1,0;0,0,-1",
               "1,0,0;0,-exp(-x),0;0,x*exp(-x),-exp(-x)", "1,0,0;0,-exp(-x),0;0,x*exp(-x),-exp(-x)"});
  v.push_back({"T9:C^5_p", "C^5_p", false, {},
               "1,-p*psi-chi,psi-p*chi;0,-1,0;0,0,-1", "1,-p*psi-chi,psi-p*chi;0,-1,0;0,0,-1",
               "1,0,0;0,-exp(-p*x)*cos(x),-exp(-p*x)*sin(x);0,exp(-p*x)*sin(x),-exp(-p*x)*cos(x)",
               "1,0,0;0,-exp(-p*x)*cos(x),-exp(-p*x)*sin(x);0,exp(-p*x)*sin(x),-exp(-p*x)*cos(x)"});
  // ---- Table 10 (dual groups) ------------------------------------------------
  v.push_back({"T10:(B+A_{1,1}).i~", "(B+A_{1,1}).i", true, {},
               "1,0,0;0,1,-psi~;0,0,1", "1,0,0;0,1,-psi~;0,0,-1",
               "1,0,0;0,1,0;0,0,exp(-y~)", "1,0,0;0,1,0;0,0,-exp(-y~)"});
  v.push_back({"T10:(2A_{1,1}+A)~", "(2A_{1,1}+A)", true, {},
               "1,0,0;0,1,0;1/2*psi~,0,1", "1,0,0;0,1,0;1/2*psi~,0,-1",
               "1,0,0;0,1,0;-1/2*psi~,0,1", "1,0,0;0,1,0;-1/2*psi~,0,-1"});
  v.push_back({"T10:(2A_{1,1}+A).i~", "(2A_{1,1}+A).i", true, {},
               "1,0,0;0,1,0;-1/2*psi~,0,1", "1,0,0;0,1,0;-1/2*psi~,0,-1",
               "1,0,0;0,1,0;1/2*psi~,0,1", "1,0,0;0,1,0;1/2*psi~,0,-1"});
  v.push_back({"T10:C^1_{-p}.i~", "C^1_{-p}.i", true, {},
               "exp(-y~),0,0;0,1,-p*psi~;0,0,1", "exp(-y~),0,0;0,1,-p*psi~;0,0,-1",
               "1,0,0;-x~,1,0;0,0,exp(-p*y~)", "1,0,0;-x~,1,0;0,0,-exp(-p*y~)"});
  v.push_back({"T10:C^1_p.i|_{p=-1/2}~", "C^1_p.i|_{p=-1/2}", true, {},
               "exp(-y~),0,0;0,1,-1/2*psi~;0,0,1", "exp(-y~),0,0;0,1,-1/2*psi~;0,0,-1",
               "1,0,0;-x~,1,0;0,0,exp(-1/2*y~)", "1,0,0;-x~,1,0;0,0,-exp(-1/2*y~)"});
  v.push_back({"T10:C^1_p.ii|_{p=-1/2}~", "C^1_p.ii|_{p=-1/2}", true, {},
               "exp(y~),0,0;0,1,1/2*psi~;0,0,1", "exp(y~),0,0;0,1,1/2*psi~;0,0,-1",
               "1,0,0;x~,1,0;0,0,exp(1/2*y~)", "1,0,0;x~,1,0;0,0,-exp(1/2*y~)"});
  v.push_back({"T10:C^1_{1/2,eps}~", "C^1_{1/2,eps}", true, {},
               "exp(-eps*y~),0,0;0,1,1/2*eps*psi~;1/2*eps*psi~*exp(-eps*y~),0,1",
               "exp(-eps*y~),0,0;0,1,1/2*eps*psi~;1/2*eps*psi~*exp(-eps*y~),0,-1",
               "1,0,0;-eps*x~,1,0;-1/2*eps*psi~*exp(-1/2*eps*y~),0,exp(1/2*eps*y~)",
               "1,0,0;-eps*x~,1,0;-1/2*eps*psi~*exp(-1/2*eps*y~),0,-exp(1/2*eps*y~)"});
  v.push_back({"T10:G~_{alpha,beta,gamma}~", "G~_{alpha,beta,gamma}", true, {},
               "1,0,0;beta*chi~+1/2*alpha*psi~,1,0;1/2*gamma*chi~,0,1",
               "1,0,0;beta*chi~+1/2*alpha*psi~,-1,0;1/2*gamma*chi~,0,-1",
               "1,0,0;-1/2*alpha*psi~,1,0;-beta*psi~-1/2*gamma*chi~,0,1",
               "1,0,0;-1/2*alpha*psi~,-1,0;-beta*psi~-1/2*gamma*chi~,0,-1"});
  return v;
}

constexpr Structure FU = Structure::full;
constexpr Structure SL = Structure::L;
constexpr Structure SR = Structure::R;

std::vector<GoldenPoisson> make_poisson_rows() {
  std::vector<GoldenPoisson> v;

  // ---- Table 11, type (2,1) --------------------------------------------------
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=0:G", "C^1_0", "C^1_{-p}.i", Side::primal, {{"p", 0}},
               {W("1", 1, 2), W("a/2", 3, 3)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 3, 3, "a"},
                {SR, 1, 2, "exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "a"},
                {FU, 1, 2, "1-exp(-x)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "p = 0"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=0:G~", "C^1_0", "C^1_{-p}.i", Side::dual, {{"p", 0}},
               {W("-1", 1, 2), W("b/2", 3, 3)},
               {{SL, 1, 2, "-exp(-y~)"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 3, 3, "b"},
                {SR, 1, 2, "-1"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "b"},
                {FU, 1, 2, "1-exp(-y~)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "p = 0"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=1:G", "C^1_p", "C^1_{-p}.i", Side::primal, {{"p", 1}},
               {W("1", 1, 2), W("zeta", 2, 3)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "psi-zeta"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "-zeta*exp(-2*x)"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-x)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "psi-zeta+zeta*exp(-2*x)"},
                {FU, 3, 3, "0"}},
               "p = 1"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=1:G~", "C^1_p", "C^1_{-p}.i", Side::dual, {{"p", 1}},
               {W("-1", 1, 2)},
               {{SL, 1, 2, "-exp(-y~)"}, {SL, 1, 3, "psi~*exp(-y~)"}, {SL, 2, 3, "0"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "-1"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-y~)"}, {FU, 1, 3, "psi~*exp(-y~)"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "p = 1"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=-1:G", "C^1_p", "C^1_{-p}.i", Side::primal, {{"p", -1}},
               {W("1", 1, 2)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "-psi"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-x)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "-psi"}, {FU, 3, 3, "0"}},
               "p = -1"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i)|p=-1:G~", "C^1_p", "C^1_{-p}.i", Side::dual, {{"p", -1}},
               {W("-1", 1, 2), W("zeta", 1, 3)},
               {{SL, 1, 2, "-exp(-y~)"}, {SL, 1, 3, "(zeta-psi~)*exp(-y~)"}, {SL, 2, 3, "0"},
                {SL, 3, 3, "0"},
                {SR, 1, 2, "-1"}, {SR, 1, 3, "zeta*exp(y~)"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-y~)"},
                {FU, 1, 3, "-psi~*exp(-y~)-zeta*exp(y~)+zeta*exp(-y~)"},
                {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "p = -1"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i):G", "C^1_p", "C^1_{-p}.i", Side::primal, {},
               {W("1", 1, 2)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "p*psi"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-x)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "p*psi"}, {FU, 3, 3, "0"}},
               "p in R-{0,1,-1}"});
  v.push_back({"T11:(C^1_p,C^1_{-p}.i):G~", "C^1_p", "C^1_{-p}.i", Side::dual, {},
               {W("-1", 1, 2)},
               {{SL, 1, 2, "-exp(-y~)"}, {SL, 1, 3, "p*psi~*exp(-y~)"}, {SL, 2, 3, "0"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "-1"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-y~)"}, {FU, 1, 3, "p*psi~*exp(-y~)"}, {FU, 2, 3, "0"},
                {FU, 3, 3, "0"}},
               "p in R-{0,1,-1}"});
  v.push_back({"T11:(C^1_{1/2},C^1_{1/2,eps}):G", "C^1_{1/2}", "C^1_{1/2,eps}", Side::primal, {},
               {W("eps", 1, 2), W("-eps/2", 3, 3)},
               {{SL, 1, 2, "eps"}, {SL, 1, 3, "0"}, {SL, 2, 3, "eps*psi"}, {SL, 3, 3, "-eps"},
                {SR, 1, 2, "eps*exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "-1/2*eps*psi*exp(-x)"},
                {SR, 3, 3, "-eps*exp(-x)"},
                {FU, 1, 2, "eps-eps*exp(-x)"}, {FU, 1, 3, "0"},
                {FU, 2, 3, "eps*psi+1/2*eps*psi*exp(-x)"}, {FU, 3, 3, "-eps+eps*exp(-x)"}},
               "eps = +-1"});
  v.push_back({"T11:(C^1_{1/2},C^1_{1/2,eps}):G~", "C^1_{1/2}", "C^1_{1/2,eps}", Side::dual, {},
               {W("-1/eps", 1, 2), W("1/(2*eps)", 3, 3)},
               {{SL, 1, 2, "-exp(-eps*y~)/eps"}, {SL, 1, 3, "-psi~*exp(-eps*y~)"}, {SL, 2, 3, "0"},
                {SL, 3, 3, "1/eps"},
                {SR, 1, 2, "-1/eps"}, {SR, 1, 3, "1/2*psi~"}, {SR, 2, 3, "0"},
                {SR, 3, 3, "exp(eps*y~)/eps"},
                {FU, 1, 2, "1/eps-exp(-eps*y~)/eps"}, {FU, 1, 3, "-1/2*psi~-psi~*exp(-eps*y~)"},
                {FU, 2, 3, "0"}, {FU, 3, 3, "1/eps-exp(eps*y~)/eps"}},
               "eps = +-1"});
  v.push_back({"T11:((B+A_{1,1}),(B+A_{1,1}).i):G", "(B+A_{1,1})", "(B+A_{1,1}).i", Side::primal, {},
               {W("1", 1, 2)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "psi"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "1"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "psi"}, {FU, 3, 3, "0"}},
               "a = 0"});
  v.push_back({"T11:((B+A_{1,1}),(B+A_{1,1}).i):G~", "(B+A_{1,1})", "(B+A_{1,1}).i", Side::dual, {},
               {W("-1", 1, 2)},
               {{SL, 1, 2, "-1"}, {SL, 1, 3, "psi~"}, {SL, 2, 3, "0"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "-1"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "psi~"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "b = 0"});
  v.push_back({"T11:(C^1_{1/2},C^1_p.i|_{p=-1/2}):G", "C^1_{1/2}", "C^1_p.i|_{p=-1/2}", Side::primal, {},
               {W("1", 1, 2)},
               {{SL, 1, 2, "1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "1/2*psi"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "1-exp(-x)"}, {FU, 1, 3, "0"}, {FU, 2, 3, "1/2*psi"}, {FU, 3, 3, "0"}},
               ""});
  v.push_back({"T11:(C^1_{1/2},C^1_p.i|_{p=-1/2}):G~", "C^1_{1/2}", "C^1_p.i|_{p=-1/2}", Side::dual, {},
               {W("-1", 1, 2), W("-1/2", 3, 3)},
               {{FU, 1, 2, "1-exp(-y~)"}, {FU, 1, 3, "1/2*psi~*exp(-y~)"}, {FU, 2, 3, "0"},
                {FU, 3, 3, "exp(-y~)-1"}},
               "quasi-triangular dual: full bracket only"});
  v.push_back({"T11:(C^1_{1/2},C^1_p.ii|_{p=-1/2}):G", "C^1_{1/2}", "C^1_p.ii|_{p=-1/2}", Side::primal,
               {},
               {W("-1", 1, 2)},
               {{SL, 1, 2, "-1"}, {SL, 1, 3, "0"}, {SL, 2, 3, "-1/2*psi"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "-exp(-x)"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "exp(-x)-1"}, {FU, 1, 3, "0"}, {FU, 2, 3, "-1/2*psi"}, {FU, 3, 3, "0"}},
               ""});
  v.push_back({"T11:(C^1_{1/2},C^1_p.ii|_{p=-1/2}):G~", "C^1_{1/2}", "C^1_p.ii|_{p=-1/2}", Side::dual,
               {},
               {W("1", 1, 2), W("1/2", 3, 3)},
               {{FU, 1, 2, "exp(y~)-1"}, {FU, 1, 3, "1/2*psi~*exp(y~)"}, {FU, 2, 3, "0"},
                {FU, 3, 3, "1-exp(y~)"}},
               "quasi-triangular dual: full bracket only"});
  v.push_back({"T11:((B+A_{1,1}),(2A_{1,1}+A)):G", "(B+A_{1,1})", "(2A_{1,1}+A)", Side::primal, {},
               {W("-1/4", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 3, 3, "-1/2"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "-1/2*exp(-2*x)"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"},
                {FU, 3, 3, "-1/2+1/2*exp(-2*x)"}},
               "a = 0"});
  v.push_back({"T11:((B+A_{1,1}),(2A_{1,1}+A)):G~", "(B+A_{1,1})", "(2A_{1,1}+A)", Side::dual, {},
               {W("1/2", 3, 3)},
               {{FU, 1, 2, "0"}, {FU, 1, 3, "-psi~"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "quasi-triangular dual: full bracket only"});
  v.push_back({"T11:((B+A_{1,1}),(2A_{1,1}+A).i):G", "(B+A_{1,1})", "(2A_{1,1}+A).i", Side::primal, {},
               {W("1/4", 3, 3)},
               {{SL, 3, 3, "1/2"}, {SR, 3, 3, "1/2*exp(-2*x)"}, {FU, 3, 3, "1/2-1/2*exp(-2*x)"},
                {FU, 1, 2, "0"}, {FU, 2, 3, "0"}},
               "a = 0"});
  v.push_back({"T11:((B+A_{1,1}),(2A_{1,1}+A).i):G~", "(B+A_{1,1})", "(2A_{1,1}+A).i", Side::dual, {},
               {W("-1/2", 3, 3)},
               {{FU, 1, 2, "0"}, {FU, 1, 3, "-psi~"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "quasi-triangular dual: full bracket only"});

  // ---- Table 12 -----------------------------------------------------------
  v.push_back({"T12:((2A_{1,1}+A),I_{(2,1)})", "(2A_{1,1}+A)", "I_{(2,1)}", Side::primal, {},
               {W("b", 1, 2)},
               {{SL, 1, 2, "b"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "b"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               "skew reduction a = d = 0, c = -b"});
  v.push_back({"T12:(C^1_{p=0},I_{(2,1)})", "C^1_0", "I_{(2,1)}", Side::primal, {},
               {W("a/2", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 3, 3, "a"}, {SR, 1, 2, "0"}, {SR, 3, 3, "a"},
                {FU, 1, 2, "0"}, {FU, 2, 3, "0"}, {FU, 3, 3, "0"}},
               ""});
  v.push_back({"T12:(C^1_{p=1},I_{(2,1)})", "C^1_p", "I_{(2,1)}", Side::primal, {{"p", 1}},
               {W("zeta", 2, 3)},
               {{SL, 1, 2, "0"}, {SL, 2, 3, "-zeta"}, {SL, 3, 3, "0"},
                {SR, 2, 3, "-zeta*exp(-2*x)"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 2, 3, "-zeta+zeta*exp(-2*x)"}, {FU, 3, 3, "0"}},
               "eta = -zeta"});
  v.push_back({"T12:(C^1_{p=1},(2A_{1,1}+A))", "C^1_p", "(2A_{1,1}+A)", Side::primal, {{"p", 1}},
               {W("zeta", 2, 3), W("-1/4", 3, 3)},
               {{SL, 2, 3, "-zeta"}, {SL, 3, 3, "-1/2"},
                {SR, 2, 3, "-zeta*exp(-2*x)"}, {SR, 3, 3, "-1/2*exp(-2*x)"},
                {FU, 1, 2, "0"}, {FU, 2, 3, "-zeta+zeta*exp(-2*x)"},
                {FU, 3, 3, "-1/2+1/2*exp(-2*x)"}},
               "eta = -zeta"});
  v.push_back({"T12:(C^1_{p=1},(2A_{1,1}+A).i)", "C^1_p", "(2A_{1,1}+A).i", Side::primal, {{"p", 1}},
               {W("zeta", 2, 3), W("1/4", 3, 3)},
               {{SL, 2, 3, "-zeta"}, {SL, 3, 3, "1/2"},
                {SR, 2, 3, "-zeta*exp(-2*x)"}, {SR, 3, 3, "1/2*exp(-2*x)"},
                {FU, 2, 3, "-zeta+zeta*exp(-2*x)"}, {FU, 3, 3, "1/2-1/2*exp(-2*x)"}},
               "eta = -zeta"});
  v.push_back({"T12:(C^1_p,(2A_{1,1}+A))", "C^1_p", "(2A_{1,1}+A)", Side::primal, {},
               {W("-1/(4*p)", 3, 3)},
               {{SL, 3, 3, "-1/(2*p)"}, {SL, 2, 3, "0"},
                {SR, 3, 3, "-exp(-2*p*x)/(2*p)"},
                {FU, 3, 3, "-1/(2*p)+exp(-2*p*x)/(2*p)"}, {FU, 2, 3, "0"}},
               "p in R-{0,1}"});
  v.push_back({"T12:(C^1_p,(2A_{1,1}+A).i)", "C^1_p", "(2A_{1,1}+A).i", Side::primal, {},
               {W("1/(4*p)", 3, 3)},
               {{SL, 3, 3, "1/(2*p)"}, {SR, 3, 3, "exp(-2*p*x)/(2*p)"},
                {FU, 3, 3, "1/(2*p)-exp(-2*p*x)/(2*p)"}},
               "p in R-{0,1}"});

  // ---- Table 13 -----------------------------------------------------------
  v.push_back({"T13:(B,(A_{1,1}+A)):G", "B", "(A_{1,1}+A)", Side::primal, {},
               {W("-1/4", 2, 2)},
               {{SL, 1, 2, "0"}, {SL, 2, 2, "-1/2"},
                {SR, 1, 2, "0"}, {SR, 2, 2, "-1/2*exp(-2*x)"},
                {FU, 1, 2, "0"}, {FU, 2, 2, "-1/2+1/2*exp(-2*x)"}},
               ""});
  v.push_back({"T13:(B,(A_{1,1}+A)):G~", "B", "(A_{1,1}+A)", Side::dual, {},
               {W("1/2", 2, 2)},
               {{FU, 1, 2, "-psi~"}, {FU, 2, 2, "0"}},
               "a = 0"});
  v.push_back({"T13:(B,(A_{1,1}+A).i):G", "B", "(A_{1,1}+A).i", Side::primal, {},
               {W("1/4", 2, 2)},
               {{SL, 1, 2, "0"}, {SL, 2, 2, "1/2"},
                {SR, 1, 2, "0"}, {SR, 2, 2, "1/2*exp(-2*x)"},
                {FU, 1, 2, "0"}, {FU, 2, 2, "1/2-1/2*exp(-2*x)"}},
               ""});
  v.push_back({"T13:(B,(A_{1,1}+A).i):G~", "B", "(A_{1,1}+A).i", Side::dual, {},
               {W("-1/2", 2, 2)},
               {{FU, 1, 2, "-psi~"}, {FU, 2, 2, "0"}},
               "a = 0"});

  // ---- Table 14, type (1,2) --------------------------------------------------
  v.push_back({"T14:(C^2_{p=0},G~_{alpha,beta,0}):G", "C^2_0", "G~_{alpha,beta,gamma}", Side::primal,
               {{"gamma", 0}},
               {W("-alpha/4", 2, 2), W("-beta", 2, 3), W("b/2", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "-beta"}, {SL, 2, 2, "-alpha/2"},
                {SL, 3, 3, "b"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"}, {SR, 2, 3, "-beta*exp(-x)"},
                {SR, 2, 2, "-1/2*alpha*exp(-2*x)"}, {SR, 3, 3, "b"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "beta*exp(-x)-beta"},
                {FU, 2, 2, "1/2*alpha*exp(-2*x)-1/2*alpha"}, {FU, 3, 3, "0"}},
               "p = 0, gamma = 0"});
  v.push_back({"T14:(C^2_{p=0},G~_{alpha,beta,0}):G~", "C^2_0", "G~_{alpha,beta,gamma}", Side::dual,
               {{"beta", 0}, {"gamma", 0}},
               {W("zeta", 1, 3), W("1/(2*alpha)", 2, 2), W("c/2", 3, 3)},
               {{FU, 1, 2, "-psi~"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "if beta = 0, alpha != 0"});
  v.push_back({"T14:(C^2_{p=-1},G~_{alpha,0,gamma}):G", "C^2_p", "G~_{alpha,beta,gamma}", Side::primal,
               {{"p", -1}, {"beta", 0}},
               {W("-alpha/4", 2, 2), T("b", 2, 3), T("b", 3, 2), W("gamma/4", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "b"}, {SL, 2, 2, "-alpha/2"},
                {SL, 3, 3, "gamma/2"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"}, {SR, 2, 3, "b"},
                {SR, 2, 2, "-1/2*alpha*exp(-2*x)"}, {SR, 3, 3, "1/2*gamma*exp(2*x)"},
                {FU, 2, 3, "0"}, {FU, 2, 2, "1/2*alpha*exp(-2*x)-1/2*alpha"},
                {FU, 3, 3, "1/2*gamma-1/2*gamma*exp(2*x)"}},
               "p = -1, beta = 0, b = c"});
  v.push_back({"T14:(C^2_{p=-1},G~_{alpha,0,gamma}):G~", "C^2_p", "G~_{alpha,beta,gamma}", Side::dual,
               {{"p", -1}, {"beta", 0}},
               {W("1/(2*alpha)", 2, 2), W("-1/(2*gamma)", 3, 3)},
               {{FU, 1, 2, "-psi~"}, {FU, 1, 3, "chi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "if alpha, gamma != 0"});
  v.push_back({"T14:(C^2_p,G~_{alpha,beta,gamma}):G", "C^2_p", "G~_{alpha,beta,gamma}", Side::primal, {},
               {W("-alpha/4", 2, 2), W("-beta/(1+p)", 2, 3), W("-gamma/(4*p)", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "-beta/(1+p)"},
                {SL, 2, 2, "-alpha/2"}, {SL, 3, 3, "-gamma/(2*p)"},
                {SR, 2, 3, "-beta*exp(-(1+p)*x)/(1+p)"}, {SR, 2, 2, "-1/2*alpha*exp(-2*x)"},
                {SR, 3, 3, "-gamma*exp(-2*p*x)/(2*p)"},
                {FU, 2, 3, "beta*exp(-(1+p)*x)/(1+p)-beta/(1+p)"},
                {FU, 2, 2, "1/2*alpha*exp(-2*x)-1/2*alpha"},
                {FU, 3, 3, "gamma*exp(-2*p*x)/(2*p)-gamma/(2*p)"}},
               "p in (-1,1]-{0}"});
  v.push_back({"T14:(C^2_p,G~_{alpha,beta,gamma}):G~", "C^2_p", "G~_{alpha,beta,gamma}", Side::dual,
               {{"beta", 0}},
               {W("1/(2*alpha)", 2, 2), W("p/(2*gamma)", 3, 3)},
               {{FU, 1, 2, "-psi~"}, {FU, 1, 3, "-p*chi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "if beta = 0, alpha, gamma != 0"});
  v.push_back({"T14:(C^3,I_{(1,2)})", "C^3", "I_{(1,2)}", Side::primal, {},
               {W("zeta", 1, 2), W("c/2", 2, 2)},
               {{SL, 1, 2, "-zeta"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 2, 2, "c"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "-zeta"}, {SR, 1, 3, "0"}, {SR, 2, 3, "0"}, {SR, 2, 2, "c"}, {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"}, {FU, 3, 3, "0"}},
               "skew member: d = 0"});
  v.push_back({"T14:(C^3,(A_{1,1}+2A)^0_{1,0,0}):G", "C^3", "(A_{1,1}+2A)^0_{1,0,0}", Side::primal, {},
               {W("b/2", 2, 2), T("-1/2", 2, 3), T("-1/2", 3, 2)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "-1/2"}, {SL, 2, 2, "b"}, {SL, 3, 3, "0"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"}, {SR, 2, 3, "-1/2"}, {SR, 2, 2, "b+x"},
                {SR, 3, 3, "0"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 2, 2, "-x"}, {FU, 3, 3, "0"}},
               "c = -1/2"});
  v.push_back({"T14:(C^3,(A_{1,1}+2A)^0_{1,0,0}):G~", "C^3", "(A_{1,1}+2A)^0_{1,0,0}", Side::dual, {},
               {W("1", 2, 3), W("n/2", 3, 3)},
               {{FU, 1, 2, "0"}, {FU, 1, 3, "-psi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "m = zeta = 0"});
  v.push_back({"T14:(C^4,G~_{alpha,beta,gamma}):G", "C^4", "G~_{alpha,beta,gamma}", Side::primal, {},
               {W("(2*(beta-alpha)-gamma)/8", 2, 2), W("(gamma-2*beta)/4", 2, 3), W("-gamma/4", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "(gamma-2*beta)/4"},
                {SL, 2, 2, "(2*(beta-alpha)-gamma)/4"}, {SL, 3, 3, "-gamma/2"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"},
                {SR, 2, 3, "1/4*(2*gamma*x+gamma-2*beta)*exp(-2*x)"},
                {SR, 2, 2, "1/2*(-gamma*x^2+(2*beta-gamma)*x+beta-alpha-1/2*gamma)*exp(-2*x)"},
                {SR, 3, 3, "-1/2*gamma*exp(-2*x)"},
                {FU, 2, 3, "1/4*((gamma-2*beta)*(1-exp(-2*x))-2*gamma*x*exp(-2*x))"},
                {FU, 2, 2,
                 "1/2*((beta-alpha-1/2*gamma)*(1-exp(-2*x))+(gamma*x^2+gamma*x-2*beta*x)*exp(-2*x))"},
                {FU, 3, 3, "1/2*gamma*(exp(-2*x)-1)"}},
               ""});
  v.push_back({"T14:(C^4,G~_{alpha,beta,gamma}):G~", "C^4", "G~_{alpha,beta,gamma}", Side::dual,
               {{"alpha", 0}, {"gamma", 0}},
               {W("1/beta", 2, 3), W("1/(2*beta)", 3, 3)},
               {{FU, 1, 2, "-psi~"}, {FU, 1, 3, "-psi~-chi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "if beta != 0, alpha = gamma = 0"});
  v.push_back({"T14:(C^5_{p=0},G~_{-gamma,0,gamma}):G", "C^5_p", "G~_{-gamma,0,gamma}", Side::primal,
               {{"p", 0}},
               {W("a/2", 2, 2), W("a/2", 3, 3), T("gamma/2", 2, 3), T("gamma/2", 3, 2)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "gamma/2"}, {SL, 2, 2, "a"},
                {SL, 3, 3, "a"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "0"}, {SR, 2, 3, "gamma*cos(x)^2-1/2*gamma"},
                {SR, 2, 2, "a-gamma*sin(x)*cos(x)"}, {SR, 3, 3, "a+gamma*sin(x)*cos(x)"},
                {FU, 2, 3, "gamma-gamma*cos(x)^2"}, {FU, 2, 2, "gamma*sin(x)*cos(x)"},
                {FU, 3, 3, "-gamma*sin(x)*cos(x)"}},
               "p = 0, b = gamma/2"});
  v.push_back({"T14:(C^5_{p=0},G~_{-gamma,0,gamma}):G~", "C^5_p", "G~_{-gamma,0,gamma}", Side::dual,
               {{"p", 0}},
               {W("-1/gamma", 2, 3)},
               {{FU, 1, 2, "chi~"}, {FU, 1, 3, "-psi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "if gamma != 0; published table prints {x~,chi~} = +psi~, inconsistent"
               " with its own invariant fields"});
  // The (gamma-alpha) pieces below differ from the published column exactly
  // as the corrected r2 cross coefficient demands (one power of p).
  v.push_back({"T14:(C^5_{p>0},G~_{alpha,0,gamma}):G", "C^5_p", "G~_{alpha,0,gamma}", Side::primal, {},
               {W("-(2*alpha*p^2+alpha+gamma)/(8*p*(1+p^2))", 2, 2),
                W("(gamma-alpha)/(4*(1+p^2))", 2, 3),
                W("-(2*gamma*p^2+alpha+gamma)/(8*p*(1+p^2))", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "(gamma-alpha)/(4*(1+p^2))"},
                {SL, 2, 2, "-(2*alpha*p^2+alpha+gamma)/(4*p*(1+p^2))"},
                {SL, 3, 3, "-(alpha+gamma+2*gamma*p^2)/(4*p*(1+p^2))"},
                {SR, 2, 3,
                 "(gamma-alpha)*exp(-2*p*x)*(2*p*sin(x)*cos(x)+2*cos(x)^2-1)/(4*(1+p^2))"},
                {SR, 2, 2,
                 "exp(-2*p*x)*(-2*p^2*(alpha*cos(x)^2+gamma-gamma*cos(x)^2)+2*p*(alpha-gamma)*sin(x)*"
                 "cos(x)-alpha-gamma)/(4*p*(1+p^2))"},
                {SR, 3, 3,
                 "exp(-2*p*x)*(-2*p^2*(alpha-alpha*cos(x)^2+gamma*cos(x)^2)-2*p*(alpha-gamma)*sin(x)*"
                 "cos(x)-alpha-gamma)/(4*p*(1+p^2))"},
                {FU, 2, 3,
                 "(gamma-alpha)*(1-exp(-2*p*x)*(2*p*sin(x)*cos(x)+2*cos(x)^2-1))/(4*(1+p^2))"},
                {FU, 2, 2,
                 "-(2*alpha*p^2+alpha+gamma+exp(-2*p*x)*(-2*p^2*(alpha*cos(x)^2+gamma-gamma*cos(x)^2)"
                 "+2*p*(alpha-gamma)*sin(x)*cos(x)-alpha-gamma))/(4*p*(1+p^2))"},
                {FU, 3, 3,
                 "-(alpha+gamma+2*gamma*p^2+exp(-2*p*x)*(-2*p^2*(alpha-alpha*cos(x)^2+gamma*cos(x)^2)"
                 "-2*p*(alpha-gamma)*sin(x)*cos(x)-alpha-gamma))/(4*p*(1+p^2))"}},
               "p > 0"});
  v.push_back({"T14:(C^5_{p>0},G~_{alpha,0,gamma}):G~", "C^5_p", "G~_{-gamma,0,gamma}", Side::dual, {},
               {W("-p/(2*gamma)", 2, 2), W("p/(2*gamma)", 3, 3), W("-1/gamma", 2, 3)},
               {{FU, 1, 2, "chi~-p*psi~"}, {FU, 1, 3, "-psi~-p*chi~"}, {FU, 2, 3, "0"},
                {FU, 2, 2, "0"}, {FU, 3, 3, "0"}},
               "if gamma != 0, alpha + gamma = 0; published table prints {x~,chi~} ="
               " psi~ - p*chi~, inconsistent with its own invariant fields"});
  v.push_back({"T14:(C^3,(A_{1,1}+2A)^2_{0,eps,0}):G", "C^3", "G~_{alpha,beta,gamma}", Side::primal,
               {{"alpha", 0}, {"gamma", 0}},
               {W("c/2", 2, 2), W("-beta/2", 3, 3)},
               {{FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "-beta*x"}, {FU, 2, 2, "beta*x^2"},
                {FU, 3, 3, "0"}},
               "beta = eps, skew member zeta = d = 0"});
  v.push_back({"T14:(C^3,(A_{1,1}+2A)^2_{0,eps,0}):G~", "C^3", "G~_{alpha,beta,gamma}", Side::dual,
               {{"alpha", 0}, {"gamma", 0}},
               {W("1/(2*beta)", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "0"}, {SL, 2, 3, "0"}, {SL, 2, 2, "0"},
                {SL, 3, 3, "1/beta"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "psi~"}, {SR, 2, 3, "0"}, {SR, 2, 2, "0"},
                {SR, 3, 3, "1/beta"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "-psi~"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "m = eta = 0, beta = eps"});
  v.push_back({"T14:((A_{1,1}+2A)^0,I_{(1,2)})", "(A_{1,1}+2A)^0", "I_{(1,2)}", Side::primal, {},
               {W("zeta", 1, 3), W("d/2", 3, 3)},
               {{SL, 1, 2, "0"}, {SL, 1, 3, "-zeta"}, {SL, 2, 3, "0"}, {SL, 2, 2, "0"},
                {SL, 3, 3, "d"},
                {SR, 1, 2, "0"}, {SR, 1, 3, "-zeta"}, {SR, 2, 3, "0"}, {SR, 2, 2, "0"},
                {SR, 3, 3, "d"},
                {FU, 1, 2, "0"}, {FU, 1, 3, "0"}, {FU, 2, 3, "0"}, {FU, 2, 2, "0"},
                {FU, 3, 3, "0"}},
               "a = 0, eta = -zeta"});
  return v;
}

std::vector<GoldenClass> make_class_rows() {
  std::vector<GoldenClass> v;
  v.push_back({"K:(B,(A_{1,1}+A)):r", "(B,(A_{1,1}+A))", {}, Side::primal, 1, RKind::triangular});
  v.push_back({"K:(B,(A_{1,1}+A)):r~", "(B,(A_{1,1}+A))", {}, Side::dual, 2, RKind::quasi_triangular});
  v.push_back({"K:(B,(A_{1,1}+A).i):r", "(B,(A_{1,1}+A).i)", {}, Side::primal, 3, RKind::triangular});
  v.push_back(
      {"K:(B,(A_{1,1}+A).i):r~", "(B,(A_{1,1}+A).i)", {}, Side::dual, 4, RKind::quasi_triangular});
  v.push_back({"K:(B,I_{(1,1)}):r=0", "(B,I_{(1,1)})", {}, Side::primal, -1, RKind::triangular});
  v.push_back({"K:((B+A_{1,1}),(2A_{1,1}+A)):r", "((B+A_{1,1}),(2A_{1,1}+A))", {{"a", 0}},
               Side::primal, 9, RKind::triangular});
  v.push_back({"K:((B+A_{1,1}),(2A_{1,1}+A)):r~", "((B+A_{1,1}),(2A_{1,1}+A))",
               {{"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}}, Side::dual, 10, RKind::quasi_triangular});
  v.push_back({"K:((B+A_{1,1}),(B+A_{1,1}).i):r", "((B+A_{1,1}),(B+A_{1,1}).i)", {{"a", 0}},
               Side::primal, 7, RKind::triangular});
  v.push_back({"K:((B+A_{1,1}),(B+A_{1,1}).i):r~", "((B+A_{1,1}),(B+A_{1,1}).i)", {{"b", 0}},
               Side::dual, 8, RKind::triangular});
  v.push_back({"K:(C^1_p,(2A_{1,1}+A)):r1", "(C^1_p,(2A_{1,1}+A))", {}, Side::primal, 13,
               RKind::triangular});
  v.push_back({"K:(C^1_p,C^1_{-p}.i):r3", "(C^1_p,C^1_{-p}.i)", {}, Side::primal, 19,
               RKind::triangular});
  v.push_back({"K:(C^1_p,C^1_{-p}.i):r~3", "(C^1_p,C^1_{-p}.i)", {}, Side::dual, 22,
               RKind::triangular});
  v.push_back({"K:(C^1_{1/2},C^1_p.i|_{p=-1/2}):r", "(C^1_{1/2},C^1_p.i|_{p=-1/2})", {}, Side::primal,
               25, RKind::triangular});
  v.push_back({"K:(C^1_{1/2},C^1_p.i|_{p=-1/2}):r~", "(C^1_{1/2},C^1_p.i|_{p=-1/2})", {}, Side::dual,
               26, RKind::quasi_triangular});
  // eps = +1 instance of the C^1_{1/2,eps} family is the .i pair
  v.push_back({"K:(C^1_{1/2},C^1_{1/2}.i):r", "(C^1_{1/2},C^1_{1/2}.i)", {{"eps", 1}}, Side::primal,
               29, RKind::triangular});
  v.push_back({"K:(C^1_{1/2},C^1_{1/2}.i):r~", "(C^1_{1/2},C^1_{1/2}.i)", {{"eps", 1}}, Side::dual, 30,
               RKind::triangular});
  v.push_back({"K:(C^3,(A_{1,1}+2A)^0_{1,0,0}):r", "(C^3,(A_{1,1}+2A)^0_{1,0,0})", {{"c", -1, 2}},
               Side::primal, 37, RKind::triangular});
  v.push_back({"K:(C^3,(A_{1,1}+2A)^0_{1,0,0}):r~", "(C^3,(A_{1,1}+2A)^0_{1,0,0})",
               {{"m", 0}, {"zeta", 0}}, Side::dual, 38, RKind::quasi_triangular});
  v.push_back({"K:(C^4,G~):r", "", {}, Side::primal, 41, RKind::triangular});
  v.push_back({"K:(C^4,G~):r~", "", {{"a", 0}}, Side::dual, 42, RKind::quasi_triangular});
  v.push_back({"K:(C^5_p,G~):r2", "", {}, Side::primal, 44, RKind::triangular});
  v.push_back({"K:(C^5_p,G~):r~", "", {{"a", 0}}, Side::dual, 45, RKind::quasi_triangular});
  v.push_back({"K:(C^2_p,G~):r3", "", {}, Side::primal, 33, RKind::triangular});
  v.push_back({"K:(C^2_p,G~):r~2", "", {{"b", 0}}, Side::dual, 35, RKind::quasi_triangular});
  v.push_back({"K:(C^3,G2_{0,eps,0}):r-skew", "", {{"d", 0}, {"zeta", 0}}, Side::primal, 39,
               RKind::triangular});
  return v;
}

std::vector<GoldenBiR> make_bir_rows() {
  std::vector<GoldenBiR> v;
  v.push_back({"BR:(B,(A_{1,1}+A))", "(B,(A_{1,1}+A))", {}, true, true});
  v.push_back({"BR:(B,(A_{1,1}+A).i)", "(B,(A_{1,1}+A).i)", {}, true, true});
  v.push_back({"BR:(C^1_p,(2A_{1,1}+A))", "(C^1_p,(2A_{1,1}+A))", {}, true, false});
  v.push_back({"BR:(C^1_p,(2A_{1,1}+A).i)", "(C^1_p,(2A_{1,1}+A).i)", {}, true, false});
  v.push_back({"BR:((B+A_{1,1}),(B+A_{1,1}).i)", "((B+A_{1,1}),(B+A_{1,1}).i)", {}, true, true});
  v.push_back({"BR:((B+A_{1,1}),(2A_{1,1}+A))", "((B+A_{1,1}),(2A_{1,1}+A))", {}, true, true});
  v.push_back({"BR:((B+A_{1,1}),(2A_{1,1}+A).i)", "((B+A_{1,1}),(2A_{1,1}+A).i)", {}, true, true});
  v.push_back({"BR:(C^1_p,C^1_{-p}.i)", "(C^1_p,C^1_{-p}.i)", {}, true, true});
  v.push_back({"BR:(C^1_{1/2},C^1_{1/2}.i)", "(C^1_{1/2},C^1_{1/2}.i)", {}, true, true});
  v.push_back({"BR:(C^1_{1/2},C^1_p.i|_{p=-1/2})", "(C^1_{1/2},C^1_p.i|_{p=-1/2})", {}, true, true});
  v.push_back({"BR:((2A_{1,1}+A),I_{(2,1)})", "((2A_{1,1}+A),I_{(2,1)})", {}, true, false});
  v.push_back({"BR:((A_{1,1}+A),I_{(1,1)})", "((A_{1,1}+A),I_{(1,1)})", {}, true, false});
  return v;
}

} // namespace

const std::vector<GoldenFields>& golden_field_rows() {
  static const std::vector<GoldenFields> rows = make_field_rows();
  return rows;
}

const std::vector<GoldenPoisson>& golden_poisson_rows() {
  static const std::vector<GoldenPoisson> rows = make_poisson_rows();
  return rows;
}

const std::vector<GoldenClass>& golden_class_rows() {
  static const std::vector<GoldenClass> rows = make_class_rows();
  return rows;
}

const std::vector<GoldenBiR>& golden_bir_rows() {
  static const std::vector<GoldenBiR> rows = make_bir_rows();
  return rows;
}

} // namespace sbg
