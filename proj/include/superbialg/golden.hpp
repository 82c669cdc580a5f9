/*
 * golden.hpp
 * ----------
 * Embedded regression data: every r-matrix and Schouten bracket of the
 * classification tables, the invariant-field tables, and the Poisson
 * superbracket tables, together with the verification engine that recomputes
 * them from scratch. The row ids cite table and row for traceability.
 */
#pragma once

#include "superbialg/supergroup.hpp"

namespace sbg {

struct GBind {
  const char* param;
  long num;
  long den = 1;
};

struct GTerm { // coefficient * X_i (x) X_j, or coefficient * X_i ^ X_j
  const char* coeff;
  int i, j; // 1-based
  bool wedge = false;
};

struct GTerm3 { // coefficient * X_i ^ X_j ^ X_k
  const char* coeff;
  int i, j, k; // 1-based
};

struct GoldenR {
  const char* id;
  const char* primal;
  const char* dual;
  Side side;
  std::vector<GBind> bind;
  std::vector<GTerm> r;
  std::vector<GTerm3> sch;
  const char* comment;
};

struct GoldenFields {
  const char* id;
  const char* algebra;
  bool dual_group;
  std::vector<GBind> bind;
  // ';'-separated rows, ','-separated entries; rows indexed by the algebra
  // basis, columns by the coordinates.
  const char* XLl;
  const char* XLr;
  const char* XRl;
  const char* XRr;
};

struct GEntry {
  Structure st;
  int mu, nu; // 1-based coordinates
  const char* expr;
};

struct GoldenPoisson {
  const char* id;
  const char* primal;
  const char* dual;
  Side group_side; // which group the brackets live on
  std::vector<GBind> bind;
  std::vector<GTerm> r; // skew-reduced r on that side
  std::vector<GEntry> entries;
  const char* comment;
};

struct GoldenClass {
  const char* id;
  const char* pair; // catalog pair name
  std::vector<GBind> bind;
  Side side;
  int r_row = -1;   // index into golden_r_rows() providing the representative r (-1: r = 0)
  RKind expect;
};

struct GoldenBiR {
  const char* id;
  const char* pair;
  std::vector<GBind> bind;
  bool primal_coboundary;
  bool dual_coboundary;
};

const std::vector<GoldenR>& golden_r_rows();
const std::vector<GoldenFields>& golden_field_rows();
const std::vector<GoldenPoisson>& golden_poisson_rows();
const std::vector<GoldenClass>& golden_class_rows();
const std::vector<GoldenBiR>& golden_bir_rows();

// Published bracket columns that are reproduced entry-for-entry but are not
// graded Poisson structures as printed (the violation witness is recorded in
// docs/conventions.md). The axiom check reports them as failures; the ids
// here let callers distinguish the documented defects from regressions.
const std::vector<std::string>& known_non_poisson_columns();

// ---- builders ----------------------------------------------------------

SuperAlgebra bind_algebra(const std::string& name, const std::vector<GBind>& bind);
SuperBialgebra golden_bialgebra(const GoldenR& row);
SMatrix build_tensor2(const SuperAlgebra& alg, const std::vector<GTerm>& terms,
                      const std::vector<GBind>& bind);
Tensor3 build_tensor3(const SuperAlgebra& alg, const std::vector<GTerm3>& terms,
                      const std::vector<GBind>& bind);
SMatrix parse_matrix(int rows, int cols, const std::string& text);

// ---- checks (one result line per golden row) ----------------------------

struct CheckResult {
  std::string id;
  bool ok;
  std::string detail;
};

std::vector<CheckResult> check_golden_r();        // criteria 2 and 3
std::vector<CheckResult> check_golden_fields();   // criterion 5
std::vector<CheckResult> check_golden_poisson();  // criterion 6
std::vector<CheckResult> check_golden_axioms();   // criterion 7
std::vector<CheckResult> check_golden_classes();  // criterion 4
std::vector<CheckResult> check_golden_bir();      // criterion 4 (bi-r statuses)

} // namespace sbg
