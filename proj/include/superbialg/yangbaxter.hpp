/*
 * yangbaxter.hpp
 * --------------
 * The coboundary equation for r-matrices, the graded Schouten bracket,
 * classification (triangular / quasi-triangular / factorizable), bi-r-matrix
 * status and the isomorphism residual.
 */
#pragma once

#include "superbialg/bialgebra.hpp"

namespace sbg {

enum class Side { primal, dual };

// ---- generic exact linear algebra over the parameter field -------------

struct LinearSolution {
  bool consistent = true;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
  std::vector<ParamPoly> pivot_constraints;
  std::string witness; // offending equation when inconsistent
};

LinearSolution solve_linear(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs);

// ---- coboundary problem -------------------------------------------------

// LHS of Eq. (21)/(22): M_i^st r + (-1)^l r M_i with M_i the adjoint of the
// acting side; the (-1)^l sign sits inside the second contraction.
SMatrix coboundary_apply(const SuperAlgebra& acting, const SMatrix& r, int i);

// Targets: primal side Y~_i with entries -f~^{jk}_i, dual side Y^i with
// entries -f^i_{jk}.
std::vector<SMatrix> coboundary_targets(const SuperBialgebra& b, Side side);

struct SolutionSet {
  bool consistent = false;
  Side side = Side::primal;
  int dim = 0;
  SMatrix particular;
  std::vector<SMatrix> homogeneous;
  std::vector<Parity> hom_parity; // parity of each free coefficient
  std::vector<ParamPoly> constraints;
  std::string witness;

  bool trivial_only() const { return consistent && particular.is_zero() && homogeneous.empty(); }
};

SolutionSet solve_coboundary(const SuperBialgebra& b, Side side);

// Exact check that r solves the side's coboundary equation.
bool solves_coboundary(const SuperBialgebra& b, Side side, const SMatrix& r);

// Structural membership: r = particular + sum c_n h_n for coefficients c_n
// of the right parity (c_n may involve free symbols such as a, b, zeta).
bool in_solution_set(const SolutionSet& set, const SuperBialgebra& b, const SMatrix& r);

// Projection onto graded skew-symmetric members of the set.
SolutionSet skew_reduce(const SolutionSet& set, const SuperBialgebra& b);

// ---- tensors ------------------------------------------------------------

struct Tensor3 {
  int dim = 0;
  std::vector<Scalar> a;
  Tensor3() = default;
  explicit Tensor3(int d) : dim(d), a(static_cast<std::size_t>(d * d * d)) {}
  Scalar& at(int i, int j, int k) { return a[static_cast<std::size_t>((i * dim + j) * dim + k)]; }
  const Scalar& at(int i, int j, int k) const { return a[static_cast<std::size_t>((i * dim + j) * dim + k)]; }
  bool is_zero() const;
  bool operator==(const Tensor3& o) const { return dim == o.dim && a == o.a; }
  Tensor3 operator-(const Tensor3& o) const;
  std::string str(const SuperAlgebra& alg) const;
};

// Wedge conventions (fixed by the three-fold expansion used in the tables):
// X_i ^ X_j = X_i (x) X_j - (-1)^{ij} X_j (x) X_i.
SMatrix wedge2(const SuperAlgebra& alg, int i, int j);
Tensor3 wedge3(const SuperAlgebra& alg, int i, int j, int k);

// Graded Schouten bracket [[r,r]].
Tensor3 schouten(const SMatrix& r, const SuperAlgebra& alg);

// Super symmetric part r_12 + r_21 (as a coefficient matrix).
SMatrix supersym_part(const SMatrix& r, const SuperAlgebra& alg);
bool is_super_skew(const SMatrix& r, const SuperAlgebra& alg);

// Invariance of 2- and 3-tensors under the algebra action.
bool invariant2(const SuperAlgebra& alg, const SMatrix& T);
bool invariant3(const SuperAlgebra& alg, const Tensor3& T);

// ---- classification -------------------------------------------------------

enum class RKind { triangular, quasi_triangular, factorizable, coboundary_other, not_coboundary };
std::string kind_str(RKind k);

struct ClassificationResult {
  RKind kind = RKind::not_coboundary;
  SMatrix r;
  Tensor3 schouten_bracket;
  SMatrix symmetric_part;
  bool skew = false;
  bool cybe = false; // [[r,r]] == 0
  std::vector<std::string> notes;
  std::vector<std::string> factorizable_constraints;
};

ClassificationResult classify(const SuperBialgebra& b, Side side, const SMatrix& r);

struct BiRResult {
  SolutionSet primal;
  SolutionSet dual;
  bool is_bi_r = false;
};
BiRResult bi_r_matrix_check(const SuperBialgebra& b);

// Isomorphism residual of Eq. (24): alpha maps g -> g'; zero residual iff
// (alpha (x) alpha) r - r' is g'-invariant.
struct ResidualReport {
  bool zero = false;
  std::vector<SMatrix> residuals; // per basis index of g'
};
ResidualReport isomorphism_residual(const SMatrix& alpha, const SMatrix& r, const SMatrix& rprime,
                                    const SuperAlgebra& target);

} // namespace sbg
