/*
 * superalgebra.hpp
 * ----------------
 * Finite-dimensional Lie superalgebras from structure constants, adjoint
 * matrices, and the built-in catalog of two- and three-dimensional algebras
 * and dual pairs.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superbialg/smatrix.hpp"

namespace sbg {

struct BracketEntry {
  int i, j, k;     // [X_i, X_j] contains coeff * X_k (1-based in files, 0-based here)
  Scalar coeff;
};

struct SuperAlgebra {
  std::string name;
  int dim = 0;
  std::vector<Parity> grading;
  std::vector<Scalar> f;                  // f[k][i][j] = f^k_{ij}
  std::vector<ParamPoly> constraints;     // each must stay nonzero
  std::vector<std::string> side_conditions; // informational, e.g. "p >= 0"
  bool dual_basis = false;                // upper-index basis (duals)

  Scalar& fc(int k, int i, int j) { return f[static_cast<std::size_t>((k * dim + i) * dim + j)]; }
  const Scalar& fc(int k, int i, int j) const { return f[static_cast<std::size_t>((k * dim + i) * dim + j)]; }

  int bosonic() const;
  int fermionic() const;
  std::string type_string() const; // "(m,n)"

  // Installs [X_i,X_j] = coeff X_k together with the super-antisymmetric
  // partner entry; i == j only for odd i.
  void set_bracket(int i, int j, int k, const Scalar& coeff);

  SuperAlgebra bind_params(const std::vector<std::pair<SymId, Rational>>& binding) const;
};

struct Violation {
  std::string rule; // "antisymmetry" | "grading" | "jacobi" | ...
  std::vector<int> indices;
  Scalar value;
};
using ValidationReport = std::vector<Violation>;

std::string report_str(const ValidationReport& r);

// Eqs. (2), (3), (4): super antisymmetry, grading consistency, super Jacobi.
ValidationReport validate(const SuperAlgebra& alg);

// Adjoint matrix of Eq. (21): (X_i)_l^k = -f^k_{il}; rows l, cols k.
SMatrix adjoint(const SuperAlgebra& alg, int i);

// Plain ad-action matrix A[k][l] = f^k_{il} (transport of coefficient vectors).
SMatrix ad_matrix(const SuperAlgebra& alg, int i);

// ---- catalog ----------------------------------------------------------

struct PairDescriptor {
  std::string name;        // e.g. "(B,(A_{1,1}+A))"
  std::string primal;      // registry name of g
  std::string dual;        // registry name of g~
  std::string type;        // "(1,1)" | "(2,1)" | "(1,2)"
  std::string comment;     // parameter conditions as printed in the tables
  // bindings the pair only exists at (e.g. p = 1/2 for (C^1_p,(2A_{1,1}+A).ii))
  std::vector<std::pair<std::string, Rational>> pinned;
};

std::vector<std::string> registry_names();
bool registry_has(const std::string& name);
SuperAlgebra registry(const std::string& name);

const std::vector<PairDescriptor>& registry_pairs();
std::optional<PairDescriptor> find_pair(const std::string& name);

// JSON import/export of the algebra file format.
std::string algebra_to_json(const SuperAlgebra& alg);
SuperAlgebra algebra_from_json(const std::string& text);

} // namespace sbg
