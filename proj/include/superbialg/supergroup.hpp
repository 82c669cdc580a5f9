/*
 * supergroup.hpp
 * --------------
 * Exponential-coordinate supergroups: Maurer-Cartan forms by adjoint
 * transport of generators through the ordered product of exponentials,
 * left/right invariant supervector fields, and Sklyanin Poisson
 * superbrackets on the coordinate functions.
 *
 * The dual group uses its own sign conventions (no (-1)^i factor on the
 * forms, (-1)^{|j||nu|} between left- and right-derivative fields, and a
 * (-1)^i prefactor in the bracket); see docs/conventions.md.
 */
#pragma once

#include "superbialg/yangbaxter.hpp"

namespace sbg {

struct GroupParameterization {
  SuperAlgebra alg;
  std::vector<SymId> coords; // one coordinate per basis element, product order
  bool dual = false;
};

GroupParameterization group_parameterization(const SuperAlgebra& alg, bool dual);

struct MaurerCartanForms {
  GroupParameterization param;
  SMatrix L_l, R_l; // rows = coordinate, cols = algebra index
  SMatrix L_r, R_r; // rows = algebra index, cols = coordinate
};

MaurerCartanForms maurer_cartan(const GroupParameterization& p);

struct InvariantFields {
  GroupParameterization param;
  // rows = algebra index j, cols = coordinate nu (coefficient of d/dx^nu)
  SMatrix XL_l, XL_r, XR_l, XR_r;
};

InvariantFields invariant_fields(const MaurerCartanForms& m);

enum class Structure { full, L, R };

struct PoissonTable {
  GroupParameterization param;
  Structure structure = Structure::full;
  SMatrix bracket; // bracket.at(mu, nu) = {x^mu, x^nu}
};

// Sklyanin superbracket on coordinates. r must be graded skew-symmetric; the
// L and R structures additionally require [[r,r]] = 0.
PoissonTable sklyanin(const InvariantFields& fields, const SMatrix& r, Structure structure);

// Graded antisymmetry on all pairs and graded Jacobi on all triples.
ValidationReport poisson_axiom_check(const PoissonTable& t);

// First-order coefficients of {x^mu,x^nu} at the origin: the linearization
// matrices D_sigma with entries d/dx^sigma {x^mu,x^nu}|_0.
std::vector<SMatrix> origin_linearization(const PoissonTable& t);

} // namespace sbg
