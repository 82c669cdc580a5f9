/*
 * bialgebra.hpp
 * -------------
 * Dual pairs (g, g~) as Lie super-bialgebras: the mixed super Jacobi
 * identity, the cocommutator, the one-cocycle condition and the Drinfeld
 * double with its invariant pairing.
 *
 * Index conventions: the dual algebra stores f~^{ij}_k as fc(k,i,j), so the
 * same container serves both bases.
 */
#pragma once

#include "superbialg/superalgebra.hpp"

namespace sbg {

struct SuperBialgebra {
  std::string name;
  SuperAlgebra primal; // f^k_{ij}
  SuperAlgebra dual;   // f~^{ij}_k

  int dim() const { return primal.dim; }
  const std::vector<Parity>& grading() const { return primal.grading; }
};

SuperBialgebra make_bialgebra(const SuperAlgebra& primal, const SuperAlgebra& dual, std::string name = "");
SuperBialgebra bialgebra_from_pair(const PairDescriptor& pd);
SuperBialgebra bialgebra_from_pair_name(const std::string& name);

// Eq. (19); empty report iff the pair is a Lie super-bialgebra.
ValidationReport mixed_jacobi_check(const SuperBialgebra& b);

// Cocommutator matrices D_i with delta(X_i) = D_i^{jk} X_j (x) X_k,
// D_i^{jk} = (-1)^{jk} f~^{jk}_i (Eq. 18 with the inner-product sign applied).
std::vector<SMatrix> cocommutator(const SuperBialgebra& b);

// Tensor-square adjoint action used by the one-cocycle condition:
// (A_a T)^{jk} = f^j_{am} T^{mk} + (-1)^{ja} f^k_{am} T^{jm}.
SMatrix tensor2_action(const SuperAlgebra& alg, int a, const SMatrix& T);

// Eq. (5) on all basis pairs.
ValidationReport cocycle_check(const SuperBialgebra& b);

// Drinfeld double D = g (+) g~ with the cross bracket of Eq. (17).
SuperAlgebra drinfeld_double(const SuperBialgebra& b);

// Ad-invariance of the canonical pairing of Eq. (15) under the double.
ValidationReport pairing_invariance_check(const SuperBialgebra& b);

} // namespace sbg
