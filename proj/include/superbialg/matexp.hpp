/*
 * matexp.hpp
 * ----------
 * Closed-form exp(u*M) for small matrices with parameter-rational entries.
 * Supported spectra: nilpotent blocks, 1x1 blocks, and 2x2 blocks whose
 * traceless part squares to (a perfect square) * I -- which covers every
 * adjoint block of the catalog (real, Jordan and complex-pair eigenvalues).
 */
#pragma once

#include "superbialg/smatrix.hpp"

namespace sbg {

struct UnsupportedSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exp(u*M); M square, entries parameter-rational and free of u; u an even
// coordinate. The result satisfies E(0) = I and dE/du = M*E.
SMatrix matrix_exponential(const SMatrix& M, SymId u);

} // namespace sbg
